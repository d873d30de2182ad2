#include "skia/shade_path.hpp"

#include "skia/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace skia {

namespace {

constexpr int kArcTable = 512;

struct Segment {
    Point2 p0, p1, p2, p3;
    double t0, t1, t2, t3;

    // Barry-Goldman pyramid, t in [t1, t2]
    Point2 eval(double t) const {
        auto lerp = [](Point2 a, double ta, Point2 b, double tb, double tt) {
            const double w = (tt - ta) / (tb - ta);
            return Point2{a.x + w * (b.x - a.x), a.z + w * (b.z - a.z)};
        };
        const Point2 a1 = lerp(p0, t0, p1, t1, t);
        const Point2 a2 = lerp(p1, t1, p2, t2, t);
        const Point2 a3 = lerp(p2, t2, p3, t3, t);
        const Point2 b1 = lerp(a1, t0, a2, t2, t);
        const Point2 b2 = lerp(a2, t1, a3, t3, t);
        return lerp(b1, t1, b2, t2, t);
    }
};

double knot_step(Point2 a, Point2 b, double alpha) {
    // Coincident neighbours would give a zero knot interval.
    return std::max(std::pow(distance(a, b), alpha), 1e-12);
}

} // namespace

Polyline closed_centripetal_spline(std::span<const Point2> control, int samples, double alpha) {
    const std::size_t n = control.size();
    if (n < 3) {
        throw Error(ErrorCode::DegenerateCurve, "closed spline needs at least three control points");
    }
    if (samples < static_cast<int>(n)) {
        throw Error(ErrorCode::InvalidArgument, "fewer samples than control points");
    }

    std::vector<Segment> segs(n);
    std::vector<std::vector<double>> arc(n, std::vector<double>(kArcTable + 1, 0.0));
    std::vector<double> length(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        Segment& s = segs[i];
        s.p0 = control[(i + n - 1) % n];
        s.p1 = control[i];
        s.p2 = control[(i + 1) % n];
        s.p3 = control[(i + 2) % n];
        s.t0 = 0.0;
        s.t1 = s.t0 + knot_step(s.p0, s.p1, alpha);
        s.t2 = s.t1 + knot_step(s.p1, s.p2, alpha);
        s.t3 = s.t2 + knot_step(s.p2, s.p3, alpha);

        Point2 prev = s.p1;
        for (int k = 1; k <= kArcTable; ++k) {
            const Point2 q = k == kArcTable ? s.p2 : s.eval(s.t1 + (s.t2 - s.t1) * k / kArcTable);
            arc[i][k] = arc[i][k - 1] + distance(prev, q);
            prev = q;
        }
        length[i] = arc[i][kArcTable];
    }

    // Largest-remainder allocation of intervals, at least one per segment.
    const double total = std::accumulate(length.begin(), length.end(), 0.0);
    if (!(total > 0.0)) {
        throw Error(ErrorCode::DegenerateCurve, "control points span no length");
    }
    const int extra = samples - static_cast<int>(n);
    std::vector<int> count(n, 1);
    std::vector<double> remainder(n);
    int used = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double share = extra * length[i] / total;
        const int whole = static_cast<int>(std::floor(share));
        count[i] += whole;
        used += whole;
        remainder[i] = share - whole;
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    // Ties are broken by index modulo n/2 so that point-symmetric control
    // cycles keep symmetric allocations.
    const std::size_t half = n % 2 == 0 ? n / 2 : n;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (remainder[a] != remainder[b]) {
            return remainder[a] > remainder[b];
        }
        return a % half < b % half;
    });
    for (int k = 0; k < extra - used; ++k) {
        ++count[order[static_cast<std::size_t>(k) % n]];
    }

    Polyline out;
    out.reserve(static_cast<std::size_t>(samples) + 1);
    for (std::size_t i = 0; i < n; ++i) {
        const Segment& s = segs[i];
        const auto& table = arc[i];
        out.push_back(s.p1);
        for (int k = 1; k < count[i]; ++k) {
            const double target = length[i] * k / count[i];
            const auto it = std::lower_bound(table.begin(), table.end(), target);
            const auto j = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(it - table.begin(), 1, kArcTable));
            const double span = table[j] - table[j - 1];
            const double frac = span > 0.0 ? (target - table[j - 1]) / span : 0.0;
            const double u = (static_cast<double>(j - 1) + frac) / kArcTable;
            out.push_back(s.eval(s.t1 + (s.t2 - s.t1) * u));
        }
    }
    out.push_back(out.front());
    return out;
}

ShadePath trace_shade_path(const ConstructionTrace& trace, int samples) {
    if (samples < kMinPathSamples) {
        throw Error(ErrorCode::InvalidArgument, "shade path needs at least 512 samples");
    }
    ShadePath path;
    for (std::size_t i = 0; i < kShadeCycle.size(); ++i) {
        path.control[i] = trace.at(kShadeCycle[i]);
    }
    path.samples = closed_centripetal_spline(path.control, samples, path.alpha);
    return path;
}

} // namespace skia
