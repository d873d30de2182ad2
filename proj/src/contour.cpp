#include "skia/contour.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>

namespace skia {

namespace {

enum Edge : std::uint8_t { Bottom, Right, Top, Left, None };

struct Step {
    Edge from;
    Edge to;
};

// Oriented segments per case (bl=1, br=2, tr=4, tl=8), inside on the left.
constexpr std::array<std::array<Step, 2>, 16> kCases{{
    {{{None, None}, {None, None}}},
    {{{Bottom, Left}, {None, None}}},
    {{{Right, Bottom}, {None, None}}},
    {{{Right, Left}, {None, None}}},
    {{{Top, Right}, {None, None}}},
    {{{Bottom, Right}, {Top, Left}}},
    {{{Top, Bottom}, {None, None}}},
    {{{Top, Left}, {None, None}}},
    {{{Left, Top}, {None, None}}},
    {{{Bottom, Top}, {None, None}}},
    {{{Left, Bottom}, {Right, Top}}},
    {{{Right, Top}, {None, None}}},
    {{{Left, Right}, {None, None}}},
    {{{Bottom, Right}, {None, None}}},
    {{{Left, Bottom}, {None, None}}},
    {{{None, None}, {None, None}}},
}};

} // namespace

std::vector<Polyline> marching_squares(const BinaryGrid& g) {
    // Cells span pixel centres (i, j)..(i+1, j+1) for i in [-1, cols-1].
    // Crossing points live on grid edges, keyed densely: horizontal edge
    // (i, j) joins centres (i, j)-(i+1, j); vertical edge (i, j) joins
    // (i, j)-(i, j+1). Indices are shifted by one to allow i = -1.
    const std::int64_t w = g.cols + 2;
    const std::int64_t h = g.rows + 2;
    auto hkey = [&](int i, int j) { return 2 * ((j + 1) * w + (i + 1)); };
    auto vkey = [&](int i, int j) { return 2 * ((j + 1) * w + (i + 1)) + 1; };
    auto position = [&](std::int64_t key) {
        const std::int64_t cell = key / 2;
        const int i = static_cast<int>(cell % w) - 1;
        const int j = static_cast<int>(cell / w) - 1;
        const Point2 c = g.center(i, j);
        return key % 2 == 0 ? Point2{c.x + 0.5 * g.pixel, c.z} : Point2{c.x, c.z + 0.5 * g.pixel};
    };

    std::vector<std::int64_t> next(static_cast<std::size_t>(2 * w * h), -1);
    std::vector<std::int64_t> starts;
    for (int j = -1; j < g.rows; ++j) {
        for (int i = -1; i < g.cols; ++i) {
            const int code = (g.at(i, j) ? 1 : 0) | (g.at(i + 1, j) ? 2 : 0) | (g.at(i + 1, j + 1) ? 4 : 0) |
                             (g.at(i, j + 1) ? 8 : 0);
            for (const Step& s : kCases[static_cast<std::size_t>(code)]) {
                if (s.from == None) {
                    continue;
                }
                auto key = [&](Edge e) {
                    switch (e) {
                    case Bottom: return hkey(i, j);
                    case Top: return hkey(i, j + 1);
                    case Left: return vkey(i, j);
                    default: return vkey(i + 1, j);
                    }
                };
                const std::int64_t a = key(s.from);
                next[static_cast<std::size_t>(a)] = key(s.to);
                starts.push_back(a);
            }
        }
    }

    std::vector<Polyline> out;
    for (std::int64_t start : starts) {
        if (next[static_cast<std::size_t>(start)] < 0) {
            continue; // already consumed
        }
        Polyline loop;
        std::int64_t k = start;
        while (k >= 0 && next[static_cast<std::size_t>(k)] >= 0) {
            loop.push_back(position(k));
            const std::int64_t n = next[static_cast<std::size_t>(k)];
            next[static_cast<std::size_t>(k)] = -1;
            k = n;
        }
        loop.push_back(loop.front());
        out.push_back(std::move(loop));
    }
    return out;
}

double signed_area(std::span<const Point2> loop) {
    const std::size_t n = loop.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = loop[i];
        const Point2 b = loop[(i + 1) % n];
        acc += a.x * b.z - b.x * a.z;
    }
    return 0.5 * acc;
}

bool point_in_polygon(std::span<const Point2> loop, Point2 p) {
    bool in = false;
    const std::size_t n = loop.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point2 a = loop[i];
        const Point2 b = loop[j];
        if ((a.z > p.z) != (b.z > p.z)) {
            const double x = a.x + (p.z - a.z) * (b.x - a.x) / (b.z - a.z);
            if (p.x < x) {
                in = !in;
            }
        }
    }
    return in;
}

namespace {

int orientation(Point2 a, Point2 b, Point2 c) {
    const double v = cross(b - a, c - a);
    return (v > 0.0) - (v < 0.0);
}

bool on_segment(Point2 a, Point2 b, Point2 p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.z, b.z) <= p.z &&
           p.z <= std::max(a.z, b.z);
}

bool segments_touch(Point2 a, Point2 b, Point2 c, Point2 d) {
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4) {
        return true;
    }
    return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
           (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

} // namespace

bool is_simple_closed(std::span<const Point2> loop) {
    std::vector<Point2> pts(loop.begin(), loop.end());
    if (pts.size() > 1 && pts.front() == pts.back()) {
        pts.pop_back();
    }
    const std::size_t n = pts.size();
    if (n < 3) {
        return false;
    }
    // Sweep over x-sorted edges keeps this near-linear for the smooth
    // curves we feed it.
    struct Seg {
        double xmin, xmax;
        std::size_t i;
    };
    std::vector<Seg> segs(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = pts[i];
        const Point2 b = pts[(i + 1) % n];
        segs[i] = {std::min(a.x, b.x), std::max(a.x, b.x), i};
    }
    std::sort(segs.begin(), segs.end(), [](const Seg& a, const Seg& b) { return a.xmin < b.xmin; });
    for (std::size_t s = 0; s < n; ++s) {
        const std::size_t i = segs[s].i;
        for (std::size_t t = s + 1; t < n && segs[t].xmin <= segs[s].xmax; ++t) {
            const std::size_t j = segs[t].i;
            const std::size_t gap = i > j ? i - j : j - i;
            if (gap == 1 || gap == n - 1) {
                continue; // neighbours share a vertex
            }
            if (segments_touch(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n])) {
                return false;
            }
        }
    }
    return true;
}

} // namespace skia
