#include "skia/reference.hpp"

#include "kernels.hpp"
#include "skia/error.hpp"

#include <numbers>

namespace skia::reference {

ShadeMask visible_shade_mask_serial(const Torus3& torus, int resolution) {
    ShadeMask m = allocate_shade_mask(torus, resolution);
    for (int row = 0; row < m.rows; ++row) {
        for (int col = 0; col < m.cols; ++col) {
            m.cells[static_cast<std::size_t>(row) * m.cols + col] = classify_visible(torus, m.center(col, row));
        }
    }
    return m;
}

double shade_fraction_serial(const Torus3&, int samples_per_axis) {
    const int n = samples_per_axis;
    const double step = 2.0 * std::numbers::pi / n;
    long long shaded = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            shaded += normal_dot_light((i + 0.5) * step, (j + 0.5) * step) > 0.0 ? 1 : 0;
        }
    }
    return static_cast<double>(shaded) / (static_cast<double>(n) * n);
}

CurveDistances curve_distances_serial(const Polyline& a, const Polyline& b) {
    if (a.size() < 3 || b.size() < 3) {
        throw Error(ErrorCode::DegenerateCurve, "curves need at least three vertices");
    }
    double h = 0.0;
    double sa = 0.0;
    double sb = 0.0;
    for (const Point2& p : a) {
        const double d = detail::nearest_distance(b, p);
        sa += d;
        h = std::max(h, d);
    }
    for (const Point2& p : b) {
        const double d = detail::nearest_distance(a, p);
        sb += d;
        h = std::max(h, d);
    }
    return {h, 0.5 * (sa / static_cast<double>(a.size()) + sb / static_cast<double>(b.size()))};
}

double region_iou_raster_serial(const Polyline& a, const Polyline& b, int resolution) {
    const detail::RasterFrame f = detail::joint_frame(a, b, resolution);
    std::vector<std::uint8_t> ra;
    std::vector<std::uint8_t> rb;
    long long both = 0;
    long long either = 0;
    for (int row = 0; row < f.rows; ++row) {
        const auto c = detail::count_row(a, b, f, row, ra, rb);
        both += c.both;
        either += c.either;
    }
    return either == 0 ? 0.0 : static_cast<double>(both) / static_cast<double>(either);
}

} // namespace skia::reference
