#pragma once

// Per-item arithmetic shared by the OpenMP kernels and their serial
// references. Internal to the library.

#include "skia/planar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

namespace skia::detail {

inline double nearest_distance(const Polyline& pts, Point2 p) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point2& q : pts) {
        const double dx = q.x - p.x;
        const double dz = q.z - p.z;
        best = std::min(best, dx * dx + dz * dz);
    }
    return std::sqrt(best);
}

struct RasterFrame {
    double x0 = 0.0;
    double z0 = 0.0;
    double pixel = 1.0;
    int cols = 0;
    int rows = 0;
};

RasterFrame joint_frame(const Polyline& a, const Polyline& b, int resolution);

/// Marks the columns of one raster row whose centres fall inside `loop`
/// under the even-odd rule.
void fill_row(const Polyline& loop, const RasterFrame& f, int row, std::vector<std::uint8_t>& out);

struct OverlapCounts {
    long long both = 0;
    long long either = 0;
};

inline OverlapCounts count_row(const Polyline& a, const Polyline& b, const RasterFrame& f, int row,
                               std::vector<std::uint8_t>& ra, std::vector<std::uint8_t>& rb) {
    fill_row(a, f, row, ra);
    fill_row(b, f, row, rb);
    OverlapCounts c;
    for (int col = 0; col < f.cols; ++col) {
        c.both += (ra[col] & rb[col]);
        c.either += (ra[col] | rb[col]);
    }
    return c;
}

} // namespace skia::detail
