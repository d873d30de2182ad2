#pragma once

#include "skia/construction.hpp"
#include "skia/planar.hpp"

#include <array>
#include <span>

namespace skia {

/// Closed curve through the ten traced points.
///
/// The interpolant is a centripetal Catmull-Rom spline (alpha = 1/2), which
/// is C1 and does not overshoot into cusps on the tight end loops. `samples`
/// holds the requested number of distinct vertices followed by a copy of the
/// first one. Every control point is one of the vertices.
struct ShadePath {
    std::array<Point2, kShadeCycle.size()> control{};
    Polyline samples;
    double alpha = 0.5;
};

inline constexpr int kMinPathSamples = 512;

ShadePath trace_shade_path(const ConstructionTrace& trace, int samples = 2048);

/// Closed centripetal spline through arbitrary control points, resampled to
/// `samples` distinct vertices (plus the closing vertex). Intervals are
/// distributed over segments by arc length.
Polyline closed_centripetal_spline(std::span<const Point2> control, int samples, double alpha = 0.5);

} // namespace skia
