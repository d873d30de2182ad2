#pragma once

// Single-threaded versions of the parallel kernels. They share the per-item
// arithmetic with the parallel code and exist to pin down that the OpenMP
// schedule never changes a result.

#include "skia/compare.hpp"
#include "skia/oracle.hpp"

namespace skia::reference {

ShadeMask visible_shade_mask_serial(const Torus3& torus, int resolution = kDefaultResolution);
double shade_fraction_serial(const Torus3& torus, int samples_per_axis);
CurveDistances curve_distances_serial(const Polyline& a, const Polyline& b);
double region_iou_raster_serial(const Polyline& a, const Polyline& b, int resolution);

} // namespace skia::reference
