#pragma once

// Ground truth for the construction: the analytic shade line of a torus with
// a vertical axis under the conventional light, and a closed-form raster of
// the shade visible in the front elevation.
//
// Frame: x right, y away from the viewer, z up. The light travels along
// (1, 1, -1)/sqrt(3), i.e. from the upper left front.

#include "skia/construction.hpp"
#include "skia/contour.hpp"
#include "skia/planar.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace skia {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

struct LightConvention {
    /// Unit direction of travel of the rays.
    static Vec3 ray();
    static constexpr double elevation_slope = -1.0;
    static constexpr double plan_slope = 1.0;
};

/// Altitude of the ray above the horizontal plane, arctan(1/sqrt 2), in degrees.
double true_angle();

/// Degrees rounded to the nearest arcminute, e.g. "35°16′".
std::string format_degrees_minutes(double degrees);

struct Torus3 {
    double major = 0.0;
    double minor = 0.0;

    static Torus3 from(const TorusElevationSpec& spec) { return {spec.major(), spec.minor()}; }
};

Vec3 surface_normal(double u, double v);
/// N . L; positive means the surface faces away from the light (shade).
double normal_dot_light(double u, double v);

struct TerminatorV {
    double outer = 0.0; // radians, in (-54.74 deg, 54.74 deg)
    double inner = 0.0; // outer + pi
};

/// Meridian angles where N . L = 0 at azimuth u: tan v = cos u + sin u.
TerminatorV terminator_v(double u);

Point2 project_elevation(double u, double v, const Torus3& torus);

/// Closed elevation polyline of the outer (or inner) shade line, sampled
/// uniformly in azimuth starting at u = 0.
Polyline terminator_loop(const Torus3& torus, bool outer, int samples);

enum class Pixel : std::uint8_t { Outside = 0, Lit = 128, Shade = 255 };

/// Classification of the front-visible surface point behind elevation point p.
Pixel classify_visible(const Torus3& torus, Point2 p);

/// Square pixels over the elevation bounding box plus margin. Row 0 is the
/// lowest z; the grid is centred on C.
struct ShadeMask {
    Torus3 torus;
    int cols = 0;
    int rows = 0;
    double pixel = 0.0;
    double x0 = 0.0;
    double z0 = 0.0;
    std::vector<Pixel> cells;

    Pixel at(int col, int row) const { return cells[static_cast<std::size_t>(row) * cols + col]; }
    Point2 center(int col, int row) const { return {x0 + (col + 0.5) * pixel, z0 + (row + 0.5) * pixel}; }
};

inline constexpr int kDefaultResolution = 1024;

/// Grid layout shared by the parallel kernel and the serial reference.
ShadeMask allocate_shade_mask(const Torus3& torus, int resolution);

/// OpenMP over rows. Resolution counts pixels along the long side (>= 64).
ShadeMask visible_shade_mask(const Torus3& torus, int resolution = kDefaultResolution);

/// Marching-squares outline of the SHADE pixels, in inches.
std::vector<Polyline> extract_outline(const ShadeMask& mask);

/// Fraction of the (u, v) parameter square where N . L > 0, midpoint rule on
/// a samples_per_axis^2 grid.
double shade_fraction(const Torus3& torus, int samples_per_axis);

struct OracleShade {
    Torus3 torus;
    Polyline outer_loop;
    Polyline inner_loop;
    std::vector<Polyline> region_outline;
    double shade_fraction = 0.0;
    int resolution = 0;
};

OracleShade compute_oracle_shade(const Torus3& torus, int resolution = kDefaultResolution,
                                 int loop_samples = 2048);

/// Binary PGM (P5): 0 outside, 128 lit, 255 shade; top row first.
std::string to_pgm(const ShadeMask& mask);

} // namespace skia
