#include "skia/oracle.hpp"

#include "skia/error.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numbers>

namespace skia {

Vec3 LightConvention::ray() {
    const double k = 1.0 / std::sqrt(3.0);
    return {k, k, -k};
}

double true_angle() { return std::atan(1.0 / std::numbers::sqrt2) * 180.0 / std::numbers::pi; }

std::string format_degrees_minutes(double degrees) {
    const long total = std::lround(std::abs(degrees) * 60.0);
    return fmt::format("{}{}°{:02}′", degrees < 0 ? "-" : "", total / 60, total % 60);
}

Vec3 surface_normal(double u, double v) {
    return {std::cos(v) * std::cos(u), std::cos(v) * std::sin(u), std::sin(v)};
}

double normal_dot_light(double u, double v) { return dot(surface_normal(u, v), LightConvention::ray()); }

TerminatorV terminator_v(double u) {
    const double outer = std::atan(std::cos(u) + std::sin(u));
    return {outer, outer + std::numbers::pi};
}

Point2 project_elevation(double u, double v, const Torus3& t) {
    return {(t.major + t.minor * std::cos(v)) * std::cos(u), t.minor * std::sin(v)};
}

Polyline terminator_loop(const Torus3& torus, bool outer, int samples) {
    if (samples < 3) {
        throw Error(ErrorCode::InvalidArgument, "terminator loop needs at least 3 samples");
    }
    Polyline loop;
    loop.reserve(static_cast<std::size_t>(samples) + 1);
    for (int k = 0; k < samples; ++k) {
        const double u = 2.0 * std::numbers::pi * k / samples;
        const TerminatorV tv = terminator_v(u);
        loop.push_back(project_elevation(u, outer ? tv.outer : tv.inner, torus));
    }
    loop.push_back(loop.front());
    return loop;
}

Pixel classify_visible(const Torus3& t, Point2 p) {
    if (std::abs(p.z) > t.minor) {
        return Pixel::Outside;
    }
    const double sv = p.z / t.minor;
    const double cv = std::sqrt(std::max(0.0, 1.0 - sv * sv));
    const double rho = t.major + t.minor * cv;
    if (std::abs(p.x) > rho) {
        return Pixel::Outside;
    }
    // Front outer sheet: y < 0, cos v >= 0.
    const double cu = p.x / rho;
    const double su = -std::sqrt(std::max(0.0, 1.0 - cu * cu));
    return cv * (cu + su) - sv > 0.0 ? Pixel::Shade : Pixel::Lit;
}

ShadeMask allocate_shade_mask(const Torus3& torus, int resolution) {
    if (resolution < 64) {
        throw Error(ErrorCode::InvalidResolution, fmt::format("resolution must be >= 64, got {}", resolution));
    }
    if (!(torus.minor > 0.0) || torus.major < torus.minor) {
        throw Error(ErrorCode::InvalidArgument, "oracle torus needs R >= r > 0");
    }
    const double half_x = torus.major + torus.minor;
    const double half_z = torus.minor;
    const double long_side = 2.0 * std::max(half_x, half_z);
    // 2% margin, but never fewer than 2.5 pixels.
    double margin = 0.02 * long_side;
    const double n = resolution;
    if (margin < 2.5 * (long_side + 2.0 * margin) / n) {
        margin = 2.5 * long_side / (n - 5.0);
    }
    ShadeMask m;
    m.torus = torus;
    m.pixel = (long_side + 2.0 * margin) / n;
    m.cols = static_cast<int>(std::ceil((2.0 * (half_x + margin)) / m.pixel - 1e-9));
    m.rows = static_cast<int>(std::ceil((2.0 * (half_z + margin)) / m.pixel - 1e-9));
    m.x0 = -0.5 * m.cols * m.pixel;
    m.z0 = -0.5 * m.rows * m.pixel;
    m.cells.assign(static_cast<std::size_t>(m.cols) * m.rows, Pixel::Outside);
    return m;
}

ShadeMask visible_shade_mask(const Torus3& torus, int resolution) {
    ShadeMask m = allocate_shade_mask(torus, resolution);
#pragma omp parallel for schedule(static)
    for (int row = 0; row < m.rows; ++row) {
        for (int col = 0; col < m.cols; ++col) {
            m.cells[static_cast<std::size_t>(row) * m.cols + col] = classify_visible(torus, m.center(col, row));
        }
    }
    return m;
}

std::vector<Polyline> extract_outline(const ShadeMask& mask) {
    BinaryGrid g{mask.cols, mask.rows, mask.x0, mask.z0, mask.pixel, {}};
    g.inside.resize(mask.cells.size());
    bool any = false;
    for (std::size_t i = 0; i < mask.cells.size(); ++i) {
        g.inside[i] = mask.cells[i] == Pixel::Shade ? 1 : 0;
        any = any || g.inside[i] != 0;
    }
    if (!any) {
        throw Error(ErrorCode::EmptyShadeRegion, "mask has no shade pixels");
    }
    return marching_squares(g);
}

double shade_fraction(const Torus3&, int samples_per_axis) {
    // N depends on (u, v) only, so R and r drop out.
    if (samples_per_axis < 100) {
        throw Error(ErrorCode::InvalidArgument, "shade_fraction needs at least 10^4 samples");
    }
    const int n = samples_per_axis;
    const double step = 2.0 * std::numbers::pi / n;
    long long shaded = 0;
#pragma omp parallel for reduction(+ : shaded) schedule(static)
    for (int i = 0; i < n; ++i) {
        const double u = (i + 0.5) * step;
        for (int j = 0; j < n; ++j) {
            if (normal_dot_light(u, (j + 0.5) * step) > 0.0) {
                ++shaded;
            }
        }
    }
    return static_cast<double>(shaded) / (static_cast<double>(n) * n);
}

OracleShade compute_oracle_shade(const Torus3& torus, int resolution, int loop_samples) {
    OracleShade o;
    o.torus = torus;
    o.resolution = resolution;
    o.outer_loop = terminator_loop(torus, true, loop_samples);
    o.inner_loop = terminator_loop(torus, false, loop_samples);
    o.region_outline = extract_outline(visible_shade_mask(torus, resolution));
    o.shade_fraction = shade_fraction(torus, 1024);
    return o;
}

std::string to_pgm(const ShadeMask& mask) {
    std::string out = fmt::format("P5\n{} {}\n255\n", mask.cols, mask.rows);
    out.reserve(out.size() + mask.cells.size());
    for (int row = mask.rows - 1; row >= 0; --row) {
        for (int col = 0; col < mask.cols; ++col) {
            out.push_back(static_cast<char>(static_cast<std::uint8_t>(mask.at(col, row))));
        }
    }
    return out;
}

} // namespace skia
