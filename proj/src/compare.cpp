#include "skia/compare.hpp"

#include "kernels.hpp"
#include "skia/contour.hpp"
#include "skia/error.hpp"
#include "skia/shade_path.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numbers>

namespace skia {

namespace detail {

RasterFrame joint_frame(const Polyline& a, const Polyline& b, int resolution) {
    double xmin = std::numeric_limits<double>::infinity();
    double zmin = xmin;
    double xmax = -xmin;
    double zmax = -xmin;
    for (const Polyline* poly : {&a, &b}) {
        for (const Point2& p : *poly) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            zmin = std::min(zmin, p.z);
            zmax = std::max(zmax, p.z);
        }
    }
    const double long_side = std::max(xmax - xmin, zmax - zmin);
    RasterFrame f;
    f.pixel = long_side / resolution;
    f.cols = std::max(1, static_cast<int>(std::ceil((xmax - xmin) / f.pixel)));
    f.rows = std::max(1, static_cast<int>(std::ceil((zmax - zmin) / f.pixel)));
    f.x0 = xmin;
    f.z0 = zmin;
    return f;
}

void fill_row(const Polyline& loop, const RasterFrame& f, int row, std::vector<std::uint8_t>& out) {
    out.assign(static_cast<std::size_t>(f.cols), 0);
    const double z = f.z0 + (row + 0.5) * f.pixel;
    std::vector<double> xs;
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = loop[i];
        const Point2 b = loop[(i + 1) % n];
        if ((a.z > z) != (b.z > z)) {
            xs.push_back(a.x + (z - a.z) * (b.x - a.x) / (b.z - a.z));
        }
    }
    std::sort(xs.begin(), xs.end());
    for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
        // columns whose centre lies in [xs[k], xs[k+1])
        const int c0 = std::max(0, static_cast<int>(std::ceil((xs[k] - f.x0) / f.pixel - 0.5)));
        const int c1 = std::min(f.cols, static_cast<int>(std::ceil((xs[k + 1] - f.x0) / f.pixel - 0.5)));
        for (int c = c0; c < c1; ++c) {
            out[static_cast<std::size_t>(c)] = 1;
        }
    }
}

} // namespace detail

Polyline densify(const Polyline& curve, double max_segment) {
    if (!(max_segment > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "densify needs a positive segment length");
    }
    Polyline out;
    if (curve.empty()) {
        return out;
    }
    out.reserve(curve.size());
    for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
        const Point2 a = curve[i];
        const Point2 b = curve[i + 1];
        const int pieces = static_cast<int>(std::floor(distance(a, b) / max_segment)) + 1;
        for (int k = 0; k < pieces; ++k) {
            const double w = static_cast<double>(k) / pieces;
            out.push_back({a.x + w * (b.x - a.x), a.z + w * (b.z - a.z)});
        }
    }
    out.push_back(curve.back());
    return out;
}

CurveDistances curve_distances(const Polyline& a, const Polyline& b) {
    if (a.size() < 3 || b.size() < 3) {
        throw Error(ErrorCode::DegenerateCurve, "curves need at least three vertices");
    }
    std::vector<double> da(a.size());
    std::vector<double> db(b.size());
    const auto na = static_cast<std::ptrdiff_t>(a.size());
    const auto nb = static_cast<std::ptrdiff_t>(b.size());
#pragma omp parallel
    {
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < na; ++i) {
            da[static_cast<std::size_t>(i)] = detail::nearest_distance(b, a[static_cast<std::size_t>(i)]);
        }
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < nb; ++i) {
            db[static_cast<std::size_t>(i)] = detail::nearest_distance(a, b[static_cast<std::size_t>(i)]);
        }
    }
    // Summation stays serial so the result does not depend on thread count.
    double sa = 0.0;
    double sb = 0.0;
    double h = 0.0;
    for (double d : da) {
        sa += d;
        h = std::max(h, d);
    }
    for (double d : db) {
        sb += d;
        h = std::max(h, d);
    }
    return {h, 0.5 * (sa / static_cast<double>(da.size()) + sb / static_cast<double>(db.size()))};
}

double hausdorff(const Polyline& a, const Polyline& b) { return curve_distances(a, b).hausdorff; }

std::string_view to_string(ReferenceKind kind) {
    switch (kind) {
    case ReferenceKind::OuterLoop: return "outer_loop";
    case ReferenceKind::InnerLoop: return "inner_loop";
    case ReferenceKind::RegionOutline: return "region_outline";
    }
    return "?";
}

std::optional<ReferenceKind> parse_reference(std::string_view name) {
    for (ReferenceKind k : kAllReferences) {
        if (to_string(k) == name) {
            return k;
        }
    }
    if (name == "outer") return ReferenceKind::OuterLoop;
    if (name == "inner") return ReferenceKind::InnerLoop;
    if (name == "region") return ReferenceKind::RegionOutline;
    return std::nullopt;
}

IouResult region_iou(const Polyline& a, const Polyline& b, int resolution) {
    if (resolution < 1024) {
        throw Error(ErrorCode::InvalidResolution, "region_iou rasterises at 1024 or more pixels");
    }
    if (!is_simple_closed(a) || !is_simple_closed(b)) {
        return {std::nullopt, "n/a:self_intersecting"};
    }
    const detail::RasterFrame f = detail::joint_frame(a, b, resolution);
    long long both = 0;
    long long either = 0;
#pragma omp parallel reduction(+ : both, either)
    {
        std::vector<std::uint8_t> ra;
        std::vector<std::uint8_t> rb;
#pragma omp for schedule(static)
        for (int row = 0; row < f.rows; ++row) {
            const auto c = detail::count_row(a, b, f, row, ra, rb);
            both += c.both;
            either += c.either;
        }
    }
    const std::string method = fmt::format("raster{}", resolution);
    if (either == 0) {
        return {0.0, method};
    }
    return {static_cast<double>(both) / static_cast<double>(either), method};
}

std::string config_id(const TorusElevationSpec& spec) {
    return fmt::format("{:g}x{:g}", spec.width(), spec.height());
}

namespace {

Polyline concatenate(const std::vector<Polyline>& parts) {
    Polyline out;
    for (const auto& p : parts) {
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

const Polyline& largest_loop(const std::vector<Polyline>& loops) {
    return *std::max_element(loops.begin(), loops.end(), [](const Polyline& x, const Polyline& y) {
        return std::abs(signed_area(x)) < std::abs(signed_area(y));
    });
}

} // namespace

std::vector<ComparisonReport> compare_config(const TorusElevationSpec& spec, InterpretationVariant variant,
                                             std::span<const ReferenceKind> references, const OracleShade& oracle,
                                             const CompareOptions& options) {
    const ConstructionTrace trace = run_construction(spec, variant);
    const ShadePath path = trace_shade_path(trace, options.path_samples);
    const double max_seg = spec.extent() / 256.0;
    const Polyline curve = densify(path.samples, max_seg);

    const Torus3& torus = oracle.torus;
    const Point2 oracle_d = project_elevation(std::numbers::pi, terminator_v(std::numbers::pi).outer, torus);
    const Point2 oracle_e = project_elevation(0.0, terminator_v(0.0).outer, torus);
    const double d_dev = distance(trace.at(Label::D), oracle_d);
    const double e_dev = distance(trace.at(Label::E), oracle_e);

    std::vector<ComparisonReport> out;
    for (ReferenceKind kind : references) {
        Polyline ref;
        const Polyline* iou_ref = nullptr;
        switch (kind) {
        case ReferenceKind::OuterLoop:
            ref = densify(oracle.outer_loop, max_seg);
            iou_ref = &oracle.outer_loop;
            break;
        case ReferenceKind::InnerLoop:
            ref = densify(oracle.inner_loop, max_seg);
            iou_ref = &oracle.inner_loop;
            break;
        case ReferenceKind::RegionOutline: {
            std::vector<Polyline> dense;
            for (const auto& loop : oracle.region_outline) {
                dense.push_back(densify(loop, max_seg));
            }
            ref = concatenate(dense);
            iou_ref = &largest_loop(oracle.region_outline);
            break;
        }
        }
        const CurveDistances cd = curve_distances(curve, ref);
        const IouResult iou = region_iou(path.samples, *iou_ref, options.iou_resolution);
        out.push_back({config_id(spec), spec.width(), spec.height(), variant, kind, cd.hausdorff, cd.mean, iou.value,
                       iou.method, d_dev, e_dev});
    }
    return out;
}

std::vector<ComparisonReport> compare_config(const TorusElevationSpec& spec, InterpretationVariant variant,
                                             std::span<const ReferenceKind> references,
                                             const CompareOptions& options) {
    const OracleShade oracle = compute_oracle_shade(Torus3::from(spec), options.resolution, options.loop_samples);
    return compare_config(spec, variant, references, oracle, options);
}

std::vector<VariantRanking> rank_variants(std::span<const ComparisonReport> reports,
                                          std::span<const InterpretationVariant> variants,
                                          std::span<const ReferenceKind> references) {
    if (variants.empty()) {
        throw Error(ErrorCode::InvalidArgument, "calibration needs at least one variant");
    }
    std::vector<VariantRanking> out;
    for (ReferenceKind kind : references) {
        VariantRanking vr{kind, {}};
        for (const InterpretationVariant& v : variants) {
            std::vector<double> hs;
            for (const auto& rep : reports) {
                if (rep.variant == v && rep.reference == kind) {
                    hs.push_back(rep.hausdorff);
                }
            }
            if (hs.empty()) {
                continue;
            }
            std::sort(hs.begin(), hs.end());
            const std::size_t m = hs.size() / 2;
            const double median = hs.size() % 2 == 1 ? hs[m] : 0.5 * (hs[m - 1] + hs[m]);
            vr.ranking.push_back({v, median});
        }
        std::stable_sort(vr.ranking.begin(), vr.ranking.end(), [](const RankedVariant& a, const RankedVariant& b) {
            if (a.median_hausdorff != b.median_hausdorff) {
                return a.median_hausdorff < b.median_hausdorff;
            }
            return a.variant.ordinal() < b.variant.ordinal();
        });
        out.push_back(std::move(vr));
    }
    return out;
}

std::vector<VariantRanking> calibrate_variants(std::span<const TorusElevationSpec> configs,
                                               std::span<const InterpretationVariant> variants,
                                               std::span<const ReferenceKind> references,
                                               const CompareOptions& options) {
    if (variants.empty()) {
        throw Error(ErrorCode::InvalidArgument, "calibration needs at least one variant");
    }
    if (configs.empty()) {
        throw Error(ErrorCode::InvalidArgument, "calibration needs at least one configuration");
    }
    std::vector<ComparisonReport> reports;
    for (const auto& spec : configs) {
        const OracleShade oracle = compute_oracle_shade(Torus3::from(spec), options.resolution, options.loop_samples);
        for (const auto& v : variants) {
            auto rows = compare_config(spec, v, references, oracle, options);
            reports.insert(reports.end(), rows.begin(), rows.end());
        }
    }
    return rank_variants(reports, variants, references);
}

} // namespace skia
