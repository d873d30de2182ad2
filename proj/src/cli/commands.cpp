#include "skia/cli.hpp"

#include "skia/compare.hpp"
#include "skia/construction.hpp"
#include "skia/error.hpp"
#include "skia/oracle.hpp"
#include "skia/plates.hpp"
#include "skia/rubric.hpp"
#include "skia/serialize.hpp"
#include "skia/shade_path.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fmt/format.h>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#ifndef SKIA_DEFAULT_PROFILES
#define SKIA_DEFAULT_PROFILES "data/method_profiles.csv"
#endif

namespace skia::cli {

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw std::runtime_error("cannot write " + path.string());
    }
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
}

std::string read_file(const fs::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw Error(ErrorCode::InvalidArgument, "cannot read config file " + path.string());
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string dims(double w, double h) { return fmt::format("{:g}x{:g}", w, h); }

PlateStyle style_from(const RunConfig& c) {
    PlateStyle s;
    s.scale = c.scale;
    s.page_width = c.page_width;
    s.page_height = c.page_height;
    return s;
}

std::vector<InterpretationVariant> parse_variants(const std::string& text) {
    if (text == "all") {
        const auto all = InterpretationVariant::all();
        return {all.begin(), all.end()};
    }
    std::vector<InterpretationVariant> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto v = InterpretationVariant::parse(item);
        if (!v) {
            throw Error(ErrorCode::InvalidArgument, "unknown variant '" + item + "'");
        }
        out.push_back(*v);
    }
    if (out.empty()) {
        throw Error(ErrorCode::InvalidArgument, "no variants selected");
    }
    return out;
}

std::vector<ReferenceKind> parse_references(const std::string& text) {
    if (text == "all") {
        return {kAllReferences.begin(), kAllReferences.end()};
    }
    std::vector<ReferenceKind> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto k = parse_reference(item);
        if (!k) {
            throw Error(ErrorCode::InvalidArgument, "unknown reference '" + item + "'");
        }
        out.push_back(*k);
    }
    if (out.empty()) {
        throw Error(ErrorCode::InvalidArgument, "no references selected");
    }
    return out;
}

struct Grid {
    std::string name;
    std::vector<double> widths;
    std::vector<double> heights;
};

std::optional<Grid> resolve_grid(const RunConfig& c) {
    if (!c.preset.empty()) {
        if (c.preset == "fig4") return Grid{"fig4", parse_range("20:17"), parse_range("6:1")};
        if (c.preset == "fig5") return Grid{"fig5", parse_range("16:12"), parse_range("6:1")};
        if (c.preset == "full") return Grid{"full", parse_range("20:12"), parse_range("6:1")};
        throw Error(ErrorCode::InvalidArgument, "unknown preset '" + c.preset + "' (fig4, fig5, full)");
    }
    if (!c.widths.empty() || !c.heights.empty()) {
        return Grid{"custom", parse_range(c.widths), parse_range(c.heights)};
    }
    return std::nullopt;
}

int cmd_construct(const RunConfig& c, std::ostream& out) {
    const auto variants = parse_variants(c.variants);
    if (variants.size() != 1) {
        throw Error(ErrorCode::InvalidArgument, "construct takes exactly one variant");
    }
    const TorusElevationSpec spec(c.width, c.height);
    const ConstructionTrace trace = run_construction(spec, variants.front());
    const ShadePath path = trace_shade_path(trace, c.samples);
    const auto residuals = validate_trace(trace);
    const std::string meta = config_to_json(c);
    const fs::path dir(c.out_dir);
    const std::string tag = dims(spec.width(), spec.height());

    write_file(dir / fmt::format("trace_{}.json", tag), trace_to_json(trace, path, residuals, meta));
    if (c.svg) {
        write_file(dir / fmt::format("plate_construction_{}.svg", tag),
                   plate_construction(trace, path, style_from(c), meta));
    }

    out << fmt::format("torus W={:g} H={:g}: R={:.6f} r={:.6f} ({})\n", spec.width(), spec.height(), spec.major(),
                       spec.minor(), variants.front().name());
    for (Label l : {Label::D, Label::E, Label::n2, Label::o2}) {
        out << fmt::format("  {:<3} = ({:.6f}, {:.6f})\n", label_name(l), trace.at(l).x, trace.at(l).z);
    }
    const double limit = 1e-9 * spec.extent();
    int failing = 0;
    for (const auto& a : residuals) {
        const bool ok = a.residual < limit;
        failing += ok ? 0 : 1;
        out << fmt::format("  {:<24} {:.3e} {}\n", a.id, a.residual, ok ? "ok" : "above 1e-9 W");
    }
    out << fmt::format("{} of {} assertions within 1e-9 W; wrote {}\n", residuals.size() - failing, residuals.size(),
                       dir.string());
    return kExitOk;
}

int cmd_matrix(const RunConfig& c, std::ostream& out) {
    const auto grid = resolve_grid(c);
    if (!grid) {
        throw Error(ErrorCode::InvalidArgument, "matrix needs --preset or --widths/--heights");
    }
    const std::string meta = config_to_json(c);
    const fs::path dir(c.out_dir);
    const MatrixPlate plate = plate_matrix(grid->widths, grid->heights, style_from(c), meta);
    if (c.svg) {
        write_file(dir / fmt::format("plate_matrix_{}.svg", grid->name), plate.svg);
    }
    write_file(dir / fmt::format("manifest_{}.json", grid->name),
               manifest_to_json(grid->name, grid->widths, grid->heights, plate, meta));
    int built = 0;
    for (const auto& cell : plate.cells) {
        if (!cell.constructed) {
            out << fmt::format("  skipped {}: {}\n", dims(cell.width, cell.height), cell.skip_reason);
            continue;
        }
        ++built;
        const ConstructionTrace trace = run_construction(TorusElevationSpec(cell.width, cell.height));
        const ShadePath path = trace_shade_path(trace, c.samples);
        write_file(dir / "traces" / fmt::format("trace_{}.json", dims(cell.width, cell.height)),
                   trace_to_json(trace, path, validate_trace(trace), meta));
    }
    out << fmt::format("matrix {}: {} cells constructed, {} skipped\n", grid->name, built,
                       plate.cells.size() - static_cast<std::size_t>(built));
    return kExitOk;
}

int cmd_compare(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const auto variants = parse_variants(c.variants);
    const auto references = parse_references(c.references);
    std::vector<std::pair<double, double>> configs;
    std::string name = dims(c.width, c.height);
    if (const auto grid = resolve_grid(c)) {
        name = grid->name;
        for (double h : grid->heights) {
            for (double w : grid->widths) {
                configs.emplace_back(w, h);
            }
        }
    } else {
        configs.emplace_back(c.width, c.height);
    }

    CompareOptions opts;
    opts.resolution = c.resolution;
    opts.path_samples = c.samples;
    const std::string meta = config_to_json(c);
    const fs::path dir(c.out_dir);
    const PlateStyle style = style_from(c);

    std::vector<ComparisonReport> reports;
    int row_errors = 0;
    for (const auto& [w, h] : configs) {
        std::optional<TorusElevationSpec> spec;
        try {
            spec.emplace(w, h);
        } catch (const Error& e) {
            err << fmt::format("config {}: {}\n", dims(w, h), e.what());
            ++row_errors;
            continue;
        }
        const Torus3 torus = Torus3::from(*spec);
        OracleShade oracle;
        ShadeMask mask;
        try {
            mask = visible_shade_mask(torus, opts.resolution);
            oracle = compute_oracle_shade(torus, opts.resolution, opts.loop_samples);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::InvalidResolution) {
                throw;
            }
            err << fmt::format("oracle failed for {}: {}\n", dims(w, h), e.what());
            return kExitInternal;
        }
        if (c.export_mask) {
            write_file(dir / fmt::format("mask_{}.pgm", dims(w, h)), to_pgm(mask));
            write_file(dir / fmt::format("outline_{}.json", dims(w, h)), outline_to_json(oracle, meta));
        }
        for (std::size_t vi = 0; vi < variants.size(); ++vi) {
            std::vector<ComparisonReport> rows;
            try {
                rows = compare_config(*spec, variants[vi], references, oracle, opts);
            } catch (const Error& e) {
                err << fmt::format("config {} variant {}: {}\n", dims(w, h), variants[vi].name(), e.what());
                ++row_errors;
                continue;
            }
            if (vi == 0 && c.svg) {
                const ConstructionTrace trace = run_construction(*spec, variants[vi]);
                const ShadePath path = trace_shade_path(trace, opts.path_samples);
                write_file(dir / fmt::format("plate_overlay_{}.svg", dims(w, h)),
                           plate_overlay(trace, path, oracle, rows, style, meta));
            }
            reports.insert(reports.end(), rows.begin(), rows.end());
        }
    }

    write_file(dir / "compare_report.csv", reports_to_csv(reports));
    write_file(dir / "compare_report.json", reports_to_json(reports, meta));
    for (const auto& r : reports) {
        out << fmt::format("{:<6} {:<44} {:<15} hausdorff={:.6f} mean={:.6f} iou={} d_dev={:.1e} e_dev={:.1e}\n",
                           r.config_id, r.variant.name(), to_string(r.reference), r.hausdorff, r.mean,
                           r.iou ? fmt::format("{:.4f}", *r.iou) : std::string("n/a"), r.d_dev, r.e_dev);
    }
    if (c.calibrate || variants.size() > 1) {
        const auto rankings = rank_variants(reports, variants, references);
        write_file(dir / "calibration.json", rankings_to_json(rankings, meta));
        for (const auto& vr : rankings) {
            out << fmt::format("ranking vs {}:\n", to_string(vr.reference));
            for (const auto& e : vr.ranking) {
                out << fmt::format("  {:.6f}  {}\n", e.median_hausdorff, e.variant.name());
            }
        }
    }
    out << fmt::format("compare {}: {} rows, {} errors\n", name, reports.size(), row_errors);
    return kExitOk;
}

int cmd_score(const RunConfig& c, std::ostream& out) {
    const std::string path = c.profiles.empty() ? std::string(SKIA_DEFAULT_PROFILES) : c.profiles;
    const auto profiles = load_method_profiles(path);
    std::string csv = "row,name,steps,extra_drawings,angles,computed,published,auto_cap,match\n";
    int mismatches = 0;
    out << fmt::format("{:>3}  {:<42} {:>5} {:>8} {:>9}\n", "row", "method", "steps", "computed", "published");
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        const auto& p = profiles[i];
        const ComplexityScore s = score(p);
        const bool match = !p.published_score || *p.published_score == s.value;
        mismatches += match ? 0 : 1;
        const std::string published = p.published_score ? std::to_string(*p.published_score) : "-";
        out << fmt::format("{:>3}  {:<42} {:>5} {:>8} {:>9}{}{}\n", i + 1, p.name, p.steps, s.value, published,
                           s.auto_cap ? "  (auto-cap)" : "", match ? "" : "  MISMATCH");
        csv += fmt::format("{},\"{}\",{},{},{},{},{},{},{}\n", i + 1, p.name, p.steps, p.extra_drawings, p.angles,
                           s.value, published, s.auto_cap ? "yes" : "no", match ? "yes" : "no");
    }
    write_file(fs::path(c.out_dir) / "scores.csv", csv);
    out << fmt::format("{} profiles scored, {} mismatches\n", profiles.size(), mismatches);
    return kExitOk;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::InternalInconsistency:
    case ErrorCode::ParallelLines:
    case ErrorCode::CoincidentLines:
    case ErrorCode::DegenerateCurve:
    case ErrorCode::EmptyShadeRegion:
        return kExitInternal;
    default:
        return kExitUserError;
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Elevation-only torus shade construction, oracle comparison and plates", "skia"};
    app.require_subcommand(1);

    RunConfig flags;
    std::string config_path;
    app.add_option("--config", config_path, "flat key = value configuration file");

    // Each flag that was actually given is replayed over the config file.
    std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&)>>> overrides;
    auto bind = [&](CLI::App* sub, const std::string& name, auto RunConfig::*member, const std::string& help) {
        CLI::Option* opt = sub->add_option(name, flags.*member, help);
        overrides.emplace_back(opt, [&flags, member](RunConfig& c) { c.*member = flags.*member; });
        return opt;
    };
    auto bind_flag = [&](CLI::App* sub, const std::string& name, bool RunConfig::*member, bool value,
                         const std::string& help) {
        CLI::Option* opt = sub->add_flag(name, help);
        overrides.emplace_back(opt, [member, value](RunConfig& c) { c.*member = value; });
    };
    auto common = [&](CLI::App* sub) {
        bind(sub, "--out", &RunConfig::out_dir, "output directory (default $SKIA_OUT_DIR or ./skia_out)");
        bind(sub, "--scale", &RunConfig::scale, "SVG units per inch");
        bind_flag(sub, "--no-svg", &RunConfig::svg, false, "skip SVG plates");
    };

    CLI::App* construct = app.add_subcommand("construct", "run the construction for one torus");
    bind(construct, "--width", &RunConfig::width, "outline width W (inches)");
    bind(construct, "--height", &RunConfig::height, "outline height H (inches)");
    bind(construct, "--variant", &RunConfig::variants, "canonical or a variant name");
    bind(construct, "--samples", &RunConfig::samples, "shade path vertices");
    common(construct);

    CLI::App* matrix = app.add_subcommand("matrix", "plate a grid of torus dimensions");
    bind(matrix, "--preset", &RunConfig::preset, "fig4 | fig5 | full");
    bind(matrix, "--widths", &RunConfig::widths, "e.g. 20:12");
    bind(matrix, "--heights", &RunConfig::heights, "e.g. 6:1");
    bind(matrix, "--samples", &RunConfig::samples, "shade path vertices per trace");
    bind(matrix, "--page-width", &RunConfig::page_width, "page width (inches)");
    bind(matrix, "--page-height", &RunConfig::page_height, "page height (inches)");
    common(matrix);

    CLI::App* compare = app.add_subcommand("compare", "compare constructions with the oracle");
    bind(compare, "--width", &RunConfig::width, "outline width W (inches)");
    bind(compare, "--height", &RunConfig::height, "outline height H (inches)");
    bind(compare, "--preset", &RunConfig::preset, "fig4 | fig5 | full");
    bind(compare, "--widths", &RunConfig::widths, "e.g. 20:12");
    bind(compare, "--heights", &RunConfig::heights, "e.g. 6:1");
    bind(compare, "--variants", &RunConfig::variants, "canonical | all | comma list");
    bind(compare, "--references", &RunConfig::references, "all | outer_loop,inner_loop,region_outline");
    bind(compare, "--resolution", &RunConfig::resolution, "oracle raster pixels on the long side");
    bind(compare, "--samples", &RunConfig::samples, "shade path vertices");
    bind_flag(compare, "--calibrate", &RunConfig::calibrate, true, "rank variants by median Hausdorff");
    bind_flag(compare, "--export-mask", &RunConfig::export_mask, true, "write PGM masks and outline JSON");
    common(compare);

    CLI::App* score_cmd = app.add_subcommand("score", "score construction methods by complexity");
    bind(score_cmd, "--profiles", &RunConfig::profiles, "profiles CSV (default: shipped table)");
    bind(score_cmd, "--out", &RunConfig::out_dir, "output directory");

    std::vector<const char*> argv{"skia"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUserError;
    }

    try {
        RunConfig c;
        if (const char* env = std::getenv("SKIA_OUT_DIR"); env != nullptr && *env != '\0') {
            c.out_dir = env;
        }
        if (!config_path.empty()) {
            apply_config_text(c, read_file(config_path));
        }
        for (const auto& [opt, apply] : overrides) {
            if (opt->count() > 0) {
                apply(c);
            }
        }
        c.subcommand = app.get_subcommands().front()->get_name();

        if (c.subcommand == "construct") return cmd_construct(c, out);
        if (c.subcommand == "matrix") return cmd_matrix(c, out);
        if (c.subcommand == "compare") return cmd_compare(c, out, err);
        return cmd_score(c, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace skia::cli
