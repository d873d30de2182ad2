// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include "skia/cli.hpp"
#include "skia/compare.hpp"
#include "skia/construction.hpp"
#include "skia/error.hpp"
#include "skia/oracle.hpp"
#include "skia/rubric.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fmt/core.h>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace skia;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<TorusElevationSpec> integer_matrix() {
    std::vector<TorusElevationSpec> out;
    for (int w = 20; w >= 12; --w) {
        for (int h = 6; h >= 1; --h) {
            if (w >= 2 * h) out.emplace_back(w, h);
        }
    }
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("skia_acceptance_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

int quiet_run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    return cli::run(args, out, err);
}

Outcome ac1_convention() {
    const double a = true_angle();
    const std::string shown = format_degrees_minutes(a);
    const bool ok = std::abs(a - 35.2644) <= 1e-4 && shown == "35°16′";
    return {ok, fmt::format("true_angle={:.6f} shown={}", a, shown)};
}

Outcome ac2_invariants() {
    const Timer timer;
    double worst = 0.0;
    std::string worst_id;
    std::size_t configs = 0;
    bool ok = true;
    for (const auto& spec : integer_matrix()) {
        ++configs;
        const auto trace = run_construction(spec);
        for (const auto& a : validate_trace(trace)) {
            const double rel = a.residual / spec.width();
            if (rel > worst) {
                worst = rel;
                worst_id = config_id(spec) + ":" + a.id;
            }
            ok = ok && a.residual < 1e-9 * spec.width();
        }
    }
    const double t = timer.seconds();
    ok = ok && configs == 54 && t < 1.0;
    return {ok, fmt::format("configs={} max residual/W={:.2e} ({}) time={:.3f}s", configs, worst,
                            worst_id.empty() ? "-" : worst_id, t)};
}

Outcome ac3_landmarks() {
    const Timer timer;
    double worst = 0.0;
    bool ok = true;
    for (const auto& spec : integer_matrix()) {
        const auto trace = run_construction(spec);
        const Torus3 torus = Torus3::from(spec);
        const double pi = std::numbers::pi;
        const double d = distance(trace.at(Label::D), project_elevation(pi, terminator_v(pi).outer, torus));
        const double e = distance(trace.at(Label::E), project_elevation(0.0, terminator_v(0.0).outer, torus));
        worst = std::max({worst, d / spec.width(), e / spec.width()});
        ok = ok && d < 1e-12 * spec.width() && e < 1e-12 * spec.width();
    }
    const double t = timer.seconds();
    ok = ok && t < 1.0;
    return {ok, fmt::format("max deviation/W={:.2e} time={:.3f}s", worst, t)};
}

Outcome ac4_oracle() {
    const Timer timer;
    double residual = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double u = 2 * std::numbers::pi * i / 10000.0;
        const TerminatorV v = terminator_v(u);
        residual = std::max({residual, std::abs(normal_dot_light(u, v.outer)), std::abs(normal_dot_light(u, v.inner))});
    }
    const Torus3 torus{2.0, 1.0};
    const double fraction = shade_fraction(torus, 1024);

    // Silhouette: every pixel whose class disagrees with the analytic
    // outline must lie within one pixel of it.
    const ShadeMask mask = visible_shade_mask(torus, 1024);
    long bad = 0;
    for (int j = 0; j < mask.rows; ++j) {
        for (int i = 0; i < mask.cols; ++i) {
            const Point2 c = mask.center(i, j);
            const bool inside = mask.at(i, j) != Pixel::Outside;
            const double az = std::abs(c.z);
            bool truth = false;
            double slack = az - torus.minor;
            if (az <= torus.minor) {
                const double half = torus.major + std::sqrt(torus.minor * torus.minor - c.z * c.z);
                truth = std::abs(c.x) <= half;
                slack = std::min(std::abs(std::abs(c.x) - half), torus.minor - az);
            }
            if (inside != truth && slack > mask.pixel) ++bad;
        }
    }
    const double t = timer.seconds();
    const bool ok = residual < 1e-12 && std::abs(fraction - 0.5) <= 0.002 && bad == 0 && t < 10.0;
    return {ok, fmt::format("|N.L| max={:.2e} fraction={:.6f} silhouette misses={} time={:.2f}s", residual, fraction,
                            bad, t)};
}

Outcome ac5_matrices() {
    const Timer timer;
    std::map<std::string, int> cells;
    std::map<std::string, int> skipped;
    for (const std::string preset : {"fig4", "fig5"}) {
        const fs::path dir = scratch("matrix_" + preset);
        if (quiet_run({"matrix", "--preset", preset, "--out", dir.string()}) != 0) {
            return {false, "matrix " + preset + " failed"};
        }
        const auto m = nlohmann::json::parse(slurp(dir / ("manifest_" + preset + ".json")));
        cells[preset] = m["cell_count"].get<int>();
        skipped[preset] = m["skipped_count"].get<int>();
        if (!fs::exists(dir / ("plate_matrix_" + preset + ".svg"))) return {false, "missing plate for " + preset};
    }
    bool horn = false;
    try {
        const TorusElevationSpec spec(12, 6);
        const auto trace = run_construction(spec);
        horn = spec.is_horn() && spec.major() == 3.0 && spec.minor() == 3.0 && trace.steps.size() == 15;
    } catch (const Error&) {
        horn = false;
    }
    const double t = timer.seconds();
    const bool ok = cells["fig4"] == 24 && cells["fig5"] == 30 && skipped["fig4"] == 0 && skipped["fig5"] == 0 && horn &&
                    t < 30.0;
    return {ok, fmt::format("fig4={} fig5={} horn 12x6={} time={:.2f}s", cells["fig4"], cells["fig5"],
                            horn ? "ok" : "failed", t)};
}

Outcome ac6_rubric() {
    std::ifstream in(SKIA_PROFILES_CSV);
    const auto rows = read_method_profiles(in);
    int matched = 0;
    for (const auto& p : rows) {
        if (p.published_score && score(p).value == *p.published_score) ++matched;
    }
    const auto proposed = load_method_profiles(SKIA_PROFILES_CSV).back();
    const int proposed_score = score(proposed).value;
    bool cap = true;
    for (int steps = 31; steps <= 80; ++steps) {
        for (int d = 0; d <= 2; ++d) {
            MethodProfile p;
            p.steps = steps;
            p.extra_drawings = d;
            cap = cap && score(p).value == 5;
        }
    }
    const bool ok = rows.size() == 18 && matched == 18 && proposed_score == 2 && cap;
    return {ok, fmt::format("published rows reproduced={}/{} proposed(steps={})={} auto-cap={}", matched, rows.size(),
                            proposed.steps, proposed_score, cap ? "ok" : "broken")};
}

Outcome ac7_agreement() {
    const Timer timer;
    std::map<std::string, double> baseline;
    {
        std::ifstream in(SKIA_TEST_DATA_DIR "/agreement_baseline.csv");
        std::string line;
        std::getline(in, line);
        while (std::getline(in, line)) {
            std::stringstream ss(line);
            std::string config, ref, value;
            std::getline(ss, config, ',');
            std::getline(ss, ref, ',');
            std::getline(ss, value, ',');
            baseline[config + "/" + ref] = std::stod(value);
        }
    }

    const auto variants = InterpretationVariant::all();
    std::vector<ComparisonReport> reports;
    int checked = 0;
    int missing = 0;
    double worst = 0.0;
    for (const auto& spec : integer_matrix()) {
        const OracleShade oracle = compute_oracle_shade(Torus3::from(spec));
        for (const auto& v : variants) {
            const auto rows = compare_config(spec, v, kAllReferences, oracle);
            for (const auto& r : rows) {
                if (v.is_canonical()) {
                    const auto it = baseline.find(r.config_id + "/" + std::string(to_string(r.reference)));
                    if (it == baseline.end()) {
                        ++missing;
                    } else {
                        ++checked;
                        worst = std::max(worst, std::abs(r.hausdorff - it->second));
                    }
                }
            }
            reports.insert(reports.end(), rows.begin(), rows.end());
        }
    }
    const auto rankings = rank_variants(reports, variants, kAllReferences);

    int canonical_first = 0;
    bool meet_above = false;
    std::string firsts;
    for (const auto& r : rankings) {
        firsts += fmt::format(" {}:{}", to_string(r.reference), r.ranking.front().variant.name());
        if (r.ranking.front().variant.is_canonical()) ++canonical_first;
        for (const auto& rv : r.ranking) {
            if (rv.variant.is_canonical()) break;
            if (rv.variant.lm_rule == LmRule::VerticalMeet) meet_above = true;
        }
    }
    const double t = timer.seconds();
    const bool ok = checked == 162 && missing == 0 && worst <= 1e-3 && canonical_first >= 1 && !meet_above && t < 120.0;
    return {ok, fmt::format("baselines {}/162 max drift={:.2e} canonical first vs {} reference(s) vertical_meet "
                            "above canonical={} firsts:{} time={:.1f}s",
                            checked, worst, canonical_first, meet_above ? "yes" : "no", firsts, t)};
}

Outcome ac8_determinism() {
    const std::vector<std::vector<std::string>> runs{
        {"construct", "--width", "6", "--height", "2"},
        {"matrix", "--preset", "fig5"},
        {"compare", "--width", "6", "--height", "2", "--variants", "all", "--export-mask"},
        {"score", "--profiles", SKIA_PROFILES_CSV},
    };
    int files = 0;
    for (std::size_t k = 0; k < runs.size(); ++k) {
        fs::path dirs[2] = {scratch(fmt::format("det{}a", k)), scratch(fmt::format("det{}b", k))};
        for (const auto& dir : dirs) {
            auto args = runs[k];
            args.insert(args.end(), {"--out", dir.string()});
            if (quiet_run(args) != 0) return {false, runs[k][0] + " failed"};
        }
        for (const auto& e : fs::recursive_directory_iterator(dirs[0])) {
            if (!e.is_regular_file()) continue;
            ++files;
            const fs::path twin = dirs[1] / fs::relative(e.path(), dirs[0]);
            if (!fs::exists(twin) || slurp(e.path()) != slurp(twin)) {
                return {false, "differs: " + fs::relative(e.path(), dirs[0]).string()};
            }
        }
    }
    return {files > 0, fmt::format("{} output files byte-identical across reruns of 4 subcommands", files)};
}

Outcome ac9_scale() {
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> height(0.5, 6.0);
    std::uniform_real_distribution<double> ratio(2.0, 8.0);
    double worst = 0.0;
    bool ok = true;
    for (int i = 0; i < 20; ++i) {
        const double h = height(rng);
        const double w = h * ratio(rng);
        const auto a = run_construction(TorusElevationSpec(w, h));
        const auto b = run_construction(TorusElevationSpec(2 * w, 2 * h));
        for (std::size_t k = 0; k < kLabelCount; ++k) {
            const double d = distance(2.0 * a.points[k], b.points[k]);
            worst = std::max(worst, d / w);
            ok = ok && d < 1e-9 * w;
        }
    }
    return {ok, fmt::format("20 configs, max |2*p(W,H) - p(2W,2H)|/W={:.2e}", worst)};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 convention angle", ac1_convention},
        {"AC2 construction invariants", ac2_invariants},
        {"AC3 landmark identity", ac3_landmarks},
        {"AC4 oracle self-checks", ac4_oracle},
        {"AC5 matrix reproduction", ac5_matrices},
        {"AC6 rubric reproduction", ac6_rubric},
        {"AC7 agreement regression", ac7_agreement},
        {"AC8 determinism", ac8_determinism},
        {"AC9 scale equivariance", ac9_scale},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        fmt::print("{} {}: {}\n", o.pass ? "PASS" : "FAIL", name, o.detail);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
