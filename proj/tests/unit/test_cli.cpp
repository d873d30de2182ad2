#include "xml_check.hpp"

#include "skia/cli.hpp"
#include "skia/error.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <gtest/gtest.h>
#include <json.hpp>
#include <sstream>

namespace fs = std::filesystem;
using namespace skia;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult skia_run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("skia_cli_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

} // namespace

TEST(ParseRange, Forms) {
    EXPECT_EQ(cli::parse_range("20:17"), (std::vector<double>{20, 19, 18, 17}));
    EXPECT_EQ(cli::parse_range("1:3"), (std::vector<double>{1, 2, 3}));
    EXPECT_EQ(cli::parse_range("16,14"), (std::vector<double>{16, 14}));
    EXPECT_THROW(cli::parse_range(""), Error);
}

TEST(ConfigText, AppliesAndRejects) {
    cli::RunConfig c;
    cli::apply_config_text(c, "# comment\nwidth = 12\nheight = 3.5\nvariants = \"all\"\nsvg = false\n");
    EXPECT_EQ(c.width, 12);
    EXPECT_EQ(c.height, 3.5);
    EXPECT_EQ(c.variants, "all");
    EXPECT_FALSE(c.svg);
    EXPECT_THROW(cli::apply_config_text(c, "colour = 3\n"), Error);
    const auto j = nlohmann::json::parse(cli::config_to_json(c));
    EXPECT_FALSE(j.contains("out_dir"));
    EXPECT_EQ(j["width"], 12);
}

TEST(Cli, ConstructWritesFiles) {
    const fs::path dir = scratch("construct");
    const CliResult r = skia_run({"construct", "--width", "6", "--height", "2", "--out", dir.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(slurp(dir / "trace_6x2.json"));
    EXPECT_EQ(j["points"]["D"][0], -2.707107);
    EXPECT_EQ(j["points"]["D"][1], -0.707107);
    const std::string svg = slurp(dir / "plate_construction_6x2.svg");
    EXPECT_TRUE(xml_check::well_formed_single_root(svg));
}

TEST(Cli, SpindleIsAUserError) {
    const fs::path dir = scratch("spindle");
    const CliResult r = skia_run({"construct", "--width", "10", "--height", "6", "--out", dir.string()});
    EXPECT_EQ(r.code, cli::kExitUserError);
    EXPECT_NE(r.err.find("W >= 2H"), std::string::npos) << r.err;
}

TEST(Cli, HornConstructs) {
    const fs::path dir = scratch("horn");
    EXPECT_EQ(skia_run({"construct", "--width", "12", "--height", "6", "--out", dir.string()}).code, 0);
}

TEST(Cli, UnknownFlagIsAUserError) {
    EXPECT_EQ(skia_run({"construct", "--bogus"}).code, cli::kExitUserError);
    EXPECT_EQ(skia_run({}).code, cli::kExitUserError);
}

TEST(Cli, MatrixPresets) {
    for (auto [preset, cells] : {std::pair{"fig4", 24}, {"fig5", 30}}) {
        const fs::path dir = scratch(std::string("matrix_") + preset);
        const CliResult r = skia_run({"matrix", "--preset", preset, "--out", dir.string()});
        ASSERT_EQ(r.code, 0) << r.err;
        const auto m = nlohmann::json::parse(slurp(dir / (std::string("manifest_") + preset + ".json")));
        EXPECT_EQ(m["cell_count"], cells);
        EXPECT_EQ(m["skipped_count"], 0);
        EXPECT_TRUE(fs::exists(dir / (std::string("plate_matrix_") + preset + ".svg")));
    }
    const fs::path dir = scratch("matrix_ranges");
    const CliResult r = skia_run({"matrix", "--widths", "20:12", "--heights", "6:1", "--no-svg", "--out", dir.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    int traces = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir / "traces")) ++traces;
    EXPECT_EQ(traces, 54);
}

TEST(Cli, MatrixSkippedCellIsRecorded) {
    const fs::path dir = scratch("matrix_skip");
    const CliResult r = skia_run({"matrix", "--widths", "10", "--heights", "6", "--out", dir.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    bool found = false;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.path().filename().string().rfind("manifest_", 0) == 0) {
            const auto m = nlohmann::json::parse(slurp(e.path()));
            EXPECT_EQ(m["skipped_count"], 1);
            found = true;
        }
    }
    EXPECT_TRUE(found);
}

TEST(Cli, CompareSingleConfig) {
    const fs::path dir = scratch("compare");
    const CliResult r = skia_run({"compare", "--width", "6", "--height", "2", "--out", dir.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string csv = slurp(dir / "compare_report.csv");
    EXPECT_EQ(count_lines(csv), 1 + 3);
    const auto j = nlohmann::json::parse(slurp(dir / "compare_report.json"));
    for (const auto& row : j["reports"]) {
        EXPECT_LT(row["d_dev"].get<double>(), 6e-9);
        EXPECT_LT(row["e_dev"].get<double>(), 6e-9);
    }
    EXPECT_TRUE(fs::exists(dir / "plate_overlay_6x2.svg"));
}

TEST(Cli, ComparePresetAllVariantsRowCount) {
    const fs::path dir = scratch("compare_fig5");
    const CliResult r = skia_run({"compare", "--preset", "fig5", "--variants", "all", "--resolution", "256", "--samples",
                            "512", "--no-svg", "--out", dir.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(count_lines(slurp(dir / "compare_report.csv")), 1 + 30 * 8 * 3);
    EXPECT_TRUE(fs::exists(dir / "calibration.json"));
}

TEST(Cli, ScoreShippedTable) {
    const fs::path dir = scratch("score");
    const CliResult r = skia_run({"score", "--profiles", SKIA_PROFILES_CSV, "--out", dir.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("19 profiles scored, 0 mismatches"), std::string::npos) << r.out;
    const std::string csv = slurp(dir / "scores.csv");
    EXPECT_EQ(count_lines(csv), 1 + 19);
}

TEST(Cli, ScoreMalformedProfiles) {
    const fs::path dir = scratch("score_bad");
    {
        std::ofstream f(dir / "bad.csv");
        f << "name,steps,extra_drawings,angles,multiple_projection,published_score,citation\n"
          << "x,3,0,0,no,1,c\n"
          << "y,3,0,0,maybe,1,c\n";
    }
    const CliResult r = skia_run({"score", "--profiles", (dir / "bad.csv").string(), "--out", dir.string()});
    EXPECT_EQ(r.code, cli::kExitUserError);
    EXPECT_NE(r.err.find("row 2"), std::string::npos) << r.err;
}

TEST(Cli, Precedence) {
    const fs::path dir = scratch("precedence");
    {
        std::ofstream f(dir / "run.toml");
        f << "width = 8\nheight = 2\nsvg = false\n";
    }
    const std::string cfg = (dir / "run.toml").string();
    // File over defaults.
    CliResult r = skia_run({"--config", cfg, "construct", "--out", dir.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(fs::exists(dir / "trace_8x2.json"));
    EXPECT_FALSE(fs::exists(dir / "plate_construction_8x2.svg"));
    // Flags over the file.
    r = skia_run({"--config", cfg, "construct", "--width", "9", "--out", dir.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(slurp(dir / "trace_9x2.json"));
    EXPECT_EQ(j["config"]["width"], 9);
    EXPECT_EQ(j["config"]["svg"], false);
}

TEST(Cli, OutDirFromEnvironment) {
    const fs::path dir = scratch("env");
    ::setenv("SKIA_OUT_DIR", dir.string().c_str(), 1);
    const CliResult r = skia_run({"construct", "--no-svg"});
    ::unsetenv("SKIA_OUT_DIR");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(fs::exists(dir / "trace_6x2.json"));
}

TEST(Cli, Deterministic) {
    const std::vector<std::vector<std::string>> runs{
        {"construct", "--width", "17", "--height", "5"},
        {"matrix", "--preset", "fig4"},
        {"compare", "--width", "6", "--height", "2", "--variants", "all", "--resolution", "512", "--export-mask"},
        {"score", "--profiles", SKIA_PROFILES_CSV},
    };
    for (std::size_t k = 0; k < runs.size(); ++k) {
        const fs::path a = scratch("det_a" + std::to_string(k));
        const fs::path b = scratch("det_b" + std::to_string(k));
        auto args_a = runs[k];
        auto args_b = runs[k];
        args_a.insert(args_a.end(), {"--out", a.string()});
        args_b.insert(args_b.end(), {"--out", b.string()});
        ASSERT_EQ(skia_run(args_a).code, 0);
        ASSERT_EQ(skia_run(args_b).code, 0);
        int files = 0;
        for (const auto& e : fs::recursive_directory_iterator(a)) {
            if (!e.is_regular_file()) continue;
            ++files;
            const fs::path other = b / fs::relative(e.path(), a);
            ASSERT_TRUE(fs::exists(other)) << other;
            EXPECT_EQ(slurp(e.path()), slurp(other)) << e.path();
        }
        EXPECT_GT(files, 0);
    }
}
