#include "skia/serialize.hpp"

#include <cmath>
#include <fmt/format.h>
#include <json.hpp>

namespace skia {

using ordered_json = nlohmann::ordered_json;

double round6(double v) {
    const double r = std::round(v * 1e6) / 1e6;
    return r == 0.0 ? 0.0 : r;
}

namespace {

ordered_json point_json(Point2 p) { return ordered_json::array({round6(p.x), round6(p.z)}); }

ordered_json polyline_json(const Polyline& pts) {
    ordered_json arr = ordered_json::array();
    for (const Point2& p : pts) {
        arr.push_back(point_json(p));
    }
    return arr;
}

ordered_json variant_json(const InterpretationVariant& v) {
    ordered_json j;
    j["name"] = v.name();
    j["h_rule"] = to_string(v.h_rule);
    j["lm_rule"] = to_string(v.lm_rule);
    j["ring_pick"] = to_string(v.ring_pick);
    return j;
}

void attach_config(ordered_json& doc, const std::string& config_json) {
    if (!config_json.empty()) {
        doc["config"] = ordered_json::parse(config_json);
    }
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string trace_to_json(const ConstructionTrace& t, const ShadePath& path,
                          const std::vector<AssertionResidual>& assertions, const std::string& config_json) {
    ordered_json doc;
    doc["schema_version"] = kTraceSchema;
    doc["spec"] = {{"width", round6(t.spec.width())},
                   {"height", round6(t.spec.height())},
                   {"R", round6(t.spec.major())},
                   {"r", round6(t.spec.minor())}};
    doc["variant"] = variant_json(t.variant);

    ordered_json points = ordered_json::object();
    for (Label l : all_labels()) {
        points[std::string(label_name(l))] = point_json(t.at(l));
    }
    doc["points"] = std::move(points);

    ordered_json lines = ordered_json::object();
    for (std::size_t i = 0; i < kLineCount; ++i) {
        const Line2& line = t.lines[i];
        lines[std::string(line_name(static_cast<LineId>(i)))] = {
            {"anchor", point_json(line.anchor())},
            {"direction", ordered_json::array({round6(line.direction().x), round6(line.direction().z)})}};
    }
    doc["lines"] = std::move(lines);

    ordered_json steps = ordered_json::array();
    for (const auto& s : t.steps) {
        steps.push_back({{"index", s.index}, {"op", s.op}, {"inputs", s.inputs}, {"outputs", s.outputs}});
    }
    doc["steps"] = std::move(steps);

    ordered_json control = ordered_json::array();
    for (Label l : kShadeCycle) {
        control.push_back(label_name(l));
    }
    doc["shade_path_order"] = std::move(control);
    doc["shade_path"] = polyline_json(path.samples);

    ordered_json checks = ordered_json::array();
    for (const auto& a : assertions) {
        checks.push_back({{"id", a.id}, {"residual", a.residual}});
    }
    doc["assertions"] = std::move(checks);
    attach_config(doc, config_json);
    return dump(doc);
}

std::string outline_to_json(const OracleShade& o, const std::string& config_json) {
    ordered_json doc;
    doc["schema_version"] = kOutlineSchema;
    doc["torus"] = {{"R", round6(o.torus.major)}, {"r", round6(o.torus.minor)}};
    doc["resolution"] = o.resolution;
    doc["shade_fraction"] = round6(o.shade_fraction);
    doc["outer_loop"] = polyline_json(o.outer_loop);
    doc["inner_loop"] = polyline_json(o.inner_loop);
    ordered_json region = ordered_json::array();
    for (const auto& loop : o.region_outline) {
        region.push_back(polyline_json(loop));
    }
    doc["region_outline"] = std::move(region);
    attach_config(doc, config_json);
    return dump(doc);
}

std::string reports_to_csv(const std::vector<ComparisonReport>& reports) {
    std::string out = kReportCsvHeader;
    out += '\n';
    for (const auto& r : reports) {
        out += fmt::format("{},{},{},{:.6f},{:.6f},{},{:.6f},{:.6f}\n", r.config_id, r.variant.name(),
                           to_string(r.reference), round6(r.hausdorff), round6(r.mean),
                           r.iou ? fmt::format("{:.6f}", round6(*r.iou)) : std::string("n/a"), round6(r.d_dev),
                           round6(r.e_dev));
    }
    return out;
}

std::string reports_to_json(const std::vector<ComparisonReport>& reports, const std::string& config_json) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json j;
        j["config"] = r.config_id;
        j["width"] = round6(r.width);
        j["height"] = round6(r.height);
        j["variant"] = r.variant.name();
        j["reference"] = to_string(r.reference);
        j["hausdorff_in"] = round6(r.hausdorff);
        j["mean_in"] = round6(r.mean);
        j["iou"] = r.iou ? ordered_json(round6(*r.iou)) : ordered_json(nullptr);
        j["iou_method"] = r.iou_method;
        j["d_dev"] = r.d_dev;
        j["e_dev"] = r.e_dev;
        rows.push_back(std::move(j));
    }
    ordered_json doc;
    doc["schema_version"] = kReportSchema;
    doc["reports"] = std::move(rows);
    attach_config(doc, config_json);
    return dump(doc);
}

std::string manifest_to_json(const std::string& preset, const std::vector<double>& widths,
                             const std::vector<double>& heights, const MatrixPlate& plate,
                             const std::string& config_json) {
    ordered_json doc;
    doc["schema_version"] = kManifestSchema;
    doc["preset"] = preset;
    doc["widths"] = widths;
    doc["heights"] = heights;
    doc["page_scale"] = round6(plate.scale);
    std::size_t built = 0;
    ordered_json cells = ordered_json::array();
    for (const auto& c : plate.cells) {
        ordered_json j;
        j["width"] = round6(c.width);
        j["height"] = round6(c.height);
        j["status"] = c.constructed ? "constructed" : "skipped";
        if (c.constructed) {
            ++built;
            j["R"] = round6(c.major);
            j["r"] = round6(c.minor);
        } else {
            j["reason"] = c.skip_reason;
        }
        cells.push_back(std::move(j));
    }
    doc["cell_count"] = built;
    doc["skipped_count"] = plate.cells.size() - built;
    doc["cells"] = std::move(cells);
    attach_config(doc, config_json);
    return dump(doc);
}

std::string rankings_to_json(const std::vector<VariantRanking>& rankings, const std::string& config_json) {
    ordered_json doc;
    doc["schema_version"] = kCalibrationSchema;
    ordered_json arr = ordered_json::array();
    for (const auto& vr : rankings) {
        ordered_json entries = ordered_json::array();
        for (const auto& e : vr.ranking) {
            entries.push_back({{"variant", e.variant.name()}, {"median_hausdorff_in", round6(e.median_hausdorff)}});
        }
        arr.push_back({{"reference", to_string(vr.reference)}, {"ranking", std::move(entries)}});
    }
    doc["rankings"] = std::move(arr);
    attach_config(doc, config_json);
    return dump(doc);
}

} // namespace skia
