#include "skia/plates.hpp"

#include "skia/error.hpp"
#include "skia/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numbers>

namespace skia {

namespace {

// Stadium outline of the torus, already in screen units.
std::string outline_path(const svg::ViewMap& map, double R, double r) {
    const Point2 tl = map({-R, r});
    const Point2 tr = map({R, r});
    const Point2 br = map({R, -r});
    const Point2 bl = map({-R, -r});
    const std::string rr = svg::num(map.length(r));
    return fmt::format("M {} {} L {} {} A {} {} 0 0 1 {} {} L {} {} A {} {} 0 0 1 {} {} Z", svg::num(tl.x),
                       svg::num(tl.z), svg::num(tr.x), svg::num(tr.z), rr, rr, svg::num(br.x), svg::num(br.z),
                       svg::num(bl.x), svg::num(bl.z), rr, rr, svg::num(tl.x), svg::num(tl.z));
}

Polyline to_screen(const svg::ViewMap& map, const Polyline& pts) {
    Polyline out;
    out.reserve(pts.size());
    for (const Point2& p : pts) {
        out.push_back(map(p));
    }
    return out;
}

std::string display_label(Label l) {
    switch (l) {
    case Label::n1: return "n′";
    case Label::o1: return "o′";
    case Label::n2: return "n″";
    case Label::o2: return "o″";
    default: return std::string(label_name(l));
    }
}

std::string stroke(const std::string& color, double width, std::string_view extra = {}) {
    return fmt::format("fill=\"none\" stroke=\"{}\" stroke-width=\"{}\"{}{}", color, svg::num(width),
                       extra.empty() ? "" : " ", extra);
}

// Shade fill: the traced loop under the even-odd rule, clipped to the outline.
void draw_shaded_path(svg::Document& doc, const svg::ViewMap& map, const ShadePath& path, double R, double r,
                      const PlateStyle& style, const std::string& clip_id) {
    doc.raw(fmt::format("<clipPath id=\"{}\"><path d=\"{}\"/></clipPath>", clip_id, outline_path(map, R, r)));
    const Polyline screen = to_screen(map, path.samples);
    doc.open_group(fmt::format("clip-path=\"url(#{})\"", clip_id));
    doc.polyline(screen, fmt::format("fill=\"{}\" fill-rule=\"evenodd\" stroke=\"none\"", style.shade_fill), true);
    doc.close_group();
    doc.path(outline_path(map, R, r), stroke("#000000", style.outline_stroke));
    doc.polyline(screen, stroke(style.construction_color, style.path_stroke, "stroke-linejoin=\"round\""));
}

} // namespace

std::string plate_construction(const ConstructionTrace& t, const ShadePath& path, const PlateStyle& style,
                               const std::string& metadata) {
    const double R = t.spec.major();
    const double r = t.spec.minor();
    const double W = t.spec.width();
    const double Ht = t.spec.height();
    const double m = style.margin;
    svg::Document doc((W + 2.0 * m) * style.scale, (Ht + 2.0 * m) * style.scale);
    const svg::ViewMap map{style.scale, (0.5 * W + m) * style.scale, (0.5 * Ht + m) * style.scale};

    doc.title(fmt::format("Torus shade construction W={:g} H={:g} ({})", W, Ht, t.variant.name()));
    if (!metadata.empty()) {
        doc.metadata(metadata);
    }

    doc.open_group("id=\"shade\"");
    draw_shaded_path(doc, map, path, R, r, style, "outline");
    doc.close_group();

    doc.open_group(fmt::format("id=\"rings\" {}", stroke("#555555", style.construction_stroke)));
    doc.circle(map(t.at(Label::P)), map.length(r), "");
    doc.circle(map(t.at(Label::Q)), map.length(r), "");
    doc.close_group();

    // Construction lines as the segments actually drawn, extensions included.
    const std::array<std::pair<Label, Label>, 22> segments{{
        {Label::A, Label::B}, {Label::D, Label::E}, {Label::H, Label::J}, {Label::I, Label::K},
        {Label::L, Label::M}, {Label::H, Label::I}, {Label::P, Label::D}, {Label::Q, Label::E},
        {Label::P, Label::n}, {Label::P, Label::n1}, {Label::P, Label::n2}, {Label::Q, Label::o},
        {Label::Q, Label::o1}, {Label::Q, Label::o2}, {Label::H, Label::n}, {Label::I, Label::o},
        {Label::D, Label::n1}, {Label::E, Label::o1}, {Label::J, Label::L}, {Label::K, Label::M},
        {Label::P, Label::J}, {Label::Q, Label::K},
    }};
    doc.open_group(fmt::format("id=\"construction\" {}", stroke("#333333", style.construction_stroke,
                                                                 "stroke-dasharray=\"4 2\"")));
    for (const auto& [a, b] : segments) {
        doc.line(map(t.at(a)), map(t.at(b)), "");
    }
    doc.close_group();

    // Labels: offset outward from C, nudged radially on collision.
    doc.open_group(fmt::format("id=\"points\" font-family=\"serif\" font-size=\"{}\"", svg::num(style.label_size)));
    std::vector<Point2> placed;
    const double offset = 0.14;
    const double clearance = 0.16;
    for (Label l : all_labels()) {
        const Point2 p = t.at(l);
        doc.circle(map(p), 2.0, "fill=\"#000000\"");
        Vec2 dir = norm(p - Point2{}) > 1e-9 ? normalized(p - Point2{}) : Vec2{0.0, 1.0};
        Point2 at = p + offset * dir;
        for (int k = 1; k <= 12; ++k) {
            const bool clash = std::any_of(placed.begin(), placed.end(),
                                           [&](Point2 q) { return distance(q, at) < clearance; });
            if (!clash) {
                break;
            }
            const double a = k * std::numbers::pi / 6.0;
            const Vec2 rot{dir.x * std::cos(a) - dir.z * std::sin(a), dir.x * std::sin(a) + dir.z * std::cos(a)};
            at = p + (offset + 0.04 * k) * rot;
        }
        placed.push_back(at);
        doc.text(map(at), display_label(l), "class=\"label\" text-anchor=\"middle\" dominant-baseline=\"middle\"");
    }
    doc.close_group();
    return doc.str();
}

MatrixPlate plate_matrix(const std::vector<double>& widths, const std::vector<double>& heights,
                         const PlateStyle& style, const std::string& metadata) {
    if (widths.empty() || heights.empty()) {
        throw Error(ErrorCode::InvalidArgument, "matrix needs at least one width and one height");
    }
    const double pad = 0.5;
    const double caption = 0.6;
    const double cell_w = *std::max_element(widths.begin(), widths.end()) + 2.0 * pad;
    const double cell_h = *std::max_element(heights.begin(), heights.end()) + 2.0 * pad + caption;
    const double natural_w = cell_w * static_cast<double>(widths.size());
    const double natural_h = cell_h * static_cast<double>(heights.size());

    MatrixPlate plate;
    plate.scale = std::min(style.page_width / natural_w, style.page_height / natural_h);
    svg::Document doc(style.page_width * style.scale, style.page_height * style.scale);
    doc.title(fmt::format("Torus shade matrix, {} widths x {} heights", widths.size(), heights.size()));
    if (!metadata.empty()) {
        doc.metadata(metadata);
    }
    doc.open_group(fmt::format("id=\"matrix\" transform=\"scale({})\"", fmt::format("{:.6f}", plate.scale)));

    int index = 0;
    for (std::size_t row = 0; row < heights.size(); ++row) {
        for (std::size_t col = 0; col < widths.size(); ++col, ++index) {
            MatrixCell cell{widths[col], heights[row], false, {}, 0.0, 0.0};
            const double left = cell_w * static_cast<double>(col);
            const double top = cell_h * static_cast<double>(row);
            const svg::ViewMap map{style.scale, (left + 0.5 * cell_w) * style.scale,
                                   (top + pad + 0.5 * (cell_h - 2.0 * pad - caption)) * style.scale};
            const Point2 label_at{(left + 0.5 * cell_w) * style.scale, (top + cell_h - 0.5 * caption) * style.scale};
            doc.open_group(fmt::format("class=\"cell\" data-width=\"{:g}\" data-height=\"{:g}\"", cell.width,
                                       cell.height));
            try {
                const TorusElevationSpec spec(cell.width, cell.height);
                const ConstructionTrace trace = run_construction(spec);
                const ShadePath path = trace_shade_path(trace, kMinPathSamples);
                cell.constructed = true;
                cell.major = spec.major();
                cell.minor = spec.minor();
                draw_shaded_path(doc, map, path, spec.major(), spec.minor(), style, fmt::format("clip{}", index));
                doc.text(label_at, fmt::format("{:g}×{:g}", cell.width, cell.height),
                         "class=\"annotation\" text-anchor=\"middle\" font-family=\"serif\" font-size=\"28\"");
            } catch (const Error& e) {
                cell.skip_reason = std::string(to_string(e.code()));
                doc.rect(left * style.scale + 4.0, top * style.scale + 4.0, cell_w * style.scale - 8.0,
                         cell_h * style.scale - 8.0, "fill=\"none\" stroke=\"#999999\" stroke-dasharray=\"6 4\"");
                doc.text(label_at, fmt::format("{:g}×{:g} skipped: {}", cell.width, cell.height, cell.skip_reason),
                         "class=\"annotation skipped\" text-anchor=\"middle\" font-family=\"serif\" font-size=\"28\"");
            }
            doc.close_group();
            plate.cells.push_back(std::move(cell));
        }
    }
    doc.close_group();
    plate.svg = doc.str();
    return plate;
}

std::string plate_overlay(const ConstructionTrace& t, const ShadePath& path, const OracleShade& oracle,
                          const std::vector<ComparisonReport>& reports, const PlateStyle& style,
                          const std::string& metadata) {
    const double R = t.spec.major();
    const double r = t.spec.minor();
    const double W = t.spec.width();
    const double Ht = t.spec.height();
    const double m = style.margin;
    const double caption_lines = static_cast<double>(reports.size()) + 1.0;
    const double caption_h = caption_lines * 1.4 * style.label_size / style.scale;
    svg::Document doc((W + 2.0 * m) * style.scale, (Ht + 2.0 * m + caption_h) * style.scale);
    const svg::ViewMap map{style.scale, (0.5 * W + m) * style.scale, (0.5 * Ht + m) * style.scale};

    doc.title(fmt::format("Construction vs oracle W={:g} H={:g} ({})", W, Ht, t.variant.name()));
    if (!metadata.empty()) {
        doc.metadata(metadata);
    }
    doc.path(outline_path(map, R, r), stroke("#000000", style.outline_stroke));

    const Point2 oracle_d = project_elevation(std::numbers::pi, terminator_v(std::numbers::pi).outer, oracle.torus);
    const Point2 oracle_e = project_elevation(0.0, terminator_v(0.0).outer, oracle.torus);

    doc.open_group("id=\"oracle\"");
    doc.polyline(to_screen(map, oracle.outer_loop), stroke(style.oracle_outer_color, 1.0), false);
    doc.polyline(to_screen(map, oracle.inner_loop),
                 stroke(style.oracle_inner_color, 1.0, "stroke-dasharray=\"3 3\""), false);
    for (const auto& loop : oracle.region_outline) {
        doc.polyline(to_screen(map, loop), stroke(style.oracle_region_color, 1.0, "stroke-dasharray=\"1 2\""), false);
    }
    for (Point2 p : {oracle_d, oracle_e}) {
        const Point2 s = map(p);
        doc.line({s.x - 4.0, s.z - 4.0}, {s.x + 4.0, s.z + 4.0}, stroke(style.oracle_outer_color, 1.0));
        doc.line({s.x - 4.0, s.z + 4.0}, {s.x + 4.0, s.z - 4.0}, stroke(style.oracle_outer_color, 1.0));
    }
    doc.close_group();

    doc.open_group("id=\"construction\"");
    doc.polyline(to_screen(map, path.samples), stroke(style.construction_color, style.path_stroke), false);
    for (Label l : {Label::D, Label::E}) {
        doc.circle(map(t.at(l)), 3.0, stroke(style.construction_color, 1.0));
    }
    doc.close_group();

    doc.open_group(fmt::format("id=\"caption\" font-family=\"monospace\" font-size=\"{}\"", svg::num(style.label_size)));
    double y = (Ht + 2.0 * m) * style.scale + style.label_size;
    doc.text({style.label_size, y}, fmt::format("config {} variant {}", config_id(t.spec), t.variant.name()), "");
    for (const auto& rep : reports) {
        y += 1.4 * style.label_size;
        doc.text({style.label_size, y},
                 fmt::format("{}: hausdorff={:.6f} in mean={:.6f} in iou={} d_dev={:.6f} e_dev={:.6f}",
                             to_string(rep.reference), rep.hausdorff, rep.mean,
                             rep.iou ? fmt::format("{:.6f}", *rep.iou) : std::string("n/a"), rep.d_dev, rep.e_dev),
                 "");
    }
    doc.close_group();
    return doc.str();
}

} // namespace skia
