#include "skia/svg.hpp"

#include <cmath>
#include <fmt/format.h>

namespace skia::svg {

std::string escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

std::string num(double v) {
    std::string s = fmt::format("{:.3f}", v);
    if (s == "-0.000") {
        s = "0.000";
    }
    return s;
}

Document::Document(double width, double height) : width_(width), height_(height) {}

void Document::indent() { body_.append(static_cast<std::size_t>(depth_) * 2, ' '); }

void Document::metadata(std::string_view text) {
    indent();
    body_ += fmt::format("<metadata>{}</metadata>\n", escape(text));
}

void Document::title(std::string_view text) {
    indent();
    body_ += fmt::format("<title>{}</title>\n", escape(text));
}

void Document::open_group(std::string_view attributes) {
    indent();
    body_ += fmt::format("<g {}>\n", attributes);
    ++depth_;
}

void Document::close_group() {
    --depth_;
    indent();
    body_ += "</g>\n";
}

void Document::raw(std::string_view markup) {
    indent();
    body_ += markup;
    body_ += '\n';
}

void Document::line(Point2 a, Point2 b, std::string_view style) {
    indent();
    body_ += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" {}/>\n", num(a.x), num(a.z), num(b.x), num(b.z),
                         style);
}

void Document::polyline(std::span<const Point2> pts, std::string_view style, bool closed) {
    indent();
    std::string coords;
    coords.reserve(pts.size() * 16);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i > 0) {
            coords.push_back(' ');
        }
        coords += num(pts[i].x);
        coords.push_back(',');
        coords += num(pts[i].z);
    }
    body_ += fmt::format("<{} points=\"{}\" {}/>\n", closed ? "polygon" : "polyline", coords, style);
}

void Document::path(std::string_view d, std::string_view style) {
    indent();
    body_ += fmt::format("<path d=\"{}\" {}/>\n", d, style);
}

void Document::circle(Point2 c, double r, std::string_view style) {
    indent();
    body_ += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"{}\" {}/>\n", num(c.x), num(c.z), num(r), style);
}

void Document::rect(double x, double y, double w, double h, std::string_view style) {
    indent();
    body_ += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" {}/>\n", num(x), num(y), num(w), num(h),
                         style);
}

void Document::text(Point2 at, std::string_view content, std::string_view attributes) {
    indent();
    body_ += fmt::format("<text x=\"{}\" y=\"{}\" {}>{}</text>\n", num(at.x), num(at.z), attributes, escape(content));
}

std::string Document::str() const {
    return fmt::format(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" "
        "viewBox=\"0 0 {0} {1}\">\n{2}</svg>\n",
        num(width_), num(height_), body_);
}

} // namespace skia::svg
