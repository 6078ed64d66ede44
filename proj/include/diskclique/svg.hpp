#pragma once

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "triangles.hpp"

namespace diskclique {

struct ViewBox {
    double min_x = -1, min_y = -1, max_x = 1, max_y = 1;

    void include(double x, double y) {
        min_x = std::min(min_x, x);
        min_y = std::min(min_y, y);
        max_x = std::max(max_x, x);
        max_y = std::max(max_y, y);
    }
    static ViewBox empty() {
        constexpr double inf = std::numeric_limits<double>::infinity();
        return {inf, inf, -inf, -inf};
    }
    ViewBox padded(double fraction) const {
        double w = std::max(max_x - min_x, 1e-9), h = std::max(max_y - min_y, 1e-9);
        return {min_x - w * fraction, min_y - h * fraction, max_x + w * fraction, max_y + h * fraction};
    }
};

namespace detail {

inline const char* palette(std::size_t i) {
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
    return colors[i % (sizeof(colors) / sizeof(colors[0]))];
}

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

inline std::string svg_header(const ViewBox& box) {
    std::ostringstream out;
    out << std::setprecision(12);
    // y grows downwards in SVG, so the box is flipped
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\""
        << box.min_x << ' ' << -box.max_y << ' ' << (box.max_x - box.min_x) << ' ' << (box.max_y - box.min_y)
        << "\" preserveAspectRatio=\"xMidYMid meet\">\n";
    return out.str();
}

}  // namespace detail

/// Disks as circles, labels at the centers. The view is fitted to the disks whose radius is at
/// most twice the median, so the huge disks of builder output do not swamp the picture.
inline std::string render_disks_svg(const Representation& rep) {
    std::vector<double> radii;
    for (const auto& d : rep.disks) radii.push_back(to_double(d.radius));
    std::vector<double> sorted = radii;
    std::sort(sorted.begin(), sorted.end());
    double cutoff = sorted.empty() ? 0 : 2 * sorted[sorted.size() / 2];

    ViewBox box = ViewBox::empty();
    for (std::size_t i = 0; i < rep.disks.size(); ++i) {
        if (radii[i] > cutoff) continue;
        double x = to_double(rep.disks[i].center.x), y = to_double(rep.disks[i].center.y);
        box.include(x - radii[i], y - radii[i]);
        box.include(x + radii[i], y + radii[i]);
    }
    if (rep.disks.empty()) box = ViewBox{};
    box = box.padded(0.1);
    double stroke = (box.max_x - box.min_x) / 800;

    std::ostringstream out;
    out << detail::svg_header(box) << std::setprecision(12);
    for (std::size_t i = 0; i < rep.disks.size(); ++i) {
        const auto& d = rep.disks[i];
        double x = to_double(d.center.x), y = -to_double(d.center.y);
        out << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << radii[i] << "\" fill=\"" << detail::palette(i)
            << "\" fill-opacity=\"0.15\" stroke=\"" << detail::palette(i) << "\" stroke-width=\"" << stroke << "\"/>\n";
        std::string label = rep.labels.empty() ? std::to_string(i) : rep.labels[i];
        if (radii[i] <= cutoff)
            out << "  <text x=\"" << x << "\" y=\"" << y << "\" font-size=\"" << stroke * 12
                << "\" text-anchor=\"middle\">" << detail::xml_escape(label) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

/// Filled triangles with opacity, fitted to `focus` (or to all corners when it is empty).
inline std::string render_triangles_svg(const std::vector<Triangle>& ts, const std::vector<Point>& focus = {}) {
    ViewBox box = ViewBox::empty();
    if (focus.empty()) {
        for (const auto& t : ts)
            for (const Point* p : t.corners()) box.include(to_double(p->x), to_double(p->y));
    } else {
        for (const auto& p : focus) box.include(to_double(p.x), to_double(p.y));
    }
    if (ts.empty() && focus.empty()) box = ViewBox{};
    box = box.padded(0.1);
    double stroke = (box.max_x - box.min_x) / 800;

    std::ostringstream out;
    out << detail::svg_header(box) << std::setprecision(12);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        out << "  <polygon points=\"";
        for (const Point* p : ts[i].corners()) out << to_double(p->x) << ',' << -to_double(p->y) << ' ';
        out << "\" fill=\"" << detail::palette(i) << "\" fill-opacity=\"0.2\" stroke=\"" << detail::palette(i)
            << "\" stroke-width=\"" << stroke << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace diskclique
