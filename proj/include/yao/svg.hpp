#pragma once

#include "yao/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

namespace yao {

namespace detail {

inline std::string xml_escape(const std::string &s) {
    std::string out;
    out.reserve(s.size());
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

}// namespace detail

struct SvgOptions {
    /// Draw every cone boundary ray around each point.
    bool cones = false;
    /// Vertex sequence to highlight; empty for none.
    std::vector<std::size_t> witness_path;
    bool labels = true;
    double width = 800.0;
};

/// Standalone SVG: points as circles, undirected edges as lines, optional
/// cone rays (class "cone") and highlighted witness path (class "witness").
/// The y axis points up, as in the usual plane drawing.
inline std::string render_svg(const DirectedGeomGraph &g, const SvgOptions &opts = {}) {
    std::ostringstream out;
    out.precision(10);
    const auto pts = g.points();

    double min_x = 0.0, max_x = 1.0, min_y = 0.0, max_y = 1.0;
    if (!pts.empty()) {
        min_x = max_x = pts[0].x;
        min_y = max_y = pts[0].y;
        for (const auto &p : pts) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
    const double margin = 0.05 * span;
    const double vb_w = max_x - min_x + 2 * margin;
    const double vb_h = max_y - min_y + 2 * margin;
    const double dot = 0.006 * span;
    const double stroke = 0.002 * span;
    const double height = opts.width * vb_h / vb_w;

    // flip y: screen y = (max_y + margin) - y
    auto sx = [&](double x) { return x - min_x + margin; };
    auto sy = [&](double y) { return max_y + margin - y; };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << vb_w << ' ' << vb_h << "\">\n";
    if (pts.empty()) {
        out << "</svg>\n";
        return out.str();
    }
    out << "<style>line.edge{stroke:#222;stroke-width:" << stroke << "}line.cone{stroke:#bbb;stroke-width:" << stroke / 2
        << "}line.witness{stroke:#d22;stroke-width:" << 2.5 * stroke << "}circle{fill:#000}text{font-size:" << 4 * dot
        << "px;font-family:sans-serif}</style>\n";

    if (opts.cones) {
        const auto cones = g.params().cones();
        const double ray = 0.08 * span;
        for (const auto &p : pts) {
            for (int c = 1; c <= cones.k(); ++c) {
                const Point2 q = p + polar(ray, cones.start_ray(c));
                out << "<line class=\"cone\" x1=\"" << sx(p.x) << "\" y1=\"" << sy(p.y) << "\" x2=\"" << sx(q.x) << "\" y2=\""
                    << sy(q.y) << "\"/>\n";
            }
        }
    }
    for (const auto &[i, j] : g.undirected_pairs()) {
        out << "<line class=\"edge\" x1=\"" << sx(pts[i].x) << "\" y1=\"" << sy(pts[i].y) << "\" x2=\"" << sx(pts[j].x)
            << "\" y2=\"" << sy(pts[j].y) << "\"/>\n";
    }
    for (std::size_t s = 1; s < opts.witness_path.size(); ++s) {
        const auto &p = pts[opts.witness_path[s - 1]];
        const auto &q = pts[opts.witness_path[s]];
        out << "<line class=\"witness\" x1=\"" << sx(p.x) << "\" y1=\"" << sy(p.y) << "\" x2=\"" << sx(q.x) << "\" y2=\""
            << sy(q.y) << "\"/>\n";
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out << "<circle cx=\"" << sx(pts[i].x) << "\" cy=\"" << sy(pts[i].y) << "\" r=\"" << dot << "\"/>\n";
        if (opts.labels) {
            if (auto label = g.point_set().label(i)) {
                out << "<text x=\"" << sx(pts[i].x) + 1.5 * dot << "\" y=\"" << sy(pts[i].y) - 1.5 * dot << "\">" << detail::xml_escape(*label)
                    << "</text>\n";
            }
        }
    }
    out << "</svg>\n";
    return out.str();
}

}// namespace yao
