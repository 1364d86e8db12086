#include "pcp/svg.hpp"

#include <algorithm>
#include <sstream>

namespace pcp {

namespace {

const char* kFills[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1",
                        "#edc948", "#76b7b2", "#ff9da7", "#9c755f", "#bab0ac"};

}  // namespace

std::string render_svg(const PointSet& s, const Partition& p) {
    Coord min_x = 0, max_x = 1, min_y = 0, max_y = 1;
    if (s.size() > 0) {
        min_x = max_x = s[0].x;
        min_y = max_y = s[0].y;
        for (const Point& pt : s.points()) {
            min_x = std::min(min_x, pt.x);
            max_x = std::max(max_x, pt.x);
            min_y = std::min(min_y, pt.y);
            max_y = std::max(max_y, pt.y);
        }
    }
    const double span = std::max<double>(
        1.0, std::max(static_cast<double>(max_x - min_x), static_cast<double>(max_y - min_y)));
    const double scale = 720.0 / span;
    const double margin = 40.0;
    auto tx = [&](Coord x) { return margin + (static_cast<double>(x - min_x)) * scale; };
    auto ty = [&](Coord y) { return margin + (static_cast<double>(max_y - y)) * scale; };

    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    const double w = margin * 2 + static_cast<double>(max_x - min_x) * scale;
    const double h = margin * 2 + static_cast<double>(max_y - min_y) * scale + 30.0;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (size_t i = 0; i < p.parts.size(); ++i) {
        const Part& part = p.parts[i];
        const char* fill = kFills[i % (sizeof kFills / sizeof kFills[0])];
        if (!part.polygon.empty()) {
            out << "<polygon points=\"";
            for (size_t k = 0; k < part.polygon.size(); ++k) {
                const Point& pt = s[part.polygon[k]];
                out << (k ? " " : "") << tx(pt.x) << "," << ty(pt.y);
            }
            out << "\" fill=\"" << fill << "\" fill-opacity=\"0.35\" stroke=\"" << fill
                << "\" stroke-width=\"1.5\"/>\n";
        } else if (part.kind == PartKind::DegenerateSegment) {
            const Point& a = s[part.members[0]];
            const Point& b = s[part.members[1]];
            out << "<line x1=\"" << tx(a.x) << "\" y1=\"" << ty(a.y) << "\" x2=\"" << tx(b.x)
                << "\" y2=\"" << ty(b.y) << "\" stroke=\"" << fill
                << "\" stroke-width=\"2\"/>\n";
        }
    }
    for (const Point& pt : s.points()) {
        out << "<circle cx=\"" << tx(pt.x) << "\" cy=\"" << ty(pt.y)
            << "\" r=\"3\" fill=\"black\"/>\n";
        out << "<text x=\"" << tx(pt.x) + 5 << "\" y=\"" << ty(pt.y) - 5
            << "\" font-size=\"11\" fill=\"#555\">" << pt.id << "</text>\n";
    }
    out << "<text x=\"" << margin << "\" y=\"" << h - 12
        << "\" font-size=\"15\" fill=\"black\">" << (p.branch.empty() ? "-" : p.branch)
        << " (" << p.parts.size() << " parts)</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace pcp
