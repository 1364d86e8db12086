#include "pcp/geometry.hpp"

#include <algorithm>
#include <cstdlib>

namespace pcp {

std::string GpViolation::describe() const {
    if (coincident())
        return "coincident pair (" + std::to_string(a) + ", " + std::to_string(b) + ")";
    return "collinear triple (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
           std::to_string(c) + ")";
}

static std::vector<Point> to_points(const std::vector<std::pair<Coord, Coord>>& xy) {
    std::vector<Point> pts;
    pts.reserve(xy.size());
    int id = 0;
    for (auto [x, y] : xy) pts.push_back(Point{x, y, id++});
    return pts;
}

PointSet PointSet::from_xy(const std::vector<std::pair<Coord, Coord>>& xy) {
    for (auto [x, y] : xy) {
        if (std::llabs(x) > kCoordLimit || std::llabs(y) > kCoordLimit)
            throw BadInput("coordinate out of range: (" + std::to_string(x) + ", " +
                           std::to_string(y) + ")");
    }
    PointSet s;
    s.pts_ = to_points(xy);
    if (auto v = general_position_check(s.pts_))
        throw BadInput("points not in general position: " + v->describe());
    return s;
}

PointSet PointSet::unchecked(const std::vector<std::pair<Coord, Coord>>& xy) {
    PointSet s;
    s.pts_ = to_points(xy);
    return s;
}

std::vector<int> PointSet::all_ids() const {
    std::vector<int> ids(pts_.size());
    for (size_t i = 0; i < pts_.size(); ++i) ids[i] = static_cast<int>(i);
    return ids;
}

std::optional<GpViolation> general_position_check(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pts[i].x == pts[j].x && pts[i].y == pts[j].y)
                return GpViolation{i, j, -1};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (orient_sign(pts[i], pts[j], pts[k]) == 0)
                    return GpViolation{i, j, k};
    return std::nullopt;
}

std::optional<GpViolation> general_position_check(const PointSet& s) {
    return general_position_check(s.points());
}

Side side_of(const PointSet& s, DirectedLine line, int r) {
    int o = orient_sign(s[line.p], s[line.q], s[r]);
    if (o == 0) throw BadInput("side_of: reference point lies on the line");
    return o > 0 ? Side::Left : Side::Right;
}

std::vector<int> halfplane_points(const PointSet& s, DirectedLine line, Side side,
                                  const std::vector<int>& ids) {
    std::vector<int> out;
    const int want = static_cast<int>(side);
    for (int id : ids) {
        if (id == line.p || id == line.q) continue;
        if (orient_sign(s[line.p], s[line.q], s[id]) == want) out.push_back(id);
    }
    return out;
}

std::vector<int> halfplane_points(const PointSet& s, DirectedLine line, Side side) {
    return halfplane_points(s, line, side, s.all_ids());
}

bool cone_contains(const PointSet& s, const Cone& c, const Point& x) {
    const Point& p = s[c.apex];
    const Point& a = s[c.arm1];
    const Point& b = s[c.arm2];
    int oab = orient_sign(p, a, b);
    if (oab == 0) throw BadInput("cone_contains: degenerate cone");
    return orient_sign(p, a, x) == oab && orient_sign(p, b, x) == -oab;
}

}  // namespace pcp
