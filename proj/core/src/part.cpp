#include "pcp/part.hpp"

#include <algorithm>
#include <set>

#include "pcp/hull.hpp"

namespace pcp {

std::string to_string(PartKind k) {
    switch (k) {
        case PartKind::Hole: return "hole";
        case PartKind::PseudoTriangle: return "pseudo_triangle";
        case PartKind::DegeneratePoint: return "point";
        case PartKind::DegenerateSegment: return "segment";
    }
    return "?";
}

Part Part::hole(std::vector<int> polygon_ccw) {
    Part p;
    p.kind = PartKind::Hole;
    p.polygon = std::move(polygon_ccw);
    p.members = p.polygon;
    std::sort(p.members.begin(), p.members.end());
    return p;
}

Part Part::pseudo_triangle(std::vector<int> polygon) {
    Part p;
    p.kind = PartKind::PseudoTriangle;
    p.polygon = std::move(polygon);
    p.members = p.polygon;
    std::sort(p.members.begin(), p.members.end());
    return p;
}

Part Part::degenerate(std::vector<int> members) {
    Part p;
    p.kind = members.size() == 1 ? PartKind::DegeneratePoint : PartKind::DegenerateSegment;
    p.members = std::move(members);
    std::sort(p.members.begin(), p.members.end());
    return p;
}

void canonicalize(const PointSet& s, Part& part) {
    std::sort(part.members.begin(), part.members.end());
    if (part.polygon.empty()) return;
    if (polygon_area2(s, part.polygon) < 0)
        std::reverse(part.polygon.begin(), part.polygon.end());
    auto it = std::min_element(part.polygon.begin(), part.polygon.end());
    std::rotate(part.polygon.begin(), it, part.polygon.end());
}

I128 polygon_area2(const PointSet& s, const std::vector<int>& poly) {
    I128 a = 0;
    const int k = static_cast<int>(poly.size());
    for (int i = 0; i < k; ++i) {
        const Point& p = s[poly[i]];
        const Point& q = s[poly[(i + 1) % k]];
        a += static_cast<I128>(p.x) * q.y - static_cast<I128>(p.y) * q.x;
    }
    return a;
}

bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = orient_sign(a, b, c);
    int o2 = orient_sign(a, b, d);
    int o3 = orient_sign(c, d, a);
    int o4 = orient_sign(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

static bool point_strictly_on_segment(const Point& a, const Point& b, const Point& x) {
    if (orient_sign(a, b, x) != 0) return false;
    return dot(x - a, x - b) < 0;
}

bool polygon_is_simple(const PointSet& s, const std::vector<int>& poly) {
    const int k = static_cast<int>(poly.size());
    if (k < 3) return false;
    std::set<int> uniq(poly.begin(), poly.end());
    if (static_cast<int>(uniq.size()) != k) return false;
    for (int i = 0; i < k; ++i) {
        const Point& a = s[poly[i]];
        const Point& b = s[poly[(i + 1) % k]];
        for (int j = i + 1; j < k; ++j) {
            const Point& c = s[poly[j]];
            const Point& d = s[poly[(j + 1) % k]];
            bool adjacent = (j == i + 1) || (i == 0 && j == k - 1);
            if (adjacent) continue;
            if (segments_cross_properly(a, b, c, d)) return false;
            // General position rules out overlaps, but a vertex sitting
            // on a non-incident edge still breaks simplicity.
            if (point_strictly_on_segment(a, b, c) || point_strictly_on_segment(a, b, d) ||
                point_strictly_on_segment(c, d, a) || point_strictly_on_segment(c, d, b))
                return false;
        }
    }
    return true;
}

int convex_vertex_count(const PointSet& s, const std::vector<int>& poly) {
    const int k = static_cast<int>(poly.size());
    int orient = polygon_area2(s, poly) > 0 ? 1 : -1;
    int cnt = 0;
    for (int i = 0; i < k; ++i) {
        const Point& prev = s[poly[(i + k - 1) % k]];
        const Point& v = s[poly[i]];
        const Point& next = s[poly[(i + 1) % k]];
        if (orient_sign(prev, v, next) == orient) ++cnt;
    }
    return cnt;
}

bool point_on_polygon_boundary(const PointSet& s, const std::vector<int>& poly, const Point& x) {
    const int k = static_cast<int>(poly.size());
    for (int i = 0; i < k; ++i) {
        const Point& a = s[poly[i]];
        const Point& b = s[poly[(i + 1) % k]];
        if ((a.x == x.x && a.y == x.y) || point_strictly_on_segment(a, b, x)) return true;
    }
    return false;
}

bool point_strictly_inside_polygon(const PointSet& s, const std::vector<int>& poly,
                                   const Point& x) {
    if (point_on_polygon_boundary(s, poly, x)) return false;
    // Exact crossing number against the upward vertical ray from x;
    // vertex incidences are handled with the half-open rule.
    const int k = static_cast<int>(poly.size());
    int crossings = 0;
    for (int i = 0; i < k; ++i) {
        const Point& a = s[poly[i]];
        const Point& b = s[poly[(i + 1) % k]];
        bool a_right = a.x > x.x;
        bool b_right = b.x > x.x;
        if (a_right == b_right) continue;
        // Edge straddles the vertical line; does it pass above x?
        int o = orient_sign(a, b, x);
        if (b.x > a.x ? (o < 0) : (o > 0)) ++crossings;
    }
    return (crossings & 1) != 0;
}

ClassifyVerdict classify_part(const PointSet& s, const Part& part) {
    const size_t m = part.members.size();
    switch (part.kind) {
        case PartKind::DegeneratePoint:
            if (m != 1) return {false, "point block must have exactly 1 member", -1};
            return {true, "", -1};
        case PartKind::DegenerateSegment:
            if (m != 2) return {false, "segment block must have exactly 2 members", -1};
            return {true, "", -1};
        default: break;
    }
    if (part.polygon.empty())
        throw MalformedPart("nondegenerate part without polygon_order");
    std::vector<int> sorted_poly = part.polygon;
    std::sort(sorted_poly.begin(), sorted_poly.end());
    if (sorted_poly != part.members)
        return {false, "polygon vertices do not match the member set", -1};

    if (part.kind == PartKind::Hole) {
        if (m < 3) return {false, "hole needs at least 3 members", -1};
        // The polygon must be exactly the hull of the members, traversed CCW.
        std::vector<int> h = convex_hull(s, part.members);
        if (h.size() != m) return {false, "hole members are not in convex position", -1};
        auto start = std::find(h.begin(), h.end(), part.polygon[0]);
        std::rotate(h.begin(), start, h.end());
        if (h != part.polygon)
            return {false, "hole polygon is not the CCW hull cycle of its members", -1};
    } else {  // PseudoTriangle
        if (m < 4)
            return {false, "pseudo-triangle with 3 vertices is a triangle; classify as hole", -1};
        if (!polygon_is_simple(s, part.polygon))
            return {false, "pseudo-triangle polygon is not simple", -1};
        int cv = convex_vertex_count(s, part.polygon);
        if (cv != 3)
            return {false,
                    "pseudo-triangle needs exactly 3 convex vertices, found " +
                        std::to_string(cv),
                    -1};
    }

    // Emptiness is always relative to the full set.
    for (const Point& x : s.points()) {
        if (std::binary_search(part.members.begin(), part.members.end(), x.id)) continue;
        if (point_strictly_inside_polygon(s, part.polygon, x))
            return {false, "interior contains a point of the set", x.id};
    }
    return {true, "", -1};
}

namespace {

bool point_in_closed_part(const PointSet& s, const Part& a, const Point& x) {
    switch (a.kind) {
        case PartKind::DegeneratePoint: {
            const Point& p = s[a.members[0]];
            return p.x == x.x && p.y == x.y;
        }
        case PartKind::DegenerateSegment: {
            const Point& p = s[a.members[0]];
            const Point& q = s[a.members[1]];
            if ((p.x == x.x && p.y == x.y) || (q.x == x.x && q.y == x.y)) return true;
            return point_strictly_on_segment(p, q, x);
        }
        default:
            return point_strictly_inside_polygon(s, a.polygon, x) ||
                   point_on_polygon_boundary(s, a.polygon, x);
    }
}

std::vector<std::pair<int, int>> boundary_edges(const PointSet&, const Part& a) {
    std::vector<std::pair<int, int>> out;
    if (!a.polygon.empty()) {
        const int k = static_cast<int>(a.polygon.size());
        for (int i = 0; i < k; ++i) out.emplace_back(a.polygon[i], a.polygon[(i + 1) % k]);
    } else if (a.kind == PartKind::DegenerateSegment) {
        out.emplace_back(a.members[0], a.members[1]);
    }
    return out;
}

}  // namespace

DisjointVerdict parts_disjoint(const PointSet& s, const Part& a, const Part& b) {
    for (int id : a.members)
        if (std::binary_search(b.members.begin(), b.members.end(), id))
            return {false, "parts share a vertex", id};
    for (int id : b.members)
        if (point_in_closed_part(s, a, s[id]))
            return {false, "vertex of one part inside the closed region of the other", id};
    for (int id : a.members)
        if (point_in_closed_part(s, b, s[id]))
            return {false, "vertex of one part inside the closed region of the other", id};
    for (auto [a1, a2] : boundary_edges(s, a))
        for (auto [b1, b2] : boundary_edges(s, b))
            if (segments_cross_properly(s[a1], s[a2], s[b1], s[b2]))
                return {false, "part boundaries cross", a1};
    return {true, "", -1};
}

VerificationReport verify_partition(const PointSet& s, const Partition& p) {
    VerificationReport r;
    // Coverage: member sets pairwise disjoint with union S.
    std::vector<int> owner(static_cast<size_t>(s.size()), -1);
    r.coverage_ok = true;
    for (size_t i = 0; i < p.parts.size() && r.coverage_ok; ++i) {
        for (int id : p.parts[i].members) {
            if (id < 0 || id >= s.size()) {
                r.coverage_ok = false;
                r.coverage_reason = "member id out of range: " + std::to_string(id);
                break;
            }
            if (owner[static_cast<size_t>(id)] >= 0) {
                r.coverage_ok = false;
                r.coverage_reason = "point " + std::to_string(id) + " appears in parts " +
                                    std::to_string(owner[static_cast<size_t>(id)]) + " and " +
                                    std::to_string(i);
                break;
            }
            owner[static_cast<size_t>(id)] = static_cast<int>(i);
        }
    }
    if (r.coverage_ok) {
        for (int id = 0; id < s.size(); ++id) {
            if (owner[static_cast<size_t>(id)] < 0) {
                r.coverage_ok = false;
                r.coverage_reason = "point " + std::to_string(id) + " not covered";
                break;
            }
        }
    }

    bool all_parts_ok = true;
    for (size_t i = 0; i < p.parts.size(); ++i) {
        ClassifyVerdict v = classify_part(s, p.parts[i]);
        r.per_part.push_back({static_cast<int>(i), v.ok, v.reason, v.witness});
        all_parts_ok = all_parts_ok && v.ok;
    }
    bool all_pairs_ok = true;
    for (size_t i = 0; i < p.parts.size(); ++i) {
        for (size_t j = i + 1; j < p.parts.size(); ++j) {
            DisjointVerdict v = parts_disjoint(s, p.parts[i], p.parts[j]);
            r.per_pair.push_back(
                {static_cast<int>(i), static_cast<int>(j), v.ok, v.reason, v.witness});
            all_pairs_ok = all_pairs_ok && v.ok;
        }
    }
    r.overall = r.coverage_ok && all_parts_ok && all_pairs_ok;
    return r;
}

}  // namespace pcp
