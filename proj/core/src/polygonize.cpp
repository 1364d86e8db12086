#include <algorithm>

#include "pcp/hull.hpp"
#include "pcp/part.hpp"

namespace pcp {

namespace {

bool polygon_empty_in_set(const PointSet& s, const std::vector<int>& poly,
                          const std::vector<int>& members) {
    for (const Point& x : s.points()) {
        if (std::binary_search(members.begin(), members.end(), x.id)) continue;
        if (point_strictly_inside_polygon(s, poly, x)) return false;
    }
    return true;
}

bool members_empty_polygon_ok(const PointSet& s, const std::vector<int>& poly,
                              const std::vector<int>& members) {
    return polygon_is_simple(s, poly) && convex_vertex_count(s, poly) == 3 &&
           polygon_empty_in_set(s, poly, members);
}

}  // namespace

std::optional<Part> find_pseudo_polygonization(const PointSet& s, std::vector<int> members,
                                               int limit) {
    if (members.size() < 3) throw BadInput("find_pseudo_polygonization: need >= 3 members");
    std::sort(members.begin(), members.end());

    std::vector<int> hull = convex_hull(s, members);
    if (hull.size() == members.size()) {
        // Convex position: the convex polygon is the only simple
        // polygonization, so the answer is a hole or nothing.
        Part p = Part::hole(hull);
        if (classify_part(s, p).ok) {
            canonicalize(s, p);
            return p;
        }
        return std::nullopt;
    }

    const int k = static_cast<int>(members.size());
    if (k > limit)
        throw SearchLimitExceeded("find_pseudo_polygonization: " + std::to_string(k) +
                                  " members exceeds limit " + std::to_string(limit));

    // Enumerate cyclic orders: fixed smallest member first, reflections
    // quotiented by requiring second < last. Lexicographic enumeration
    // makes the first hit the lexicographically least polygon.
    std::vector<int> rest(members.begin() + 1, members.end());
    std::vector<int> poly(static_cast<size_t>(k));
    poly[0] = members[0];
    do {
        if (rest.front() > rest.back()) continue;
        std::copy(rest.begin(), rest.end(), poly.begin() + 1);
        if (!members_empty_polygon_ok(s, poly, members)) continue;
        Part p = Part::pseudo_triangle(poly);
        canonicalize(s, p);
        return p;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return std::nullopt;
}

}  // namespace pcp
