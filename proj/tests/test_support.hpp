#pragma once

#include <algorithm>
#include <vector>

#include "pcp/geometry.hpp"
#include "pcp/hull.hpp"
#include "pcp/pointgen.hpp"

namespace testsupport {

inline pcp::PointSet pts(std::vector<std::pair<pcp::Coord, pcp::Coord>> xy) {
    return pcp::PointSet::from_xy(xy);
}

// For classifier examples that are deliberately degenerate (collinear
// triples); the predicates stay well-defined.
inline pcp::PointSet pts_unchecked(std::vector<std::pair<pcp::Coord, pcp::Coord>> xy) {
    return pcp::PointSet::unchecked(xy);
}

inline pcp::PointSet uniform(int n, std::uint64_t seed, pcp::Coord bbox = 1000) {
    pcp::GenSpec spec;
    spec.kind = pcp::GenKind::Uniform;
    spec.n = n;
    spec.seed = seed;
    spec.bbox = bbox;
    return pcp::generate(spec);
}

// O(n^4) extreme-point oracle: a point is on the hull iff it is not
// strictly inside the hull of the others, tested by triangle membership.
inline std::vector<int> brute_force_hull_members(const pcp::PointSet& s,
                                                 const std::vector<int>& ids) {
    std::vector<int> extreme;
    for (int cand : ids) {
        bool inside = false;
        for (size_t i = 0; i < ids.size() && !inside; ++i)
            for (size_t j = i + 1; j < ids.size() && !inside; ++j)
                for (size_t k = j + 1; k < ids.size() && !inside; ++k) {
                    int a = ids[i], b = ids[j], c = ids[k];
                    if (a == cand || b == cand || c == cand) continue;
                    int o1 = pcp::orient_sign(s[a], s[b], s[cand]);
                    int o2 = pcp::orient_sign(s[b], s[c], s[cand]);
                    int o3 = pcp::orient_sign(s[c], s[a], s[cand]);
                    if (o1 != 0 && o1 == o2 && o2 == o3) inside = true;
                }
        if (!inside) extreme.push_back(cand);
    }
    return extreme;
}

inline std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// ── independent polygonization oracle ────────────────────────────────
// Enumerates every cyclic order and re-implements the simple /
// convex-count / emptiness checks from the orientation predicate alone,
// so it shares no code with the library search it cross-checks.

inline bool oracle_segments_cross(const pcp::Point& a, const pcp::Point& b, const pcp::Point& c,
                                  const pcp::Point& d) {
    return pcp::orient_sign(a, b, c) * pcp::orient_sign(a, b, d) < 0 &&
           pcp::orient_sign(c, d, a) * pcp::orient_sign(c, d, b) < 0;
}

inline bool oracle_simple(const pcp::PointSet& s, const std::vector<int>& poly) {
    const int k = static_cast<int>(poly.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (j == i + 1 || (i == 0 && j == k - 1)) continue;
            if (oracle_segments_cross(s[poly[i]], s[poly[(i + 1) % k]], s[poly[j]],
                                      s[poly[(j + 1) % k]]))
                return false;
        }
    return true;
}

inline int oracle_convex_count(const pcp::PointSet& s, const std::vector<int>& poly) {
    const int k = static_cast<int>(poly.size());
    pcp::I128 area2 = 0;
    for (int i = 0; i < k; ++i) {
        const pcp::Point& p = s[poly[i]];
        const pcp::Point& q = s[poly[(i + 1) % k]];
        area2 += static_cast<pcp::I128>(p.x) * q.y - static_cast<pcp::I128>(p.y) * q.x;
    }
    const int orient = area2 > 0 ? 1 : -1;
    int cnt = 0;
    for (int i = 0; i < k; ++i)
        if (pcp::orient_sign(s[poly[(i + k - 1) % k]], s[poly[i]], s[poly[(i + 1) % k]]) ==
            orient)
            ++cnt;
    return cnt;
}

inline bool oracle_inside(const pcp::PointSet& s, const std::vector<int>& poly,
                          const pcp::Point& x) {
    const int k = static_cast<int>(poly.size());
    int crossings = 0;
    for (int i = 0; i < k; ++i) {
        const pcp::Point& a = s[poly[i]];
        const pcp::Point& b = s[poly[(i + 1) % k]];
        bool a_up = a.y > x.y;
        bool b_up = b.y > x.y;
        if (a_up == b_up) continue;
        int o = pcp::orient_sign(a, b, x);
        if (b.y > a.y ? (o > 0) : (o < 0)) ++crossings;
    }
    return (crossings & 1) != 0;
}

inline bool oracle_polygonizable(const pcp::PointSet& s, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    std::vector<int> rest(members.begin() + 1, members.end());
    std::sort(rest.begin(), rest.end());
    do {
        std::vector<int> poly{members[0]};
        for (int id : rest) poly.push_back(id);
        if (!oracle_simple(s, poly)) continue;
        int cv = oracle_convex_count(s, poly);
        // a block is valid as a pseudo-triangle (exactly 3 convex) or as
        // a hole (every vertex convex)
        if (cv != 3 && cv != static_cast<int>(poly.size())) continue;
        bool empty = true;
        for (const pcp::Point& x : s.points()) {
            if (std::binary_search(members.begin(), members.end(), x.id)) continue;
            if (oracle_inside(s, poly, x)) {
                empty = false;
                break;
            }
        }
        if (empty) return true;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return false;
}

}  // namespace testsupport
