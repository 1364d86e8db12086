#include <algorithm>
#include <cstdlib>

#include "pcp/algo13.hpp"
#include "pcp/angular.hpp"
#include "pcp/partitioner.hpp"

namespace pcp {
namespace detail {

std::optional<Part> make_block(const PointSet& s, const std::vector<int>& ids) {
    if (ids.size() < 3) return std::nullopt;
    std::vector<int> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() > 9 && !in_convex_position(s, sorted)) return std::nullopt;
    try {
        return find_pseudo_polygonization(s, sorted, 9);
    } catch (const SearchLimitExceeded&) {
        return std::nullopt;
    }
}

std::optional<std::vector<Part>> split_residual(const PointSet& s, const std::vector<int>& ids) {
    const int m = static_cast<int>(ids.size());
    if (m == 0) return std::vector<Part>{};
    if (m < 3) return std::nullopt;
    if (m <= 5) {
        auto part = make_block(s, ids);
        if (!part) return std::nullopt;
        return std::vector<Part>{*part};
    }
    // 6..8 points: cut by a generic-direction sweep into two groups that
    // stay line-separated, so emptiness survives inside the region.
    Vec dir = choose_sweep_direction(s, ids);
    std::vector<int> order = ids;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        I128 px = dot(dir, Vec{s[x].x, s[x].y});
        I128 py = dot(dir, Vec{s[y].x, s[y].y});
        if (px != py) return px < py;
        return x < y;
    });
    std::vector<int> firsts;
    if (m == 6) firsts = {3};
    else if (m == 7) firsts = {4, 3};
    else firsts = {4};
    for (int take : firsts) {
        std::vector<int> lo(order.begin(), order.begin() + take);
        std::vector<int> hi(order.begin() + take, order.end());
        auto p1 = make_block(s, lo);
        if (!p1) continue;
        auto p2 = make_block(s, hi);
        if (!p2) continue;
        return std::vector<Part>{*p1, *p2};
    }
    // Sweep cuts failed; enumerate every 2-subset split with block sizes
    // >= 3 (at most C(8,4) candidates, reached only on odd residues).
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        if (!(mask & 1u)) continue;  // canonical: first point in the low block
        std::vector<int> lo, hi;
        for (int i = 0; i < m; ++i)
            ((mask >> i) & 1u ? lo : hi).push_back(order[static_cast<size_t>(i)]);
        if (lo.size() < 3 || hi.size() < 3) continue;
        auto p1 = make_block(s, lo);
        if (!p1) continue;
        auto p2 = make_block(s, hi);
        if (!p2) continue;
        if (!parts_disjoint(s, *p1, *p2).ok) continue;
        return std::vector<Part>{*p1, *p2};
    }
    return std::nullopt;
}

std::optional<std::vector<Part>> two_blocks_any(const PointSet& s, const std::vector<int>& ids) {
    // Exhaustive split of up to 10 points into two blocks of size >= 3;
    // a last-resort used when no separating line produces legal sizes.
    const int m = static_cast<int>(ids.size());
    if (m < 6 || m > 10) return std::nullopt;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        if (!(mask & 1u)) continue;
        std::vector<int> lo, hi;
        for (int i = 0; i < m; ++i)
            ((mask >> i) & 1u ? lo : hi).push_back(ids[static_cast<size_t>(i)]);
        if (lo.size() < 3 || hi.size() < 3) continue;
        auto p1 = make_block(s, lo);
        if (!p1) continue;
        auto p2 = make_block(s, hi);
        if (!p2) continue;
        if (!parts_disjoint(s, *p1, *p2).ok) continue;
        return std::vector<Part>{*p1, *p2};
    }
    return std::nullopt;
}

bool partition_ok(const PointSet& s, Partition& p, int max_parts) {
    if (static_cast<int>(p.parts.size()) > max_parts) return false;
    for (Part& part : p.parts) {
        if (part.members.size() < 3) return false;
        canonicalize(s, part);
    }
    std::sort(p.parts.begin(), p.parts.end(), [](const Part& x, const Part& y) {
        return x.members.front() < y.members.front();
    });
    return verify_partition(s, p).overall;
}

namespace {

struct HeartGeom {
    int pivot, b1, b2;
    std::vector<int> beyond1, beyond2;  // edge residues of the two pivot lines
    std::vector<int> tri;               // triangle points, angularly sorted from b1 toward b2
};

std::optional<HeartGeom> heart_conditions(const PointSet& s, int pivot, int b1, int b2) {
    if (pivot == b1 || pivot == b2 || b1 == b2) return std::nullopt;
    const Point& p = s[pivot];
    const int side1 = orient_sign(p, s[b1], s[b2]);  // b2 relative to line (pivot, b1)
    const int side2 = orient_sign(p, s[b2], s[b1]);
    const int base_side = orient_sign(s[b1], s[b2], p);

    HeartGeom g{pivot, b1, b2, {}, {}, {}};
    for (const Point& x : s.points()) {
        if (x.id == pivot || x.id == b1 || x.id == b2) continue;
        bool bey1 = orient_sign(p, s[b1], x) == -side1;
        bool bey2 = orient_sign(p, s[b2], x) == -side2;
        if (bey1 && bey2) return std::nullopt;  // (A): opposite wedge at the pivot
        if (orient_sign(s[b1], s[b2], x) == -base_side)
            return std::nullopt;  // (A): far side of the base
        if (bey1) g.beyond1.push_back(x.id);
        else if (bey2) g.beyond2.push_back(x.id);
        else g.tri.push_back(x.id);
    }
    if (g.beyond1.size() > 4 || g.beyond2.size() > 4) return std::nullopt;  // (B)
    g.tri = sort_ccw_around(s, pivot, s[b1] - p, g.tri);
    if (side1 < 0) std::reverse(g.tri.begin(), g.tri.end());  // sweep from b1 toward b2
    return g;
}

HomPoint alpha_for(const PointSet& s, const HeartGeom& g, int c) {
    const int t = static_cast<int>(g.tri.size());
    Point u, v;
    if (c <= 0) {
        u = s[g.b1];
        v = s[g.tri.front()];
    } else if (c >= t) {
        u = s[g.tri.back()];
        v = s[g.b2];
    } else {
        u = s[g.tri[c - 1]];
        v = s[g.tri[c]];
    }
    HomPoint mid = HomPoint::from_halves(u.x + v.x, u.y + v.y);
    return line_intersection(HomPoint::from(s[g.pivot]), mid, HomPoint::from(s[g.b1]),
                             HomPoint::from(s[g.b2]));
}

// Inner vertices of the hull path from `from` to `to` that avoids the
// direct edge (from, to); nullopt if that edge is not on the hull.
std::optional<std::vector<int>> chain_between(const PointSet& s, std::vector<int> pts, int from,
                                              int to) {
    pts.push_back(from);
    pts.push_back(to);
    std::vector<int> cyc = convex_hull(s, pts);
    auto it = std::find(cyc.begin(), cyc.end(), from);
    if (it == cyc.end()) return std::nullopt;
    std::rotate(cyc.begin(), it, cyc.end());
    if (cyc.size() >= 2 && cyc[1] == to)
        return std::vector<int>(cyc.rbegin(), cyc.rend() - 2);  // reverse of cyc[2..]
    if (cyc.back() == to) return std::vector<int>(cyc.begin() + 1, cyc.end() - 1);
    return std::nullopt;  // direct edge not on the hull
}

std::optional<Partition> heart_plan(const PointSet& s, const HeartGeom& g, int c) {
    const int t = static_cast<int>(g.tri.size());
    if (c < 0 || c > t) return std::nullopt;
    std::vector<int> left(g.tri.begin(), g.tri.begin() + c);
    std::vector<int> right(g.tri.begin() + c, g.tri.end());

    std::vector<int> inner1, inner2;
    if (!left.empty()) {
        auto ch = chain_between(s, left, g.b1, g.pivot);
        if (!ch) return std::nullopt;
        inner1 = *ch;
    }
    if (!right.empty()) {
        auto ch = chain_between(s, right, g.pivot, g.b2);
        if (!ch) return std::nullopt;
        inner2 = *ch;
    }

    auto minus = [](const std::vector<int>& all, const std::vector<int>& chain) {
        std::vector<int> out;
        for (int id : all)
            if (std::find(chain.begin(), chain.end(), id) == chain.end()) out.push_back(id);
        return out;
    };
    std::vector<int> s2 = g.beyond1;
    for (int id : minus(left, inner1)) s2.push_back(id);
    std::vector<int> s3 = g.beyond2;
    for (int id : minus(right, inner2)) s3.push_back(id);
    auto legal = [](size_t k) { return k == 0 || k == 3 || k == 4; };
    if (!legal(s2.size()) || !legal(s3.size())) return std::nullopt;

    std::vector<int> poly;
    poly.push_back(g.b1);
    for (int id : inner1) poly.push_back(id);
    poly.push_back(g.pivot);
    for (int id : inner2) poly.push_back(id);
    poly.push_back(g.b2);

    Part part1 = poly.size() == 3 ? Part::hole(poly) : Part::pseudo_triangle(poly);
    canonicalize(s, part1);
    if (!classify_part(s, part1).ok) return std::nullopt;

    Partition out;
    out.parts.push_back(std::move(part1));
    for (const std::vector<int>* block : {&s2, &s3}) {
        if (block->empty()) continue;
        auto part = make_block(s, *block);
        if (!part) return std::nullopt;
        out.parts.push_back(std::move(*part));
    }
    return out;
}

}  // namespace

std::optional<Partition> heart_attempt(const PointSet& s, int pivot, int b1, int b2) {
    auto g = heart_conditions(s, pivot, b1, b2);
    if (!g) return std::nullopt;
    const int t = static_cast<int>(g->tri.size());
    const int canonical = 5 - static_cast<int>(g->beyond1.size());
    std::vector<int> cs;
    for (int d = 0; d <= t; ++d) {  // canonical first, then nearest slides
        if (canonical - d >= 0 && canonical - d <= t) cs.push_back(canonical - d);
        if (d > 0 && canonical + d >= 0 && canonical + d <= t) cs.push_back(canonical + d);
    }
    for (int c : cs) {
        auto p = heart_plan(s, *g, c);
        if (p && partition_ok(s, *p, 3)) return p;
    }
    return std::nullopt;
}

std::optional<Partition> heart_sweep(const PointSet& s, const std::vector<int>& hull) {
    const int k = static_cast<int>(hull.size());
    // Hull-edge bases first (condition (A) holds automatically there),
    // then every base pair.
    for (int e = 0; e < k; ++e) {
        int b1 = hull[e], b2 = hull[(e + 1) % k];
        for (int pivot = 0; pivot < s.size(); ++pivot) {
            if (pivot == b1 || pivot == b2) continue;
            auto p = heart_attempt(s, pivot, b1, b2);
            if (p) return p;
        }
    }
    for (int b1 = 0; b1 < s.size(); ++b1)
        for (int b2 = b1 + 1; b2 < s.size(); ++b2)
            for (int pivot = 0; pivot < s.size(); ++pivot) {
                if (pivot == b1 || pivot == b2) continue;
                auto p = heart_attempt(s, pivot, b1, b2);
                if (p) return p;
            }
    return std::nullopt;
}

}  // namespace detail

std::vector<Part> residual_split(const PointSet& s, const std::vector<int>& ids) {
    if (ids.size() > 8) throw BadInput("residual_split: more than 8 points");
    auto parts = detail::split_residual(s, ids);
    if (!parts)
        throw BranchMisfire("residual_split: no legal split for " + std::to_string(ids.size()) +
                            " points");
    return *parts;
}

std::optional<HeartCertificate> find_heart(const PointSet& s,
                                           const std::vector<std::array<int, 3>>& candidates) {
    for (const auto& [pivot, b1, b2] : candidates) {
        auto g = detail::heart_conditions(s, pivot, b1, b2);
        if (!g) continue;
        HeartCertificate cert;
        cert.pivot = pivot;
        cert.base1 = b1;
        cert.base2 = b2;
        cert.a = static_cast<int>(g->beyond1.size());
        cert.b = static_cast<int>(g->beyond2.size());
        cert.left_count = 5 - cert.a;
        cert.alpha = detail::alpha_for(s, *g, cert.left_count);
        return cert;
    }
    return std::nullopt;
}

Partition heart_partition(const PointSet& s, const HeartCertificate& cert) {
    auto g = detail::heart_conditions(s, cert.pivot, cert.base1, cert.base2);
    if (!g) throw InvalidCertificate("heart_partition: conditions (A)/(B) do not hold");
    if (static_cast<int>(g->beyond1.size()) != cert.a ||
        static_cast<int>(g->beyond2.size()) != cert.b)
        throw InvalidCertificate("heart_partition: stored residue counts do not match");
    // alpha must split the triangle points exactly as recorded.
    int left = 0;
    const int toward_b1 = orient_sign(HomPoint::from(s[cert.pivot]), cert.alpha,
                                      HomPoint::from(s[cert.base1]));
    for (int id : g->tri)
        if (orient_sign(HomPoint::from(s[cert.pivot]), cert.alpha, HomPoint::from(s[id])) ==
            toward_b1)
            ++left;
    if (left != cert.left_count)
        throw InvalidCertificate("heart_partition: alpha split count mismatch");
    auto p = detail::heart_plan(s, *g, cert.left_count);
    if (!p || !detail::partition_ok(s, *p, 3))
        throw InvalidCertificate("heart_partition: residues admit no legal parts");
    return *p;
}

}  // namespace pcp
