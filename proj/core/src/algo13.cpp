#include "pcp/algo13.hpp"

#include <algorithm>
#include <array>

#include "pcp/angular.hpp"
#include "pcp/oracle.hpp"

namespace pcp {
namespace detail {

namespace {

// ─── small helpers ──────────────────────────────────────────────────

std::optional<Part> hole_from(const PointSet& s, std::vector<int> ids) {
    if (ids.size() < 3) return std::nullopt;
    std::sort(ids.begin(), ids.end());
    std::vector<int> h = convex_hull(s, ids);
    if (h.size() != ids.size()) return std::nullopt;
    Part p = Part::hole(h);
    canonicalize(s, p);
    if (!classify_part(s, p).ok) return std::nullopt;
    return p;
}

// Large blocks in the case machines are always holes; skipping the
// pseudo-triangle search keeps failed candidates cheap.
std::optional<Part> block_fast(const PointSet& s, const std::vector<int>& ids) {
    if (ids.size() >= 8) return hole_from(s, ids);
    return make_block(s, ids);
}

std::vector<int> complement_of(const PointSet& s, const std::vector<const std::vector<int>*>& used) {
    std::vector<char> taken(static_cast<size_t>(s.size()), 0);
    for (const auto* g : used)
        for (int id : *g) taken[static_cast<size_t>(id)] = 1;
    std::vector<int> out;
    for (int id = 0; id < s.size(); ++id)
        if (!taken[static_cast<size_t>(id)]) out.push_back(id);
    return out;
}

bool inside_triangle(const PointSet& s, int a, int b, int c, const Point& x) {
    int o1 = orient_sign(s[a], s[b], x);
    int o2 = orient_sign(s[b], s[c], x);
    int o3 = orient_sign(s[c], s[a], x);
    return o1 != 0 && o1 == o2 && o2 == o3;
}

std::vector<int> posed_cycle(const std::vector<int>& cyc, int base, bool refl) {
    const int m = static_cast<int>(cyc.size());
    std::vector<int> out(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        out[static_cast<size_t>(i)] =
            cyc[static_cast<size_t>(refl ? ((base - i) % m + m) % m : (base + i) % m)];
    return out;
}

// Finishes a candidate: classify/verify everything, <= 3 parts.
std::optional<Partition> finish(const PointSet& s, std::vector<std::optional<Part>> parts,
                                const char* branch) {
    Partition p;
    for (auto& part : parts) {
        if (!part) return std::nullopt;
        if (part->members.empty()) continue;
        p.parts.push_back(std::move(*part));
    }
    p.branch = branch;
    if (!partition_ok(s, p, 3)) return std::nullopt;
    return p;
}

// ─── ear construction ───────────────────────────────────────────────

}  // namespace

std::optional<Partition> ear_at(const PointSet& s, const std::vector<int>& hull, int ear_index) {
    const int k = static_cast<int>(hull.size());
    const int prev = hull[static_cast<size_t>((ear_index + k - 1) % k)];
    const int v = hull[static_cast<size_t>(ear_index)];
    const int nxt = hull[static_cast<size_t>((ear_index + 1) % k)];

    std::vector<int> ear_pts;
    for (const Point& x : s.points())
        if (x.id != prev && x.id != v && x.id != nxt && inside_triangle(s, prev, v, nxt, x))
            ear_pts.push_back(x.id);
    if (ear_pts.size() < 2) return std::nullopt;

    Cone cone{prev, v, nxt};
    int p;
    try {
        p = kth_angular_neighbor(
            s, prev, v, [&](const Point& x) { return cone_contains(s, cone, x); }, 1);
    } catch (const Error&) {
        return std::nullopt;
    }

    std::vector<int> rest;
    for (int id = 0; id < s.size(); ++id)
        if (id != p && id != v) rest.push_back(id);
    std::vector<int> nh = convex_hull(s, rest);
    auto it = std::find(nh.begin(), nh.end(), prev);
    if (it == nh.end()) return std::nullopt;
    std::rotate(nh.begin(), it, nh.end());
    std::vector<int> chain;
    size_t pos = 1;
    while (pos < nh.size() && nh[pos] != nxt) chain.push_back(nh[pos++]);
    if (pos >= nh.size() || chain.empty()) return std::nullopt;
    for (int id : chain)
        if (std::find(hull.begin(), hull.end(), id) != hull.end()) return std::nullopt;

    std::vector<int> poly{prev, v, nxt};
    for (auto rit = chain.rbegin(); rit != chain.rend(); ++rit) poly.push_back(*rit);
    poly.push_back(p);

    Part part1 = Part::pseudo_triangle(poly);
    canonicalize(s, part1);
    if (!classify_part(s, part1).ok) {
        auto alt = make_block(s, part1.members);
        if (!alt) return std::nullopt;
        part1 = std::move(*alt);
    }
    std::vector<int> resid = complement_of(s, {&part1.members});
    auto tail = split_residual(s, resid);
    if (!tail) return std::nullopt;

    Partition out;
    out.parts.push_back(std::move(part1));
    for (Part& t : *tail) out.parts.push_back(std::move(t));
    if (!partition_ok(s, out, 3)) return std::nullopt;
    return out;
}

namespace {

std::optional<Partition> ear_internal(const PointSet& s, const std::vector<int>& hull) {
    for (int i = 0; i < static_cast<int>(hull.size()); ++i) {
        auto p = ear_at(s, hull, i);
        if (p) return p;
    }
    return std::nullopt;
}

// ─── outer-halfplane split ──────────────────────────────────────────

std::optional<Partition> outer_split_internal(const PointSet& s,
                                              const LayerDecomposition& layers) {
    if (layers.layers.size() < 2) return std::nullopt;
    const std::vector<int>& l2 = layers.layers[1];
    const int m = static_cast<int>(l2.size());
    if (m < 3) return std::nullopt;
    for (int e = 0; e < m; ++e) {
        int p = l2[static_cast<size_t>(e)];
        int q = l2[static_cast<size_t>((e + 1) % m)];
        int r = l2[static_cast<size_t>((e + 2) % m)];
        int inner = orient_sign(s[p], s[q], s[r]);
        std::vector<int> outer, rest;
        for (const Point& x : s.points()) {
            if (x.id == p || x.id == q) continue;
            (orient_sign(s[p], s[q], x) == -inner ? outer : rest).push_back(x.id);
        }
        if (outer.size() < 3) continue;
        const size_t rest_n = rest.size();
        std::optional<Partition> cand;
        if (rest_n == 0) {
            std::vector<int> all = outer;
            all.push_back(p);
            all.push_back(q);
            cand = finish(s, {hole_from(s, all)}, "");
        } else if (rest_n >= 3 && rest_n <= 8) {
            std::vector<int> first = outer;
            first.push_back(p);
            first.push_back(q);
            auto part1 = hole_from(s, first);
            auto tail = split_residual(s, rest);
            if (part1 && tail) {
                Partition out;
                out.parts.push_back(std::move(*part1));
                for (Part& t : *tail) out.parts.push_back(std::move(t));
                if (partition_ok(s, out, 3)) cand = std::move(out);
            }
        }
        if (!cand && rest_n + 2 <= 8) {
            // Keep the arc alone as the hole and fold the edge pair into
            // the inner side; rescues residues the plain split cannot
            // place (sizes 1-2, or a 5-point residue with a 4+1 hull).
            std::vector<int> small = rest;
            small.push_back(p);
            small.push_back(q);
            auto part1 = hole_from(s, outer);
            auto tail = split_residual(s, small);
            if (part1 && tail) {
                Partition out;
                out.parts.push_back(std::move(*part1));
                for (Part& t : *tail) out.parts.push_back(std::move(t));
                if (partition_ok(s, out, 3)) cand = std::move(out);
            }
        }
        if (cand) return cand;
    }
    return std::nullopt;
}

// ─── high hull (|CH| >= 9) ──────────────────────────────────────────

std::optional<Partition> arcs_5_4_4(const PointSet& s, const std::vector<int>& hull) {
    const int n = static_cast<int>(hull.size());
    for (int off = 0; off < n; ++off) {
        auto arc = [&](int from, int len) {
            std::vector<int> ids;
            for (int i = 0; i < len; ++i)
                ids.push_back(hull[static_cast<size_t>((off + from + i) % n)]);
            return ids;
        };
        auto p = finish(s,
                        {hole_from(s, arc(0, 5)), hole_from(s, arc(5, 4)), hole_from(s, arc(9, 4))},
                        "");
        if (p) return p;
    }
    return std::nullopt;
}

std::optional<Partition> one_inner_split(const PointSet& s, const std::vector<int>& hull,
                                         int w) {
    // Split the hull points by a line through w (realized by a slightly
    // rotated line through w and a hull point t); w joins one side as an
    // extra hull vertex.
    for (int t : hull) {
        std::vector<int> left, right;
        for (int x : hull) {
            if (x == t) continue;
            (orient_sign(s[w], s[t], s[x]) > 0 ? left : right).push_back(x);
        }
        for (int variant = 0; variant < 2; ++variant) {
            std::vector<int> a = left, b = right;
            (variant == 0 ? b : a).push_back(t);
            for (int w_side = 0; w_side < 2; ++w_side) {
                std::vector<int> aw = a, bw = b;
                (w_side == 0 ? bw : aw).push_back(w);
                if (aw.size() < 3 || bw.size() < 3) continue;
                auto p = finish(s, {hole_from(s, aw), hole_from(s, bw)}, "");
                if (p) return p;
            }
        }
    }
    return std::nullopt;
}

std::optional<Partition> two_inner_split(const PointSet& s, const std::vector<int>& hull,
                                         int u, int v) {
    std::vector<int> a, b;
    for (int x : hull) (orient_sign(s[u], s[v], s[x]) > 0 ? a : b).push_back(x);
    if (a.size() < b.size()) std::swap(a, b);
    std::vector<int> a_uv = a, b_uv = b;
    a_uv.push_back(u);
    a_uv.push_back(v);
    b_uv.push_back(u);
    b_uv.push_back(v);

    std::optional<Partition> p;
    if (b.empty()) return finish(s, {hole_from(s, a_uv)}, "");
    if (b.size() >= 3) {
        p = finish(s, {hole_from(s, a_uv), hole_from(s, b)}, "");
        if (p) return p;
        p = finish(s, {hole_from(s, b_uv), hole_from(s, a)}, "");
        if (p) return p;
    }
    if (b.size() <= 2) {
        p = finish(s, {hole_from(s, a), make_block(s, b_uv)}, "");
        if (p) return p;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Partition> high_hull_internal(const PointSet& s,
                                            const LayerDecomposition& layers) {
    const std::vector<int>& hull = layers.layers[0];
    const int m = layers.layers.size() >= 2 ? static_cast<int>(layers.layers[1].size()) : 0;
    if (m >= 3) return outer_split_internal(s, layers);
    if (m == 2) return two_inner_split(s, hull, layers.layers[1][0], layers.layers[1][1]);
    if (m == 1) return one_inner_split(s, hull, layers.layers[1][0]);
    return arcs_5_4_4(s, hull);
}

// ─── hexagon hull: diagonal arrangement and the case machine ────────

namespace {

struct HexFaces {
    std::array<std::array<int, 3>, 6> edge_profile{};
    std::array<int, 3> central_profile{};
    std::array<std::vector<int>, 6> edge_pts;
    std::vector<int> central_pts;
    bool ok = false;
};

HomPoint hom_centroid3(const HomPoint& a, const HomPoint& b, const HomPoint& c) {
    BigInt w = a.w * b.w * c.w;
    BigInt x = a.x * b.w * c.w + b.x * a.w * c.w + c.x * a.w * b.w;
    BigInt y = a.y * b.w * c.w + b.y * a.w * c.w + c.y * a.w * b.w;
    return normalized(HomPoint{x, y, 3 * w});
}

HexFaces hex_faces(const PointSet& s, const std::vector<int>& hull,
                   const std::vector<int>& interior) {
    HexFaces f;
    auto diag_sign = [&](int d, const Point& x) {
        return orient_sign(s[hull[static_cast<size_t>(d)]], s[hull[static_cast<size_t>(d + 3)]],
                           x);
    };
    for (int e = 0; e < 6; ++e) {
        int u = hull[static_cast<size_t>(e)], v = hull[static_cast<size_t>((e + 1) % 6)];
        for (int d = 0; d < 3; ++d) {
            int rep = (u == hull[static_cast<size_t>(d)] || u == hull[static_cast<size_t>(d + 3)])
                          ? v
                          : u;
            f.edge_profile[static_cast<size_t>(e)][static_cast<size_t>(d)] =
                diag_sign(d, s[rep]);
        }
    }
    try {
        HomPoint c01 = line_intersection(s[hull[0]], s[hull[3]], s[hull[1]], s[hull[4]]);
        HomPoint c02 = line_intersection(s[hull[0]], s[hull[3]], s[hull[2]], s[hull[5]]);
        HomPoint c12 = line_intersection(s[hull[1]], s[hull[4]], s[hull[2]], s[hull[5]]);
        HomPoint rep = hom_centroid3(c01, c02, c12);
        for (int d = 0; d < 3; ++d)
            f.central_profile[static_cast<size_t>(d)] =
                orient_sign(HomPoint::from(s[hull[static_cast<size_t>(d)]]),
                            HomPoint::from(s[hull[static_cast<size_t>(d + 3)]]), rep);
    } catch (const BadInput&) {
        return f;  // parallel diagonals cannot occur; stay not-ok
    }
    for (int d = 0; d < 3; ++d)
        if (f.central_profile[static_cast<size_t>(d)] == 0) return f;  // concurrent diagonals

    for (int id : interior) {
        std::array<int, 3> pr{diag_sign(0, s[id]), diag_sign(1, s[id]), diag_sign(2, s[id])};
        bool placed = false;
        for (int e = 0; e < 6 && !placed; ++e)
            if (pr == f.edge_profile[static_cast<size_t>(e)]) {
                f.edge_pts[static_cast<size_t>(e)].push_back(id);
                placed = true;
            }
        if (!placed && pr == f.central_profile) {
            f.central_pts.push_back(id);
            placed = true;
        }
        if (!placed) return f;  // no face matched; bail out
    }
    f.ok = true;
    return f;
}

}  // namespace

std::optional<HexagonRegions> hexagon_regions_posed(const PointSet& s,
                                                    const std::vector<int>& hull6, int base,
                                                    bool reflected) {
    std::vector<int> interior;
    for (int id = 0; id < s.size(); ++id)
        if (std::find(hull6.begin(), hull6.end(), id) == hull6.end()) interior.push_back(id);
    HexFaces faces = hex_faces(s, hull6, interior);
    if (!faces.ok) return std::nullopt;

    std::vector<int> sv = posed_cycle(hull6, base, reflected);
    // Pose validity: the central face must sit on the (s1, s2)-quad side
    // of the diagonal (s0, s3) and on the (s3, s4)-quad side of
    // (s2, s5), as the case layout assumes.
    auto canonical_index = [&](int id) {
        return static_cast<int>(std::find(hull6.begin(), hull6.end(), id) - hull6.begin());
    };
    auto central_same_side_as = [&](int diag_canonical, int ref_id) {
        int want = orient_sign(s[hull6[static_cast<size_t>(diag_canonical)]],
                               s[hull6[static_cast<size_t>(diag_canonical + 3)]], s[ref_id]);
        return faces.central_profile[static_cast<size_t>(diag_canonical)] == want;
    };
    int k0 = canonical_index(sv[0]) % 3;
    int k2 = canonical_index(sv[2]) % 3;
    if (!central_same_side_as(k0, sv[1])) return std::nullopt;
    if (!central_same_side_as(k2, sv[3])) return std::nullopt;

    HexagonRegions out;
    std::copy(sv.begin(), sv.end(), out.s.begin());
    out.region[7] = faces.central_pts;
    for (int i = 1; i <= 6; ++i) {
        // Region i is the face at posed edge (i-2, i-1) (mod 6).
        int j = ((i - 2) % 6 + 6) % 6;
        int a = canonical_index(sv[static_cast<size_t>(j)]);
        int b = canonical_index(sv[static_cast<size_t>((j + 1) % 6)]);
        int canonical_edge = reflected ? b : a;
        out.region[static_cast<size_t>(i)] = faces.edge_pts[static_cast<size_t>(canonical_edge)];
    }
    return out;
}

}  // namespace detail

SplitterProfile splitter_profile(const PointSet& s, const std::vector<int>& hull6) {
    if (hull6.size() != 6) throw BadInput("splitter_profile: hull must have 6 vertices");
    SplitterProfile prof;
    for (int d = 0; d < 3; ++d) {
        int lo = 0, hi = 0;
        for (int id = 0; id < s.size(); ++id) {
            if (std::find(hull6.begin(), hull6.end(), id) != hull6.end()) continue;
            int o = orient_sign(s[hull6[static_cast<size_t>(d)]],
                                s[hull6[static_cast<size_t>(d + 3)]], s[id]);
            (o > 0 ? lo : hi) += 1;
        }
        prof.split[static_cast<size_t>(d)] = {std::min(lo, hi), std::max(lo, hi)};
    }
    return prof;
}

int iterative_pivot_search(const HexagonRegions& regions, const PointSet& s) {
    // Preconditions: all three diagonals (3,4)-splitters, |R4|+|R7| >= 2,
    // |R1| >= 1.
    std::vector<int> interior;
    for (int i = 1; i <= 7; ++i)
        for (int id : regions.region[static_cast<size_t>(i)]) interior.push_back(id);
    for (int d = 0; d < 3; ++d) {
        int lo = 0, hi = 0;
        for (int id : interior) {
            int o = orient_sign(s[regions.s[static_cast<size_t>(d)]],
                                s[regions.s[static_cast<size_t>(d + 3)]], s[id]);
            (o > 0 ? lo : hi) += 1;
        }
        if (std::min(lo, hi) != 3 || std::max(lo, hi) != 4)
            throw BranchMisfire("iterative_pivot_search: diagonals are not all (3,4)-splitters");
    }
    if (regions.count(4) + regions.count(7) < 2 || regions.count(1) < 1)
        throw BranchMisfire("iterative_pivot_search: region preconditions violated");

    const int s2 = regions.s[1], s3 = regions.s[2], s4 = regions.s[3], s6 = regions.s[5];
    const auto& r1 = regions.region[1];
    int bprime = regions.count(5) + regions.count(6);
    int k = std::max(1, 3 - bprime);
    if (static_cast<int>(r1.size()) < k)
        throw BranchMisfire("iterative_pivot_search: region 1 too small for the starting rank");

    auto exit_wedge = [&](int q) {
        // Points past q, outside both rays s3->q and s4->q.
        std::vector<int> out;
        int g1 = orient_sign(s[s3], s[q], s[s4]);
        int g2 = orient_sign(s[s4], s[q], s[s3]);
        for (const Point& x : s.points()) {
            if (x.id == q || x.id == s3 || x.id == s4) continue;
            if (orient_sign(s[s3], s[q], x) == -g1 && orient_sign(s[s4], s[q], x) == -g2)
                out.push_back(x.id);
        }
        return out;
    };
    auto containers_ok = [&](int q) {
        // |U| <= 4: wedge at s3 between rays to q and s4, minus the open
        // triangle (q, s3, s4). |V| <= 4: side of line (s3, q) toward s2.
        int u = 0, v = 0;
        int side_q_s4 = orient_sign(s[s3], s[q], s[s4]);
        int side_s4_q = orient_sign(s[s3], s[s4], s[q]);
        int side_s2 = orient_sign(s[s3], s[q], s[s2]);
        for (const Point& x : s.points()) {
            if (x.id == s3 || x.id == q) continue;
            if (x.id != s4) {
                bool in_wedge = orient_sign(s[s3], s[q], x) == side_q_s4 &&
                                orient_sign(s[s3], s[s4], x) == side_s4_q;
                if (in_wedge && !detail::inside_triangle(s, q, s3, s4, x)) ++u;
            }
            if (orient_sign(s[s3], s[q], x) == side_s2) ++v;
        }
        return u <= 4 && v <= 4;
    };

    int q = kth_angular_neighbor_ids(s, s3, s6, r1, k);
    for (size_t step = 0; step <= r1.size(); ++step) {
        std::vector<int> ex = exit_wedge(q);
        if (ex.empty() && containers_ok(q)) return q;
        std::vector<int> cand;
        for (int id : r1)
            if (id != q && std::find(ex.begin(), ex.end(), id) != ex.end()) cand.push_back(id);
        if (cand.empty())
            throw BranchMisfire("iterative_pivot_search: walk exhausted region 1");
        q = kth_angular_neighbor_ids(s, s3, q, cand, 1);
    }
    throw BranchMisfire("iterative_pivot_search: walk did not terminate");
}

namespace detail {

std::optional<Partition> hexagon_internal(const PointSet& s, const LayerDecomposition& layers) {
    const std::vector<int>& hull = layers.layers[0];
    std::vector<int> interior;
    for (int id = 0; id < s.size(); ++id)
        if (layers.layer_of[static_cast<size_t>(id)] != 0) interior.push_back(id);

    SplitterProfile prof = splitter_profile(s, hull);
    bool balanced = true;
    for (auto [lo, hi] : prof.split)
        if (lo != 3 || hi != 4) balanced = false;

    if (!balanced) {
        for (int base = 0; base < 6; ++base) {
            for (int refl = 0; refl < 2; ++refl) {
                std::vector<int> sv = posed_cycle(hull, base, refl != 0);
                int side = orient_sign(s[sv[1]], s[sv[4]], s[sv[0]]);
                int sparse = 0;
                for (int id : interior)
                    if (orient_sign(s[sv[1]], s[sv[4]], s[id]) == side) ++sparse;
                if (sparse > 2) continue;
                int ear_cnt = 0;
                for (int id : interior)
                    if (inside_triangle(s, sv[2], sv[3], sv[4], s[id])) ++ear_cnt;
                if (ear_cnt >= 2) {
                    int i3 = static_cast<int>(std::find(hull.begin(), hull.end(), sv[3]) -
                                              hull.begin());
                    auto p = ear_at(s, hull, i3);
                    if (p) {
                        p->branch = "ch6_skew_ear";
                        return p;
                    }
                } else {
                    auto p = heart_attempt(s, sv[4], sv[1], sv[2]);
                    if (p) {
                        p->branch = "ch6_skew_heart";
                        return p;
                    }
                }
            }
        }
        return std::nullopt;
    }

    for (int base = 0; base < 6; ++base) {
        for (int refl = 0; refl < 2; ++refl) {
            auto regions = hexagon_regions_posed(s, hull, base, refl != 0);
            if (!regions) continue;
            const HexagonRegions& r = *regions;
            if (r.count(4) + r.count(7) >= 2 && r.count(1) >= 1) {
                int pivot = -1;
                try {
                    pivot = iterative_pivot_search(r, s);
                } catch (const BranchMisfire&) {
                }
                if (pivot >= 0) {
                    auto p = heart_attempt(s, pivot, r.s[2], r.s[3]);
                    if (p) {
                        p->branch = "ch6_balanced_pivot";
                        return p;
                    }
                }
            }
            if (r.count(2) + r.count(7) <= 1 && r.count(4) + r.count(7) <= 1 &&
                r.count(6) + r.count(7) <= 1) {
                std::vector<int> pivots = r.region[4];
                for (int id : r.region[7]) pivots.push_back(id);
                for (int pivot : pivots) {
                    auto p = heart_attempt(s, pivot, r.s[5], r.s[0]);
                    if (p) {
                        p->branch = "ch6_balanced_corner";
                        return p;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

// ─── second-layer ring regions (hull 7 and 8 machines) ──────────────

namespace {

struct RingRegions {
    std::vector<std::vector<int>> strip;   // beyond exactly edge e
    std::vector<std::vector<int>> corner;  // beyond edges v-1 and v, at vertex v
    bool clean = true;                     // every point fit a strip or corner
};

RingRegions ring_regions(const PointSet& s, const std::vector<int>& poly,
                         const std::vector<int>& outside) {
    const int m = static_cast<int>(poly.size());
    RingRegions r;
    r.strip.assign(static_cast<size_t>(m), {});
    r.corner.assign(static_cast<size_t>(m), {});
    std::vector<int> inner(static_cast<size_t>(m));
    for (int e = 0; e < m; ++e)
        inner[static_cast<size_t>(e)] =
            orient_sign(s[poly[static_cast<size_t>(e)]], s[poly[static_cast<size_t>((e + 1) % m)]],
                        s[poly[static_cast<size_t>((e + 2) % m)]]);
    for (int id : outside) {
        std::vector<int> beyond;
        for (int e = 0; e < m; ++e)
            if (orient_sign(s[poly[static_cast<size_t>(e)]],
                            s[poly[static_cast<size_t>((e + 1) % m)]],
                            s[id]) == -inner[static_cast<size_t>(e)])
                beyond.push_back(e);
        if (beyond.size() == 1) {
            r.strip[static_cast<size_t>(beyond[0])].push_back(id);
            continue;
        }
        bool placed = false;
        for (int v = 0; v < m && !placed; ++v) {
            int e0 = (v + m - 1) % m;
            bool has0 = std::find(beyond.begin(), beyond.end(), e0) != beyond.end();
            bool has1 = std::find(beyond.begin(), beyond.end(), v) != beyond.end();
            if (has0 && has1) {
                r.corner[static_cast<size_t>(v)].push_back(id);
                placed = true;
            }
        }
        if (!placed) {
            if (beyond.empty()) {
                r.clean = false;
            } else {
                r.strip[static_cast<size_t>(beyond[0])].push_back(id);
            }
        }
    }
    return r;
}

// Angular order of `ids` around an exact rational pivot, CCW from the
// direction pivot -> ref.
std::vector<int> sort_around_hom(const PointSet& s, const HomPoint& pivot, const Point& ref,
                                 std::vector<int> ids) {
    auto cls = [&](int id) {
        int c = orient_sign(pivot, ref, s[id]);
        if (c > 0) return 1;
        if (c < 0) return 3;
        BigInt ux = BigInt(ref.x) * pivot.w - pivot.x;
        BigInt uy = BigInt(ref.y) * pivot.w - pivot.y;
        BigInt vx = BigInt(s[id].x) * pivot.w - pivot.x;
        BigInt vy = BigInt(s[id].y) * pivot.w - pivot.y;
        return (ux * vx + uy * vy > 0) ? 0 : 2;
    };
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        int ca = cls(a), cb = cls(b);
        if (ca != cb) return ca < cb;
        int o = orient_sign(pivot, s[a], s[b]);
        if (o != 0) return o > 0;
        return a < b;
    });
    return ids;
}

// Prefix/suffix rank splits of angularly sorted points, both block
// sizes in {3, 4, 5}; the balanced 4/4 cut comes first.
struct GapSplit {
    std::vector<int> lo, hi;
    int u, v;  // ids bounding the gap between the groups
};

std::vector<GapSplit> gap_splits(const std::vector<int>& sorted) {
    std::vector<GapSplit> out;
    const int n = static_cast<int>(sorted.size());
    for (int take : {4, 3, 5}) {
        if (take < 3 || n - take < 3 || n - take > 5) continue;
        GapSplit g;
        g.lo.assign(sorted.begin(), sorted.begin() + take);
        g.hi.assign(sorted.begin() + take, sorted.end());
        g.u = sorted[static_cast<size_t>(take - 1)];
        g.v = sorted[static_cast<size_t>(take)];
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

// ─── |CH| = 8 ───────────────────────────────────────────────────────

std::optional<Partition> ch8_internal(const PointSet& s, const LayerDecomposition& layers) {
    auto outer = outer_split_internal(s, layers);
    if (outer) {
        outer->branch = "ch8_outer";
        return outer;
    }
    const std::vector<int>& hull = layers.layers[0];
    const std::vector<int>& l2 = layers.layers[1];
    const int m2 = static_cast<int>(l2.size());

    if (m2 == 4) {
        // Second layer a quadrilateral, one point w deeper; every outer
        // halfplane holds exactly two hull points here.
        int w = layers.layers[2][0];
        HomPoint alpha = line_intersection(s[l2[0]], s[l2[2]], s[l2[1]], s[l2[3]]);
        for (int base = 0; base < 4; ++base) {
            for (int refl = 0; refl < 2; ++refl) {
                std::vector<int> q = posed_cycle(l2, base, refl != 0);
                // pose: w strictly inside the triangle (q1, q2, alpha)
                HomPoint h1 = HomPoint::from(s[q[1]]);
                HomPoint h2 = HomPoint::from(s[q[2]]);
                HomPoint hw = HomPoint::from(s[w]);
                bool in_tri = orient_sign(h1, h2, hw) == orient_sign(h1, h2, alpha) &&
                              orient_sign(h2, alpha, hw) == orient_sign(h2, alpha, h1) &&
                              orient_sign(alpha, h1, hw) == orient_sign(alpha, h1, h2) &&
                              orient_sign(h1, h2, hw) != 0;
                if (!in_tri) continue;
                RingRegions rr = ring_regions(s, q, hull);
                if (!rr.clean || rr.strip[1].size() != 2) continue;
                std::vector<int> first = rr.strip[1];
                first.push_back(w);
                first.push_back(q[1]);
                first.push_back(q[2]);
                auto part1 = hole_from(s, first);
                if (!part1) continue;
                std::vector<int> rest = complement_of(s, {&part1->members});
                auto sorted = sort_around_hom(s, alpha, s[q[1]], rest);
                for (const GapSplit& gs : gap_splits(sorted)) {
                    // beta must land strictly inside the segment (q0, q3)
                    HomPoint mid = HomPoint::from_halves(s[gs.u].x + s[gs.v].x,
                                                         s[gs.u].y + s[gs.v].y);
                    HomPoint beta;
                    try {
                        beta = line_intersection(alpha, mid, HomPoint::from(s[q[0]]),
                                                 HomPoint::from(s[q[3]]));
                    } catch (const BadInput&) {
                        continue;
                    }
                    if (!hom_within_segment(beta, s[q[0]], s[q[3]])) continue;
                    auto cone_count = [&](const HomPoint& arm_a, const Point& arm_b) {
                        int cnt = 0;
                        int ga = orient_sign(alpha, arm_a, HomPoint::from(arm_b));
                        for (const Point& x : s.points()) {
                            if (orient_sign(alpha, arm_a, HomPoint::from(x)) == ga &&
                                orient_sign(alpha, HomPoint::from(arm_b), HomPoint::from(x)) ==
                                    orient_sign(alpha, HomPoint::from(arm_b), arm_a))
                                ++cnt;
                        }
                        return cnt;
                    };
                    if (cone_count(beta, s[q[1]]) != 4 || cone_count(beta, s[q[2]]) != 4)
                        continue;
                    auto p = finish(s, {part1, make_block(s, gs.lo), make_block(s, gs.hi)},
                                    "ch8_l2_4_diag");
                    if (p) return p;
                }
            }
        }
        return std::nullopt;
    }

    if (m2 == 5) {
        for (int base = 0; base < 5; ++base) {
            for (int refl = 0; refl < 2; ++refl) {
                std::vector<int> q = posed_cycle(l2, base, refl != 0);
                RingRegions rr = ring_regions(s, q, hull);
                if (!rr.clean || rr.strip[4].size() != 2) continue;
                // 5-hole candidate on alternating pentagon vertices plus
                // the strip beyond edge (q4, q0).
                std::vector<int> five = rr.strip[4];
                five.push_back(q[0]);
                five.push_back(q[2]);
                five.push_back(q[4]);
                if (!rr.corner[2].empty()) {
                    // s0 branch: a ray from q2 into the corner region
                    // splits the other eight points 4/4.
                    auto hole5 = hole_from(s, five);
                    if (!hole5) continue;
                    std::vector<int> rest = complement_of(s, {&hole5->members});
                    auto sorted = sort_around_hom(s, HomPoint::from(s[q[2]]), s[q[0]], rest);
                    std::vector<Vec> dirs;
                    dirs.push_back(Vec{2 * s[q[2]].x - s[q[1]].x - s[q[3]].x,
                                       2 * s[q[2]].y - s[q[1]].y - s[q[3]].y});
                    for (int cp : rr.corner[2]) {
                        dirs.push_back(s[cp] - s[q[1]]);
                        dirs.push_back(s[cp] - s[q[3]]);
                    }
                    for (const GapSplit& gs : gap_splits(sorted))
                        dirs.push_back(Vec{s[gs.u].x + s[gs.v].x - 2 * s[q[2]].x,
                                           s[gs.u].y + s[gs.v].y - 2 * s[q[2]].y});
                    const int in1 = orient_sign(s[q[1]], s[q[2]], s[q[3]]);
                    const int in2 = orient_sign(s[q[2]], s[q[3]], s[q[4]]);
                    for (Vec d : dirs) {
                        Point probe{s[q[2]].x + d.x, s[q[2]].y + d.y, -1};
                        // the ray must enter the corner wedge past q2
                        if (orient_sign(s[q[1]], s[q[2]], probe) != -in1 ||
                            orient_sign(s[q[2]], s[q[3]], probe) != -in2)
                            continue;
                        // exact cone split: the ray parts the remaining
                        // eight into 4 and 4
                        auto cone_pts = [&](int arm) {
                            std::vector<int> out;
                            int g1 = orient_sign(s[q[2]], probe, s[arm]);
                            int g2 = orient_sign(s[q[2]], s[arm], probe);
                            for (int id : rest) {
                                if (id == q[2] || id == arm) continue;
                                if (orient_sign(s[q[2]], probe, s[id]) == g1 &&
                                    orient_sign(s[q[2]], s[arm], s[id]) == g2)
                                    out.push_back(id);
                            }
                            return out;
                        };
                        std::vector<int> lo = cone_pts(q[0]);
                        std::vector<int> hi = cone_pts(q[4]);
                        if (lo.size() != 4 || hi.size() != 4) continue;
                        HomPoint exit;
                        try {
                            exit = ray_hull_exit(s, HomPoint::from(s[q[2]]), d, hull);
                        } catch (const Error&) {
                            continue;
                        }
                        // s0: halfway from q2 to the hull exit, inside the corner
                        HomPoint s0 = normalized(HomPoint{BigInt(s[q[2]].x) * exit.w + exit.x,
                                                          BigInt(s[q[2]].y) * exit.w + exit.y,
                                                          2 * exit.w});
                        if (orient_sign(HomPoint::from(s[q[1]]), HomPoint::from(s[q[2]]), s0) !=
                                -in1 ||
                            orient_sign(HomPoint::from(s[q[2]]), HomPoint::from(s[q[3]]), s0) !=
                                -in2)
                            continue;
                        auto p = finish(s, {hole5, make_block(s, lo), make_block(s, hi)},
                                        "ch8_l2_5_corner");
                        if (p) return p;
                    }
                } else {
                    // flat branch: split along the two lines through q2.
                    std::vector<int> z1, z2;
                    bool overlap = false;
                    int side1 = orient_sign(s[q[2]], s[q[4]], s[q[3]]);
                    int side2 = orient_sign(s[q[2]], s[q[0]], s[q[1]]);
                    for (int id : hull) {
                        if (std::find(rr.strip[4].begin(), rr.strip[4].end(), id) !=
                            rr.strip[4].end())
                            continue;  // the 5-hole keeps the strip points
                        bool inz1 = orient_sign(s[q[2]], s[q[4]], s[id]) == side1;
                        bool inz2 = orient_sign(s[q[2]], s[q[0]], s[id]) == side2;
                        if (inz1 && inz2) {
                            overlap = true;
                            break;
                        }
                        if (inz1) z1.push_back(id);
                        else if (inz2) z2.push_back(id);
                    }
                    if (overlap || z1.size() + z2.size() != 6) continue;
                    if (z1.size() == 3 && z2.size() == 3) {
                        std::vector<int> a = z1;
                        a.push_back(q[3]);
                        std::vector<int> b = z2;
                        b.push_back(q[1]);
                        auto p = finish(s, {make_block(s, a), make_block(s, b), hole_from(s, five)},
                                        "ch8_l2_5_flat");
                        if (p) return p;
                    } else if (z1.size() == 4 && z2.size() == 2) {
                        int si = kth_angular_neighbor_ids(s, q[0], q[2], z2, 1);
                        std::vector<int> five2 = rr.strip[4];
                        five2.push_back(q[0]);
                        five2.push_back(q[4]);
                        five2.push_back(si);
                        std::vector<int> a = z1;
                        a.push_back(q[3]);
                        std::vector<int> c{q[1], q[2]};
                        for (int id : z2)
                            if (id != si) c.push_back(id);
                        auto p = finish(s,
                                        {hole_from(s, five2), make_block(s, a), make_block(s, c)},
                                        "ch8_l2_5_flat");
                        if (p) return p;
                    }
                }
            }
        }
        return std::nullopt;
    }
    return std::nullopt;
}

// ─── |CH| = 7 ───────────────────────────────────────────────────────

std::optional<Partition> ch7_internal(const PointSet& s, const LayerDecomposition& layers) {
    auto outer = outer_split_internal(s, layers);
    if (outer) {
        outer->branch = "ch7_outer";
        return outer;
    }
    const std::vector<int>& hull = layers.layers[0];
    const std::vector<int>& l2 = layers.layers[1];
    const int m2 = static_cast<int>(l2.size());

    if (m2 == 4) {
        // Quadrilateral second layer with two deeper points.
        std::vector<int> l3 = layers.layers[2];
        for (int base = 0; base < 4; ++base) {
            for (int refl = 0; refl < 2; ++refl) {
                std::vector<int> q = posed_cycle(l2, base, refl != 0);
                RingRegions rr = ring_regions(s, q, hull);
                if (!rr.clean) continue;
                if (rr.strip[0].size() != 2 || rr.strip[1].size() != 2) continue;
                if (!rr.corner[0].empty() || !rr.corner[1].empty() || !rr.corner[2].empty())
                    continue;
                std::vector<int> back = rr.corner[3];
                for (int id : rr.strip[3]) back.push_back(id);
                const int k = static_cast<int>(back.size());
                if (k == 0) continue;
                int p = kth_angular_neighbor_ids(s, q[2], q[1], l3, 1);
                int si = kth_angular_neighbor_ids(s, q[0], q[3], back, k);
                std::vector<int> s2grp = rr.strip[0];
                s2grp.push_back(q[0]);
                s2grp.push_back(si);
                auto part2 = make_block(s, s2grp);
                if (!part2) continue;
                if (k == 1) {
                    std::vector<int> s1grp = rr.strip[1];
                    s1grp.push_back(q[1]);
                    s1grp.push_back(q[2]);
                    s1grp.push_back(p);
                    auto part1 = hole_from(s, s1grp);
                    if (!part1) continue;
                    std::vector<int> rest = complement_of(s, {&part1->members, &part2->members});
                    auto out = finish(s, {part1, part2, make_block(s, rest)}, "ch7_l2_4_k1");
                    if (out) return out;
                } else {
                    // six-hole probe first
                    std::optional<Partition> out;
                    int side = orient_sign(s[q[2]], s[p], s[q[1]]);
                    for (int sj : rr.strip[3]) {
                        if (orient_sign(s[q[2]], s[p], s[sj]) != side) continue;
                        std::vector<int> six = rr.strip[1];
                        six.push_back(q[1]);
                        six.push_back(q[2]);
                        six.push_back(p);
                        six.push_back(sj);
                        auto part1 = hole_from(s, six);
                        if (!part1) continue;
                        std::vector<int> rest =
                            complement_of(s, {&part1->members, &part2->members});
                        out = finish(s, {part1, part2, make_block(s, rest)}, "ch7_l2_4_k2");
                        if (out) break;
                    }
                    if (out) return out;
                    std::vector<int> s1grp = rr.strip[1];
                    s1grp.push_back(q[1]);
                    s1grp.push_back(q[2]);
                    s1grp.push_back(p);
                    auto part1 = hole_from(s, s1grp);
                    if (!part1) continue;
                    std::vector<int> rest = complement_of(s, {&part1->members, &part2->members});
                    out = finish(s, {part1, part2, make_block(s, rest)}, "ch7_l2_4_k2");
                    if (out) return out;
                }
            }
        }
        return std::nullopt;
    }

    if (m2 == 5) {
        const int w = layers.layers[2][0];
        // Wedge regions around w, one per pentagon edge.
        auto wedge_pts = [&](const std::vector<int>& q, int i) {
            std::vector<int> out;
            Cone cone{w, q[static_cast<size_t>(i)], q[static_cast<size_t>((i + 1) % 5)]};
            for (int id : hull)
                if (cone_contains(s, cone, s[id])) out.push_back(id);
            return out;
        };
        bool central = true;
        for (int i = 0; i < 5 && central; ++i) {
            int prev = l2[static_cast<size_t>((i + 4) % 5)];
            int next = l2[static_cast<size_t>((i + 1) % 5)];
            if (inside_triangle(s, prev, l2[static_cast<size_t>(i)], next, s[w]))
                central = false;  // w sits in an ear
        }
        for (int base = 0; base < 5; ++base) {
            for (int refl = 0; refl < 2; ++refl) {
                std::vector<int> q = posed_cycle(l2, base, refl != 0);
                std::array<std::vector<int>, 5> wg;
                for (int i = 0; i < 5; ++i) wg[static_cast<size_t>(i)] = wedge_pts(q, i);
                const char* label = central ? "ch7_l2_5_center" : "ch7_l2_5_corner";
                if (central) {
                    if (wg[0].empty() || wg[0].size() > 2) continue;
                    std::vector<int> s1grp = wg[0];
                    s1grp.push_back(w);
                    s1grp.push_back(q[0]);
                    s1grp.push_back(q[1]);
                    auto part1 = hole_from(s, s1grp);
                    if (!part1) continue;
                    std::vector<int> rest = complement_of(s, {&part1->members});
                    auto sorted = sort_ccw_around(s, w, s[q[1]] - s[w], rest);
                    for (const GapSplit& gs : gap_splits(sorted)) {
                        auto p = finish(s, {part1, make_block(s, gs.lo), make_block(s, gs.hi)},
                                        label);
                        if (p) return p;
                    }
                } else {
                    // pose with w inside the ear at q0
                    if (!inside_triangle(s, q[4], q[0], q[1], s[w])) continue;
                    const int f = static_cast<int>(wg[0].size() + wg[4].size());
                    if (f >= 2 && f <= 4) {
                        // flanking wedges join q0 (w goes with them when
                        // it sits too close to the corner); the far hull
                        // points split between the big chain hole and a
                        // third block of legal size
                        for (int w_with_flanks = 0; w_with_flanks < 2; ++w_with_flanks) {
                            std::vector<int> s2grp = wg[0];
                            for (int id : wg[4]) s2grp.push_back(id);
                            s2grp.push_back(q[0]);
                            if (w_with_flanks) s2grp.push_back(w);
                            std::sort(s2grp.begin(), s2grp.end());
                            std::vector<int> others;
                            for (int id : hull)
                                if (!std::binary_search(s2grp.begin(), s2grp.end(), id))
                                    others.push_back(id);
                            const int on = static_cast<int>(others.size());
                            for (std::uint32_t mask = 0; mask < (1u << on); ++mask) {
                                int t = __builtin_popcount(mask);
                                if (t != 0 && t != 3 && t != 4) continue;
                                std::vector<int> s3grp;
                                for (int i = 0; i < on; ++i)
                                    if ((mask >> i) & 1u)
                                        s3grp.push_back(others[static_cast<size_t>(i)]);
                                std::vector<int> s1grp = complement_of(s, {&s2grp, &s3grp});
                                std::optional<Partition> p;
                                if (s3grp.empty())
                                    p = finish(s, {block_fast(s, s1grp), make_block(s, s2grp)},
                                               label);
                                else
                                    p = finish(s,
                                               {block_fast(s, s1grp), make_block(s, s2grp),
                                                make_block(s, s3grp)},
                                               label);
                                if (p) return p;
                            }
                        }
                    }
                    // one flanking wedge, w and the ear edge anchor a
                    // hole; the rest splits by angular rank around w
                    for (int side = 0; side < 2; ++side) {
                        const std::vector<int>& flank = side == 0 ? wg[4] : wg[0];
                        if (flank.empty()) continue;
                        std::vector<int> s2grp = flank;
                        s2grp.push_back(w);
                        s2grp.push_back(q[0]);
                        s2grp.push_back(side == 0 ? q[4] : q[1]);
                        auto part1 = hole_from(s, s2grp);
                        if (!part1) continue;
                        std::vector<int> rest = complement_of(s, {&part1->members});
                        auto sorted = sort_ccw_around(s, w, s[q[0]] - s[w], rest);
                        for (const GapSplit& gs : gap_splits(sorted)) {
                            auto p = finish(s,
                                            {part1, make_block(s, gs.lo), make_block(s, gs.hi)},
                                            label);
                            if (p) return p;
                        }
                    }
                    // Last resort for the pose: w with the far pentagon
                    // chain forms a convex 5-gon; grow it by hull points
                    // and split what is left.
                    std::vector<int> chain{w, q[1], q[2], q[3], q[4]};
                    const int hn = static_cast<int>(hull.size());
                    std::vector<std::uint32_t> masks;
                    for (std::uint32_t mask = 0; mask < (1u << hn); ++mask)
                        if (__builtin_popcount(mask) <= 4) masks.push_back(mask);
                    std::stable_sort(masks.begin(), masks.end(),
                                     [](std::uint32_t a, std::uint32_t b) {
                                         return __builtin_popcount(a) < __builtin_popcount(b);
                                     });
                    for (std::uint32_t mask : masks) {
                        std::vector<int> s1grp = chain;
                        std::vector<int> resid{q[0]};
                        for (int i = 0; i < hn; ++i)
                            ((mask >> i) & 1u ? s1grp : resid)
                                .push_back(hull[static_cast<size_t>(i)]);
                        auto part1 = block_fast(s, s1grp);
                        if (!part1) continue;
                        auto tail = split_residual(s, resid);
                        if (!tail) continue;
                        Partition out;
                        out.branch = label;
                        out.parts.push_back(std::move(*part1));
                        for (Part& tp : *tail) out.parts.push_back(std::move(tp));
                        if (partition_ok(s, out, 3)) return out;
                    }
                }
            }
        }
        return std::nullopt;
    }

    if (m2 == 6) {
        for (int base = 0; base < 6; ++base) {
            for (int refl = 0; refl < 2; ++refl) {
                std::vector<int> q = posed_cycle(l2, base, refl != 0);
                RingRegions rr = ring_regions(s, q, hull);
                if (!rr.clean) continue;
                const int occ =
                    static_cast<int>(rr.corner[0].size() + rr.corner[3].size());
                if (occ < 1) continue;
                std::vector<int> z1, z2;
                int side1 = orient_sign(s[q[3]], s[q[5]], s[q[4]]);
                int side2 = orient_sign(s[q[0]], s[q[2]], s[q[1]]);
                for (int id = 0; id < s.size(); ++id) {
                    if (id == q[3] || id == q[5]) continue;
                    if (orient_sign(s[q[3]], s[q[5]], s[id]) == side1) z1.push_back(id);
                }
                for (int id = 0; id < s.size(); ++id) {
                    if (id == q[0] || id == q[2]) continue;
                    if (orient_sign(s[q[0]], s[q[2]], s[id]) == side2) z2.push_back(id);
                }
                std::vector<int> sz1 = z1, sz2 = z2;
                std::sort(sz1.begin(), sz1.end());
                std::sort(sz2.begin(), sz2.end());
                std::vector<int> inter;
                std::set_intersection(sz1.begin(), sz1.end(), sz2.begin(), sz2.end(),
                                      std::back_inserter(inter));
                if (!inter.empty()) continue;
                std::vector<int> s1grp = complement_of(s, {&z1, &z2});
                const char* label =
                    (rr.corner[0].size() == 2 || rr.corner[3].size() == 2) ? "ch7_l2_6_pair"
                                                                           : "ch7_l2_6_single";
                auto p = finish(s, {make_block(s, s1grp), make_block(s, z1), make_block(s, z2)},
                                label);
                if (p) return p;
                // Z-split failed; keep the corner block and split the
                // rest directly.
                std::vector<int> anchor = rr.corner[0];
                for (int id : rr.corner[3]) anchor.push_back(id);
                anchor.push_back(q[0]);
                anchor.push_back(q[2]);
                anchor.push_back(q[3]);
                anchor.push_back(q[5]);
                auto part1 = make_block(s, anchor);
                if (part1) {
                    std::vector<int> resid = complement_of(s, {&part1->members});
                    auto tail = split_residual(s, resid);
                    if (tail) {
                        Partition out;
                        out.branch = label;
                        out.parts.push_back(std::move(*part1));
                        for (Part& tp : *tail) out.parts.push_back(std::move(tp));
                        if (partition_ok(s, out, 3)) return out;
                    }
                }
            }
        }
        // Every outer halfplane holds <= 2 points here, but an edge cap
        // (corners plus strip) of size >= 2 still spans a hole with its
        // edge; the 9-point rest splits exhaustively.
        for (int base = 0; base < 6; ++base) {
            std::vector<int> q = posed_cycle(l2, base, false);
            RingRegions rr = ring_regions(s, q, hull);
            if (!rr.clean) continue;
            std::vector<int> cap = rr.corner[0];
            for (int id : rr.strip[0]) cap.push_back(id);
            for (int id : rr.corner[1]) cap.push_back(id);
            if (cap.size() < 2) continue;
            cap.push_back(q[0]);
            cap.push_back(q[1]);
            auto part1 = hole_from(s, cap);
            if (!part1) continue;
            std::vector<int> resid = complement_of(s, {&part1->members});
            auto tail = resid.size() <= 8 ? split_residual(s, resid) : two_blocks_any(s, resid);
            if (!tail) continue;
            Partition out;
            out.branch = "ch7_l2_6_single";
            out.parts.push_back(std::move(*part1));
            for (Part& tp : *tail) out.parts.push_back(std::move(tp));
            if (partition_ok(s, out, 3)) return out;
            }
        }
        return std::nullopt;
    }
    return std::nullopt;
}

// ─── dispatch ───────────────────────────────────────────────────────

namespace {

std::optional<Partition> dispatch(const PointSet& s, const LayerDecomposition& layers) {
    const std::vector<int>& hull = layers.layers[0];
    const int h = static_cast<int>(hull.size());
    if (h >= 9) {
        auto p = high_hull_internal(s, layers);
        if (p) {
            const int m = layers.layers.size() >= 2 ? static_cast<int>(layers.layers[1].size()) : 0;
            if (m >= 3) p->branch = "ch" + std::to_string(h) + "_outer";
            else if (m == 2) p->branch = "ch11_l2_2";
            else if (m == 1) p->branch = "ch12_l2_1";
            else p->branch = "ch13_arcs";
        }
        return p;
    }
    if (h == 8) return ch8_internal(s, layers);
    if (h == 7) return ch7_internal(s, layers);
    if (h == 6) return hexagon_internal(s, layers);
    // h in {3, 4, 5}
    auto p = ear_internal(s, hull);
    if (p) {
        p->branch = "ch" + std::to_string(h) + "_ear";
        return p;
    }
    if (h == 5) {
        for (int rot = 0; rot < 5; ++rot) {
            auto heart = heart_attempt(s, hull[static_cast<size_t>(rot)],
                                       hull[static_cast<size_t>((rot + 2) % 5)],
                                       hull[static_cast<size_t>((rot + 3) % 5)]);
            if (heart) {
                heart->branch = "ch5_heart";
                return heart;
            }
        }
    }
    return std::nullopt;
}

}  // namespace
}  // namespace detail

Partition partition_13(const PointSet& s) {
    if (s.size() != 13) throw BadInput("partition_13: need exactly 13 points");
    LayerDecomposition layers = convex_layers(s);
    const std::vector<int>& hull = layers.layers[0];

    if (auto p = detail::dispatch(s, layers)) return *p;

    // Rescue ladder: the generic constructions, then the exhaustive
    // search (which Theorem 1 guarantees to succeed).
    if (auto p = detail::ear_internal(s, hull)) {
        p->branch = "rescue_ear";
        return *p;
    }
    if (auto p = detail::outer_split_internal(s, layers)) {
        p->branch = "rescue_outer";
        return *p;
    }
    if (auto p = detail::heart_sweep(s, hull)) {
        p->branch = "rescue_heart";
        return *p;
    }
    Partition p = admissible_3_partition(s);
    p.branch = "fallback";
    if (!detail::partition_ok(s, p, 3))
        throw Error("partition_13: fallback produced an unverifiable partition");
    return p;
}

std::optional<Partition> try_outer_halfplane_split(const PointSet& s,
                                                   const LayerDecomposition& layers) {
    if (s.size() != 13) throw BadInput("try_outer_halfplane_split: need exactly 13 points");
    auto p = detail::outer_split_internal(s, layers);
    if (p && p->branch.empty()) p->branch = "outer";
    return p;
}

std::optional<Partition> try_ear(const PointSet& s) {
    if (s.size() != 13) throw BadInput("try_ear: need exactly 13 points");
    std::vector<int> hull = convex_hull(s);
    auto p = detail::ear_internal(s, hull);
    if (p && p->branch.empty()) p->branch = "ear";
    return p;
}

namespace {

Partition wrap_or_rescue(const PointSet& s, std::optional<Partition> p) {
    if (p) return *p;
    LayerDecomposition layers = convex_layers(s);
    if (auto q = detail::ear_internal(s, layers.layers[0])) {
        q->branch = "rescue_ear";
        return *q;
    }
    if (auto q = detail::heart_sweep(s, layers.layers[0])) {
        q->branch = "rescue_heart";
        return *q;
    }
    Partition q = admissible_3_partition(s);
    q.branch = "fallback";
    return q;
}

}  // namespace

Partition hexagon_partition(const PointSet& s) {
    if (s.size() != 13) throw BadInput("hexagon_partition: need exactly 13 points");
    LayerDecomposition layers = convex_layers(s);
    if (layers.layers[0].size() != 6) throw BadInput("hexagon_partition: |CH(S)| must be 6");
    return wrap_or_rescue(s, detail::hexagon_internal(s, layers));
}

Partition ch7_partition(const PointSet& s) {
    if (s.size() != 13) throw BadInput("ch7_partition: need exactly 13 points");
    LayerDecomposition layers = convex_layers(s);
    if (layers.layers[0].size() != 7) throw BadInput("ch7_partition: |CH(S)| must be 7");
    return wrap_or_rescue(s, detail::ch7_internal(s, layers));
}

Partition ch8_partition(const PointSet& s) {
    if (s.size() != 13) throw BadInput("ch8_partition: need exactly 13 points");
    LayerDecomposition layers = convex_layers(s);
    if (layers.layers[0].size() != 8) throw BadInput("ch8_partition: |CH(S)| must be 8");
    return wrap_or_rescue(s, detail::ch8_internal(s, layers));
}

Partition high_hull_partition(const PointSet& s) {
    if (s.size() != 13) throw BadInput("high_hull_partition: need exactly 13 points");
    LayerDecomposition layers = convex_layers(s);
    if (layers.layers[0].size() < 9) throw BadInput("high_hull_partition: |CH(S)| must be >= 9");
    return wrap_or_rescue(s, detail::high_hull_internal(s, layers));
}

}  // namespace pcp
