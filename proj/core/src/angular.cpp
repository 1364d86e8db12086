#include "pcp/angular.hpp"

#include <algorithm>

namespace pcp {

int angular_class(Vec ref, Vec v) {
    I128 c = cross(ref, v);
    if (c > 0) return 1;
    if (c < 0) return 3;
    return dot(ref, v) > 0 ? 0 : 2;
}

std::vector<int> sort_ccw_around(const PointSet& s, int pivot, Vec ref_dir,
                                 const std::vector<int>& ids) {
    const Point& p = s[pivot];
    std::vector<int> out;
    out.reserve(ids.size());
    for (int id : ids)
        if (id != pivot) out.push_back(id);
    std::sort(out.begin(), out.end(), [&](int a, int b) {
        Vec va = s[a] - p, vb = s[b] - p;
        int ca = angular_class(ref_dir, va), cb = angular_class(ref_dir, vb);
        if (ca != cb) return ca < cb;
        I128 c = cross(va, vb);
        if (c != 0) return c > 0;
        return a < b;  // defensive tiebreak; unreachable for set members
    });
    return out;
}

namespace {

// Strictly inside the angular domain (< pi) between rays p->q and p->s.
bool in_open_wedge(const Point& p, const Point& q, const Point& sp, const Point& x) {
    int side = orient_sign(p, q, sp);
    if (side == 0) return false;  // degenerate ray pair
    if (side > 0) return orient_sign(p, q, x) > 0 && orient_sign(p, sp, x) < 0;
    return orient_sign(p, q, x) < 0 && orient_sign(p, sp, x) > 0;
}

int pick_kth(const PointSet& s, int p, int q, const std::vector<int>& candidates, int k) {
    if (static_cast<int>(candidates.size()) < k)
        throw NotEnoughPoints("kth_angular_neighbor: region holds " +
                              std::to_string(candidates.size()) + " points, need " +
                              std::to_string(k));
    int best = -1;
    for (int cand : candidates) {
        int inside = 0;
        for (int other : candidates) {
            if (other == cand) continue;
            if (in_open_wedge(s[p], s[q], s[cand], s[other])) ++inside;
        }
        if (inside == k - 1 && (best < 0 || cand < best)) best = cand;
    }
    if (best < 0)
        throw BranchMisfire("kth_angular_neighbor: no candidate with the requested rank "
                            "(two-sided region)");
    return best;
}

}  // namespace

int kth_angular_neighbor(const PointSet& s, int p, int q, const RegionPred& region, int k) {
    std::vector<int> candidates;
    for (const Point& pt : s.points()) {
        if (pt.id == p || pt.id == q) continue;
        if (region(pt)) candidates.push_back(pt.id);
    }
    return pick_kth(s, p, q, candidates, k);
}

int kth_angular_neighbor_ids(const PointSet& s, int p, int q, const std::vector<int>& ids,
                             int k) {
    std::vector<int> candidates;
    for (int id : ids)
        if (id != p && id != q) candidates.push_back(id);
    return pick_kth(s, p, q, candidates, k);
}

}  // namespace pcp
