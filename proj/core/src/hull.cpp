#include "pcp/hull.hpp"

#include <algorithm>

namespace pcp {

// Andrew's monotone chain. General position keeps the logic simple: a
// non-left turn is always a right turn, never collinear, except for the
// duplicate-free 2-point case.
std::vector<int> convex_hull(const PointSet& s, const std::vector<int>& ids) {
    if (ids.empty()) throw BadInput("convex_hull: empty input");
    std::vector<int> order = ids;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (s[a].x != s[b].x) return s[a].x < s[b].x;
        return s[a].y < s[b].y;
    });
    const int n = static_cast<int>(order.size());
    if (n <= 2) return order;

    std::vector<int> h(2 * static_cast<size_t>(n));
    int k = 0;
    for (int i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && orient_sign(s[h[k - 2]], s[h[k - 1]], s[order[i]]) <= 0) --k;
        h[k++] = order[i];
    }
    const int lower = k + 1;
    for (int i = n - 2; i >= 0; --i) {  // upper chain
        while (k >= lower && orient_sign(s[h[k - 2]], s[h[k - 1]], s[order[i]]) <= 0) --k;
        h[k++] = order[i];
    }
    h.resize(static_cast<size_t>(k - 1));
    return h;  // starts at the lexicographic minimum, CCW
}

std::vector<int> convex_hull(const PointSet& s) { return convex_hull(s, s.all_ids()); }

LayerDecomposition convex_layers(const PointSet& s) {
    LayerDecomposition d;
    d.layer_of.assign(static_cast<size_t>(s.size()), -1);
    std::vector<int> rest = s.all_ids();
    int layer = 0;
    while (!rest.empty()) {
        std::vector<int> hull = convex_hull(s, rest);
        for (int id : hull) d.layer_of[static_cast<size_t>(id)] = layer;
        std::vector<int> next;
        next.reserve(rest.size() - hull.size());
        for (int id : rest)
            if (d.layer_of[static_cast<size_t>(id)] < 0) next.push_back(id);
        d.layers.push_back(std::move(hull));
        rest = std::move(next);
        ++layer;
    }
    return d;
}

bool strictly_inside_convex(const PointSet& s, const std::vector<int>& hull, const Point& x) {
    const int k = static_cast<int>(hull.size());
    if (k < 3) return false;
    for (int i = 0; i < k; ++i) {
        if (orient_sign(s[hull[i]], s[hull[(i + 1) % k]], x) <= 0) return false;
    }
    return true;
}

bool in_convex_position(const PointSet& s, const std::vector<int>& ids) {
    return convex_hull(s, ids).size() == ids.size();
}

}  // namespace pcp
