#pragma once

#include <vector>

#include "pcp/geometry.hpp"

namespace pcp {

/// Extreme points of `ids` in counter-clockwise order, starting from the
/// lexicographically smallest point (by (x, y)). Requires |ids| >= 1.
std::vector<int> convex_hull(const PointSet& s, const std::vector<int>& ids);
std::vector<int> convex_hull(const PointSet& s);

/// Convex layers: layers[0] is the hull of the whole set, layers[j] the
/// hull of what remains after peeling layers 0..j-1. layer_of maps point
/// id -> layer index.
struct LayerDecomposition {
    std::vector<std::vector<int>> layers;
    std::vector<int> layer_of;
};

LayerDecomposition convex_layers(const PointSet& s);

/// Strictly inside the convex polygon given by CCW vertex ids.
bool strictly_inside_convex(const PointSet& s, const std::vector<int>& hull, const Point& x);

/// True if every point of `ids` is a vertex of the hull of `ids`.
bool in_convex_position(const PointSet& s, const std::vector<int>& ids);

}  // namespace pcp
