#pragma once

#include <functional>
#include <vector>

#include "pcp/geometry.hpp"

namespace pcp {

using RegionPred = std::function<bool(const Point&)>;

/// Exact comparator key class of vector v against reference direction r,
/// sweeping counter-clockwise: 0 = same direction, 1 = (0, pi),
/// 2 = opposite, 3 = (pi, 2pi).
int angular_class(Vec ref, Vec v);

/// ids sorted by counter-clockwise angle around `pivot`, starting at the
/// direction pivot->refToward. Ties (possible only if two points are
/// collinear with the pivot, which general position forbids for set
/// members) break toward the smaller id.
std::vector<int> sort_ccw_around(const PointSet& s, int pivot, Vec ref_dir,
                                 const std::vector<int>& ids);

/// The point t of `region` such that the open cone bounded by the rays
/// p->q and p->t holds exactly k-1 region points (the paper-style k-th
/// angular neighbor of the ray p->q). k = 1 is the nearest angular
/// neighbor. Throws NotEnoughPoints if the region holds fewer than k
/// points. Counting follows the definition directly, so it works for
/// regions on either side of the ray.
int kth_angular_neighbor(const PointSet& s, int p, int q, const RegionPred& region, int k);

/// Same, but the cone is measured inside the region only on one sweep
/// side; candidates are the `ids` given.
int kth_angular_neighbor_ids(const PointSet& s, int p, int q, const std::vector<int>& ids, int k);

}  // namespace pcp
