#pragma once

#include <vector>

#include "pcp/geometry.hpp"
#include "pcp/part.hpp"

namespace pcp {

/// Separating line between consecutive sweep blocks: points p with
/// 2*dot(dir, p) < two_c come earlier. The threshold is the exact
/// midpoint of two consecutive projections, hence the factor 2.
struct CutLine {
    Vec dir;
    I128 two_c = 0;
};

struct SweepPlan {
    Vec dir{1, 0};
    std::vector<std::vector<int>> blocks;  // size 13 each, except possibly the last
    std::vector<CutLine> cut_lines;        // between consecutive blocks
};

/// A direction along which all points of the set project to pairwise
/// distinct values: tries (1,0), (1,1), (1,2), ...
Vec choose_sweep_direction(const PointSet& s);
Vec choose_sweep_direction(const PointSet& s, const std::vector<int>& ids);

SweepPlan make_sweep_plan(const PointSet& s);

/// Partition of < 13 points in sweep order: consecutive quadruples, then
/// a trailing triangle / segment / point. ceil(|ids|/4) parts.
std::vector<Part> quad_sweep(const PointSet& s, const std::vector<int>& ids);

/// At most ceil(3n/13) verified parts for any general-position set:
/// sweep into 13-point strips handled by partition_13, plus quad_sweep
/// on the residue.
Partition partition_any(const PointSet& s);

/// ceil(3n/13), the bound the partitioner guarantees.
long long psi_upper_bound(long long n);

}  // namespace pcp
