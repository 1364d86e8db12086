#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pcp/geometry.hpp"
#include "pcp/hull.hpp"
#include "pcp/part.hpp"
#include "pcp/rational.hpp"

namespace pcp {

/// Certificate for a pivot/base triple whose two halfplane residues are
/// small enough to hang a double-chain pseudo-triangle between them:
/// condition (A) = the opposite wedge at the pivot and the far side of
/// the base are empty; condition (B) = both residues hold at most 4
/// points. alpha is the exact split point on the open base segment with
/// left_count triangle points on the base1 side of the ray
/// pivot->alpha.
struct HeartCertificate {
    int pivot = -1;
    int base1 = -1;
    int base2 = -1;
    int a = 0;  // |residue beyond line (pivot, base1)|
    int b = 0;  // |residue beyond line (pivot, base2)|
    HomPoint alpha;
    int left_count = 0;  // canonical certificates have left_count == 5 - a
};

/// The seven faces cut out of a hexagonal hull by its three main
/// diagonals, in the pose the case analysis assumes. region[1..6] are
/// the faces adjacent to hexagon edges ((s[i-2], s[i-1]) for region i,
/// indices mod 6); region[7] is the central triangle.
struct HexagonRegions {
    std::array<int, 6> s{};                  // posed hull vertex ids, CCW
    std::array<std::vector<int>, 8> region;  // [1..7] used
    int count(int i) const { return static_cast<int>(region[static_cast<size_t>(i)].size()); }
};

/// For each main diagonal (s_i, s_{i+3}) of a hexagonal hull: the
/// ordered pair (min, max) of interior-point counts on its two sides.
struct SplitterProfile {
    std::array<std::pair<int, int>, 3> split{};
};

SplitterProfile splitter_profile(const PointSet& s, const std::vector<int>& hull6);

/// Partitions any 13-point set in general position into at most three
/// disjoint parts (holes / empty pseudo-triangles), each of size >= 3.
/// The returned partition always passes verify_partition; branch records
/// the construction that produced it ("fallback" marks the exhaustive
/// rescue, which the fuzz corpus is expected never to need).
Partition partition_13(const PointSet& s);

/// The construction behind every branch that cuts along a second-layer
/// edge: if some outer halfplane of an L2 edge holds >= 3 hull points,
/// that halfplane plus the edge spans a hole and the rest splits into at
/// most two further parts.
std::optional<Partition> try_outer_halfplane_split(const PointSet& s,
                                                   const LayerDecomposition& layers);

/// Hull-ear construction: an ear triangle holding >= 2 points yields an
/// empty pseudo-triangle plus a residue in a convex region.
std::optional<Partition> try_ear(const PointSet& s);

/// First triple from `candidates` satisfying conditions (A) and (B),
/// with the canonical alpha (left_count = 5 - a).
std::optional<HeartCertificate> find_heart(const PointSet& s,
                                           const std::vector<std::array<int, 3>>& candidates);

/// Builds the 3-part partition a certificate promises; throws
/// InvalidCertificate if the certificate does not validate against S (or
/// its residues cannot form legal parts).
Partition heart_partition(const PointSet& s, const HeartCertificate& cert);

/// Case machine for |CH(S)| = 6 (splitter test, then the balanced-pose
/// cases). Falls back to the generic rescue ladder rather than failing.
Partition hexagon_partition(const PointSet& s);

/// Case machines for |CH(S)| = 7 and 8 (dispatch on the second-layer
/// size), same contract as hexagon_partition.
Partition ch7_partition(const PointSet& s);
Partition ch8_partition(const PointSet& s);

/// |CH(S)| >= 9: outer-halfplane split for second layers of size >= 3,
/// explicit constructions for second layers of size 0, 1 and 2.
Partition high_hull_partition(const PointSet& s);

/// Walks candidate pivots in region 1 (angular order from the ray
/// s3->s6) until one has an empty exit wedge; requires
/// |R4|+|R7| >= 2, |R1| >= 1 and all three diagonals (3,4)-splitters,
/// else throws BranchMisfire.
int iterative_pivot_search(const HexagonRegions& regions, const PointSet& s);

/// Splits <= 8 points lying in a convex region into at most two parts of
/// size >= 3 (3 / 4 / 5 / 3+3 / 4+3 / 4+4); throws BranchMisfire when no
/// legal split exists (sizes 1-2, or a 5-point residue with a 4+1 hull).
std::vector<Part> residual_split(const PointSet& s, const std::vector<int>& ids);

namespace detail {
/// Optional-returning internals shared by the branch machines and the
/// dispatch ladder (public wrappers throw instead).
std::optional<std::vector<Part>> split_residual(const PointSet& s, const std::vector<int>& ids);
std::optional<std::vector<Part>> two_blocks_any(const PointSet& s, const std::vector<int>& ids);
std::optional<Part> make_block(const PointSet& s, const std::vector<int>& ids);
std::optional<Partition> hexagon_internal(const PointSet& s, const LayerDecomposition& layers);
std::optional<Partition> ch7_internal(const PointSet& s, const LayerDecomposition& layers);
std::optional<Partition> ch8_internal(const PointSet& s, const LayerDecomposition& layers);
std::optional<Partition> high_hull_internal(const PointSet& s, const LayerDecomposition& layers);
std::optional<Partition> ear_at(const PointSet& s, const std::vector<int>& hull, int ear_index);
std::optional<Partition> heart_attempt(const PointSet& s, int pivot, int b1, int b2);
std::optional<Partition> heart_sweep(const PointSet& s, const std::vector<int>& hull);
bool partition_ok(const PointSet& s, Partition& p, int max_parts);
std::optional<HexagonRegions> hexagon_regions_posed(const PointSet& s,
                                                    const std::vector<int>& hull6, int base,
                                                    bool reflected);
}  // namespace detail

}  // namespace pcp
