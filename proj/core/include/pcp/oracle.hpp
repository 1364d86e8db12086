#pragma once

#include <cstdint>
#include <optional>

#include "pcp/geometry.hpp"
#include "pcp/part.hpp"

namespace pcp {

struct SearchBudget {
    int max_parts = 3;
    int max_subset_size_for_polygonization = 9;
    std::uint64_t node_limit = 50'000'000;
};

/// Result of the exhaustive minimum search. value > 0 with a witness
/// when the minimum over partitions into at most max_parts blocks was
/// determined; value == -1 with budget_exhausted == false proves no
/// partition exists within max_parts blocks; budget_exhausted == true
/// means the search gave up before deciding (never a wrong answer).
struct OracleResult {
    int value = -1;
    std::optional<Partition> witness;
    std::uint64_t nodes = 0;
    bool budget_exhausted = false;
};

/// Exact minimum number of disjoint holes / empty pseudo-triangles over
/// all partitions of S into at most budget.max_parts blocks. Blocks have
/// size >= 3 unless allow_degenerate admits 1- and 2-point blocks.
/// Enumeration is canonical (blocks ordered by smallest member), so the
/// witness is deterministic.
OracleResult min_partition(const PointSet& s, const SearchBudget& budget,
                           bool allow_degenerate = false);

/// First admissible <= 3-part partition of a 13-point set in canonical
/// enumeration order; exists for every valid input, so exhaustion aborts
/// loudly (it would indicate a classifier bug).
Partition admissible_3_partition(const PointSet& s);

}  // namespace pcp
