#include "pcp/oracle.hpp"

#include <algorithm>
#include <unordered_map>

#include "pcp/hull.hpp"

namespace pcp {

namespace {

using Mask = std::uint32_t;

std::vector<int> mask_ids(Mask m) {
    std::vector<int> ids;
    for (int i = 0; m; ++i, m >>= 1)
        if (m & 1) ids.push_back(i);
    return ids;
}

struct Searcher {
    const PointSet& s;
    const SearchBudget& budget;
    bool allow_degenerate;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    bool skipped_unknown = false;  // a too-large hull-3 block was never searched
    // Tri-state feasibility memo: 0 unknown, 1 feasible, 2 infeasible,
    // 3 beyond the polygonization budget.
    std::unordered_map<Mask, int> state;
    std::unordered_map<Mask, Part> part_of;

    int feasibility(Mask m) {
        auto it = state.find(m);
        if (it != state.end()) return it->second;
        int verdict = compute_feasibility(m);
        state.emplace(m, verdict);
        return verdict;
    }

    int compute_feasibility(Mask m) {
        std::vector<int> ids = mask_ids(m);
        const int k = static_cast<int>(ids.size());
        if (k <= 2) {
            if (!allow_degenerate) return 2;
            Part p = Part::degenerate(ids);
            part_of.emplace(m, std::move(p));
            return 1;
        }
        std::vector<int> hull = convex_hull(s, ids);
        if (static_cast<int>(hull.size()) == k) {
            Part p = Part::hole(hull);
            canonicalize(s, p);
            if (!classify_part(s, p).ok) return 2;  // convex but not empty
            part_of.emplace(m, std::move(p));
            return 1;
        }
        // A simple polygon through all points has every hull vertex of
        // the set convex, so a pseudo-triangle forces hull size 3.
        if (hull.size() > 3) return 2;
        if (k > budget.max_subset_size_for_polygonization) {
            skipped_unknown = true;
            return 3;
        }
        auto p = find_pseudo_polygonization(s, ids, budget.max_subset_size_for_polygonization);
        if (!p) return 2;
        part_of.emplace(m, std::move(*p));
        return 1;
    }

    // Exactly `blocks_left` more blocks over `remaining`; chosen blocks
    // collected in `acc`. Canonical: each block contains the smallest
    // remaining id; candidate sub-blocks enumerated in descending
    // submask order.
    bool search(Mask remaining, int blocks_left, std::vector<Part>& acc) {
        if (remaining == 0) return blocks_left == 0;
        if (blocks_left == 0) return false;
        const int min_size = allow_degenerate ? 1 : 3;
        if (static_cast<int>(mask_ids(remaining).size()) < min_size * blocks_left) return false;

        const Mask pivot = remaining & (~remaining + 1);
        const Mask rest = remaining ^ pivot;
        for (Mask sub = rest;; sub = (sub - 1) & rest) {
            Mask block = sub | pivot;
            if (++nodes > budget.node_limit) {
                exhausted = true;
                return false;
            }
            if (feasibility(block) == 1) {
                const Part& cand = part_of.at(block);
                bool ok = true;
                for (const Part& prev : acc)
                    if (!parts_disjoint(s, prev, cand).ok) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    acc.push_back(cand);
                    if (search(remaining ^ block, blocks_left - 1, acc)) return true;
                    acc.pop_back();
                }
            }
            if (exhausted) return false;
            if (sub == 0) break;
        }
        return false;
    }
};

}  // namespace

OracleResult min_partition(const PointSet& s, const SearchBudget& budget,
                           bool allow_degenerate) {
    if (s.size() > 24) throw BadInput("min_partition: set too large for exhaustive search");
    if (auto v = general_position_check(s))
        throw BadInput("min_partition: " + v->describe());
    Searcher searcher{s, budget, allow_degenerate};
    OracleResult res;
    const Mask all = (Mask{1} << s.size()) - 1;
    for (int t = 1; t <= budget.max_parts; ++t) {
        std::vector<Part> acc;
        if (searcher.search(all, t, acc)) {
            Partition p;
            p.parts = std::move(acc);
            std::sort(p.parts.begin(), p.parts.end(), [](const Part& x, const Part& y) {
                return x.members.front() < y.members.front();
            });
            p.branch = "oracle";
            res.value = t;
            res.witness = std::move(p);
            break;
        }
        if (searcher.exhausted) break;
    }
    res.nodes = searcher.nodes;
    // The answer is uncertain if the node budget ran out, or if a
    // skipped oversized hull-3 block could have beaten the found value.
    res.budget_exhausted = searcher.exhausted || (searcher.skipped_unknown && res.value != 1);
    return res;
}

Partition admissible_3_partition(const PointSet& s) {
    if (s.size() != 13) throw BadInput("admissible_3_partition: need exactly 13 points");
    SearchBudget budget;
    budget.max_parts = 3;
    OracleResult res = min_partition(s, budget, false);
    if (!res.witness)
        throw Error("admissible_3_partition: exhaustive search found no 3-part partition; "
                    "this contradicts the 13-point theorem and indicates a classifier bug");
    return *std::move(res.witness);
}

}  // namespace pcp
