#include "pcp/partitioner.hpp"

#include <algorithm>
#include <map>

#include "pcp/algo13.hpp"
#include "pcp/hull.hpp"

namespace pcp {

long long psi_upper_bound(long long n) { return (3 * n + 12) / 13; }

Vec choose_sweep_direction(const PointSet& s, const std::vector<int>& ids) {
    for (Coord k = 0;; ++k) {
        Vec dir{1, k};
        std::map<I128, int> seen;
        bool ok = true;
        for (int id : ids) {
            I128 proj = dot(dir, Vec{s[id].x, s[id].y});
            if (!seen.emplace(proj, id).second) {
                ok = false;
                break;
            }
        }
        if (ok) return dir;
        // A collision between two fixed points rules out exactly one k,
        // so the loop terminates well before n^2 candidates.
        if (k > static_cast<Coord>(ids.size()) * static_cast<Coord>(ids.size()) + 2)
            throw Error("choose_sweep_direction: no separating direction found");
    }
}

Vec choose_sweep_direction(const PointSet& s) {
    return choose_sweep_direction(s, s.all_ids());
}

SweepPlan make_sweep_plan(const PointSet& s) {
    SweepPlan plan;
    plan.dir = choose_sweep_direction(s);
    std::vector<int> order = s.all_ids();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return dot(plan.dir, Vec{s[a].x, s[a].y}) < dot(plan.dir, Vec{s[b].x, s[b].y});
    });
    const int n = static_cast<int>(order.size());
    for (int at = 0; at < n; at += 13) {
        int len = std::min(13, n - at);
        plan.blocks.emplace_back(order.begin() + at, order.begin() + at + len);
        if (at + len < n) {
            I128 lo = dot(plan.dir, Vec{s[order[at + len - 1]].x, s[order[at + len - 1]].y});
            I128 hi = dot(plan.dir, Vec{s[order[at + len]].x, s[order[at + len]].y});
            plan.cut_lines.push_back(CutLine{plan.dir, lo + hi});
        }
    }
    return plan;
}

std::vector<Part> quad_sweep(const PointSet& s, const std::vector<int>& ids) {
    if (ids.size() >= 13) throw BadInput("quad_sweep: needs fewer than 13 points");
    std::vector<int> order = ids;
    Vec dir = choose_sweep_direction(s, ids);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return dot(dir, Vec{s[a].x, s[a].y}) < dot(dir, Vec{s[b].x, s[b].y});
    });
    std::vector<Part> parts;
    const int n = static_cast<int>(order.size());
    for (int at = 0; at < n; at += 4) {
        int len = std::min(4, n - at);
        std::vector<int> group(order.begin() + at, order.begin() + at + len);
        if (len <= 2) {
            parts.push_back(Part::degenerate(group));
            continue;
        }
        auto part = find_pseudo_polygonization(s, group, 9);
        if (!part)
            throw Error("quad_sweep: a quadruple admitted no hole or pseudo-triangle");
        parts.push_back(std::move(*part));
    }
    return parts;
}

Partition partition_any(const PointSet& s) {
    if (auto v = general_position_check(s)) throw BadInput("partition_any: " + v->describe());
    Partition out;
    out.branch = "sweep";
    if (s.size() == 0) return out;

    SweepPlan plan = make_sweep_plan(s);
    for (const std::vector<int>& block : plan.blocks) {
        if (block.size() == 13) {
            // Solve the strip locally, then map ids back.
            std::vector<std::pair<Coord, Coord>> xy;
            xy.reserve(13);
            for (int id : block) xy.emplace_back(s[id].x, s[id].y);
            PointSet local = PointSet::unchecked(xy);
            Partition lp = partition_13(local);
            for (Part& part : lp.parts) {
                for (int& id : part.members) id = block[static_cast<size_t>(id)];
                for (int& id : part.polygon) id = block[static_cast<size_t>(id)];
                canonicalize(s, part);
                out.parts.push_back(std::move(part));
            }
        } else {
            for (Part& part : quad_sweep(s, block)) out.parts.push_back(std::move(part));
        }
    }
    return out;
}

}  // namespace pcp
