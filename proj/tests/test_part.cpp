#include <doctest.h>

#include <algorithm>

#include "pcp/part.hpp"
#include "pcp/pointgen.hpp"
#include "test_support.hpp"

using namespace pcp;
using testsupport::pts;
using testsupport::uniform;

TEST_CASE("classify: square hole, with and without a blocking point") {
    auto square = pts({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
    Part hole = Part::hole({0, 1, 2, 3});
    CHECK(classify_part(square, hole).ok);

    auto blocked = testsupport::pts_unchecked({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 2}});
    auto verdict = classify_part(blocked, hole);
    CHECK(!verdict.ok);
    CHECK(verdict.witness == 4);
}

TEST_CASE("classify: pseudo-triangle example") {
    auto s = pts({{0, 0}, {4, 0}, {1, 1}, {0, 4}});
    Part pt = Part::pseudo_triangle({0, 1, 2, 3});
    canonicalize(s, pt);
    CHECK(classify_part(s, pt).ok);
    CHECK(convex_vertex_count(s, pt.polygon) == 3);
    // the reflex vertex is the interior point (1,1)
    Part not_pt = Part::hole({0, 1, 2, 3});
    CHECK(!classify_part(s, not_pt).ok);
}

TEST_CASE("classify: malformed and degenerate parts") {
    auto s = pts({{0, 0}, {4, 0}, {0, 4}});
    Part p;
    p.kind = PartKind::Hole;
    p.members = {0, 1, 2};
    CHECK_THROWS_AS(classify_part(s, p), MalformedPart);
    CHECK(classify_part(s, Part::degenerate({0})).ok);
    CHECK(classify_part(s, Part::degenerate({0, 1})).ok);
}

TEST_CASE("classify-hole pass implies polygon equals the member hull") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto s = uniform(9, seed + 900);
        auto hull = convex_hull(s);
        Part p = Part::hole(hull);
        canonicalize(s, p);
        if (classify_part(s, p).ok) {
            auto again = convex_hull(s, p.members);
            CHECK(testsupport::sorted(again) == p.members);
        }
    }
}

TEST_CASE("find_pseudo_polygonization: spec examples") {
    auto quad = pts({{0, 0}, {4, 1}, {5, 5}, {-1, 3}});
    auto part = find_pseudo_polygonization(quad, {0, 1, 2, 3});
    REQUIRE(part.has_value());
    CHECK(part->kind == PartKind::Hole);

    // a triangle with an interior point always spans a 4-pseudo-triangle
    auto tri = pts({{0, 0}, {8, 0}, {0, 8}, {2, 2}});
    auto part2 = find_pseudo_polygonization(tri, {0, 1, 2, 3});
    REQUIRE(part2.has_value());
    CHECK(part2->kind == PartKind::PseudoTriangle);
    CHECK(classify_part(tri, *part2).ok);

    // 5 points with a 4+1 hull admit nothing
    auto bad = pts({{0, 0}, {10, 1}, {9, 11}, {-1, 8}, {5, 5}});
    CHECK(!find_pseudo_polygonization(bad, {0, 1, 2, 3, 4}).has_value());

    GenSpec spec;
    spec.kind = GenKind::FixedHullSize;
    spec.hull_size = 6;
    spec.n = 13;
    spec.seed = 2;
    auto big = generate(spec);
    CHECK_THROWS_AS(find_pseudo_polygonization(big, big.all_ids(), 9), SearchLimitExceeded);
}

TEST_CASE("find_pseudo_polygonization agrees with exhaustive enumeration") {
    int checked = 0;
    for (std::uint64_t seed = 0; checked < 120; ++seed) {
        auto s = uniform(9, seed + 40);
        SplitMix64 rng(seed);
        int k = 3 + static_cast<int>(rng.below(5));  // 3..7 members
        std::vector<int> ids = s.all_ids();
        for (size_t i = ids.size(); i > 1; --i) std::swap(ids[i - 1], ids[rng.below(i)]);
        std::vector<int> members(ids.begin(), ids.begin() + k);
        auto fast = find_pseudo_polygonization(s, members);
        bool slow = testsupport::oracle_polygonizable(s, members);
        CHECK(fast.has_value() == slow);
        if (fast) CHECK(classify_part(s, *fast).ok);
        ++checked;
    }
}

TEST_CASE("parts_disjoint: separated and interlocking") {
    auto s = pts({{0, 0}, {2, 1}, {1, 3}, {10, 0}, {12, 1}, {11, 3}});
    Part a = Part::hole({0, 1, 2});
    Part b = Part::hole({3, 4, 5});
    CHECK(parts_disjoint(s, a, b).ok);

    auto t = pts({{0, 0}, {10, 1}, {5, 8}, {5, -3}, {4, 5}, {6, 4}});
    Part c = Part::hole(convex_hull(t, {0, 1, 2}));
    Part d = Part::hole(convex_hull(t, {3, 4, 5}));
    auto verdict = parts_disjoint(t, c, d);
    CHECK(!verdict.ok);
}

TEST_CASE("parts_disjoint is symmetric") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto s = uniform(10, seed + 70);
        std::vector<int> g1{0, 1, 2, 3}, g2{4, 5, 6}, g3{7, 8, 9};
        auto p1 = find_pseudo_polygonization(s, g1);
        auto p2 = find_pseudo_polygonization(s, g2);
        if (!p1 || !p2) continue;
        CHECK(parts_disjoint(s, *p1, *p2).ok == parts_disjoint(s, *p2, *p1).ok);
    }
}

TEST_CASE("verify_partition: pass, coverage failure, degenerate blocks") {
    GenSpec spec;
    spec.kind = GenKind::ConvexPosition;
    spec.n = 5;
    spec.seed = 3;
    auto s = generate(spec);
    Partition p;
    p.parts.push_back(Part::hole(convex_hull(s)));
    CHECK(verify_partition(s, p).overall);

    Partition missing;
    missing.parts.push_back(Part::hole(convex_hull(s, {0, 1, 2, 3})));
    auto report = verify_partition(s, missing);
    CHECK(!report.overall);
    CHECK(!report.coverage_ok);

    // degenerate blocks participate in coverage and disjointness
    auto t = pts({{0, 0}, {2, 0}, {1, 2}, {10, 10}, {12, 11}});
    Partition q;
    q.parts.push_back(Part::hole({0, 1, 2}));
    q.parts.push_back(Part::degenerate({3, 4}));
    CHECK(verify_partition(t, q).overall);

    // a degenerate point inside another part's region is caught
    auto u = pts({{0, 0}, {10, 0}, {5, 8}, {5, 2}});
    Partition r;
    r.parts.push_back(Part::hole({0, 1, 2}));
    r.parts.push_back(Part::degenerate({3}));
    auto rep = verify_partition(u, r);
    CHECK(!rep.overall);
}
