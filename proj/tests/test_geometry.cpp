#include <doctest.h>

#include "pcp/angular.hpp"
#include "pcp/geometry.hpp"
#include "pcp/hull.hpp"
#include "pcp/pointgen.hpp"
#include "test_support.hpp"

using namespace pcp;
using testsupport::pts;
using testsupport::uniform;

TEST_CASE("orientation basics") {
    Point a{0, 0, 0}, b{1, 0, 1}, c{0, 1, 2};
    CHECK(orientation(a, b, c) == Orient::CCW);
    CHECK(orientation(a, c, b) == Orient::CW);
    CHECK(orientation(a, Point{1, 1, 1}, Point{2, 2, 2}) == Orient::Collinear);
}

TEST_CASE("orientation identities over random triples") {
    SplitMix64 rng(42);
    for (int iter = 0; iter < 500; ++iter) {
        Point a{rng.range(-1000, 1000), rng.range(-1000, 1000), 0};
        Point b{rng.range(-1000, 1000), rng.range(-1000, 1000), 1};
        Point c{rng.range(-1000, 1000), rng.range(-1000, 1000), 2};
        CHECK(orient_sign(a, b, c) == orient_sign(b, c, a));
        CHECK(orient_sign(a, b, c) == -orient_sign(b, a, c));
    }
}

TEST_CASE("general position check") {
    CHECK(!general_position_check(pts({{0, 0}, {1, 0}, {0, 1}})));

    auto bad = PointSet::unchecked({{0, 0}, {1, 1}, {2, 2}, {0, 5}});
    auto v = general_position_check(bad.points());
    REQUIRE(v.has_value());
    CHECK(!v->coincident());
    CHECK(v->a == 0);
    CHECK(v->b == 1);
    CHECK(v->c == 2);

    auto dup = PointSet::unchecked({{0, 0}, {0, 0}});
    auto w = general_position_check(dup.points());
    REQUIRE(w.has_value());
    CHECK(w->coincident());
    CHECK(w->a == 0);
    CHECK(w->b == 1);

    CHECK_THROWS_AS(PointSet::from_xy({{0, 0}, {1, 1}, {2, 2}}), BadInput);
    CHECK_THROWS_AS(PointSet::from_xy({{Coord{1} << 31, 0}}), BadInput);
}

TEST_CASE("convex hull: squares and triangles") {
    auto s = pts({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 1}});
    auto h = convex_hull(s);
    CHECK(h == std::vector<int>{0, 1, 2, 3});

    auto t = pts({{3, 1}, {0, 0}, {1, 4}});
    auto ht = convex_hull(t);
    REQUIRE(ht.size() == 3);
    CHECK(ht.front() == 1);  // lexicographic minimum first
    CHECK(orient_sign(t[ht[0]], t[ht[1]], t[ht[2]]) > 0);
}

TEST_CASE("convex hull matches brute-force extreme points on random sets") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto s = uniform(13, seed);
        auto fast = testsupport::sorted(convex_hull(s));
        auto slow = testsupport::sorted(testsupport::brute_force_hull_members(s, s.all_ids()));
        CHECK(fast == slow);
    }
}

TEST_CASE("convex hull is invariant under input permutation") {
    auto s = uniform(11, 99);
    auto base = convex_hull(s);
    SplitMix64 rng(5);
    std::vector<int> ids = s.all_ids();
    for (int iter = 0; iter < 10; ++iter) {
        for (size_t i = ids.size(); i > 1; --i)
            std::swap(ids[i - 1], ids[rng.below(i)]);
        CHECK(convex_hull(s, ids) == base);
    }
}

TEST_CASE("convex layers: nested squares and convex 13-gon") {
    std::vector<std::pair<Coord, Coord>> xy;
    Coord twist = 0;
    for (Coord r : {20, 12, 6}) {  // per-ring twists avoid shared diagonals
        xy.push_back({-r + twist, -r});
        xy.push_back({r, -r + 1 + twist});
        xy.push_back({r - 1 - twist, r});
        xy.push_back({-r + 1, r - 1 - twist});
        twist += 1;
    }
    auto s = pts(xy);
    auto d = convex_layers(s);
    REQUIRE(d.layers.size() == 3);
    CHECK(d.layers[0].size() == 4);
    CHECK(d.layers[1].size() == 4);
    CHECK(d.layers[2].size() == 4);

    GenSpec spec;
    spec.kind = GenKind::ConvexPosition;
    spec.n = 13;
    spec.seed = 1;
    auto conv = generate(spec);
    auto dc = convex_layers(conv);
    REQUIRE(dc.layers.size() == 1);
    CHECK(dc.layers[0].size() == 13);
}

TEST_CASE("convex layers match iterated brute-force peeling") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto s = uniform(13, seed + 100);
        auto d = convex_layers(s);
        std::vector<int> rest = s.all_ids();
        size_t layer = 0;
        while (!rest.empty()) {
            auto slow = testsupport::sorted(testsupport::brute_force_hull_members(s, rest));
            REQUIRE(layer < d.layers.size());
            CHECK(testsupport::sorted(d.layers[layer]) == slow);
            std::vector<int> next;
            for (int id : rest)
                if (!std::binary_search(slow.begin(), slow.end(), id)) next.push_back(id);
            rest = std::move(next);
            ++layer;
        }
        CHECK(layer == d.layers.size());
    }
}

TEST_CASE("layer decomposition invariants") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto s = uniform(17, seed + 7);
        auto d = convex_layers(s);
        for (int id = 0; id < s.size(); ++id) {
            int found = 0;
            for (const auto& layer : d.layers)
                found += static_cast<int>(std::count(layer.begin(), layer.end(), id));
            CHECK(found == 1);
            CHECK(d.layer_of[static_cast<size_t>(id)] >= 0);
        }
        for (size_t j = 0; j + 1 < d.layers.size(); ++j)
            for (int id : d.layers[j + 1])
                CHECK(strictly_inside_convex(s, d.layers[j], s[id]));
    }
}

TEST_CASE("halfplane points") {
    auto s = pts({{0, 0}, {4, 0}, {1, 1}, {1, -1}, {2, 3}});
    DirectedLine line{0, 1};
    Side up = side_of(s, line, 2);
    auto above = halfplane_points(s, line, up);
    CHECK(testsupport::sorted(above) == std::vector<int>{2, 4});
    auto below = halfplane_points(s, line, opposite(up));
    CHECK(below == std::vector<int>{3});
}

TEST_CASE("halfplane union property") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto s = uniform(12, seed + 30);
        SplitMix64 rng(seed);
        int p = static_cast<int>(rng.below(12));
        int q = static_cast<int>(rng.below(12));
        if (p == q) q = (q + 1) % 12;
        auto left = halfplane_points(s, {p, q}, Side::Left);
        auto right = halfplane_points(s, {p, q}, Side::Right);
        CHECK(left.size() + right.size() + 2 == static_cast<size_t>(s.size()));
    }
}

TEST_CASE("outer halfplane of a layer-2 edge holds only layer-1 points") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto s = uniform(13, seed + 500);
        auto d = convex_layers(s);
        if (d.layers.size() < 2 || d.layers[1].size() < 3) continue;
        const auto& l2 = d.layers[1];
        const int m = static_cast<int>(l2.size());
        for (int e = 0; e < m; ++e) {
            DirectedLine line{l2[e], l2[(e + 1) % m]};
            Side inner = side_of(s, line, l2[(e + 2) % m]);
            for (int id : halfplane_points(s, line, opposite(inner)))
                CHECK(d.layer_of[static_cast<size_t>(id)] == 0);
        }
    }
}

TEST_CASE("kth angular neighbor: examples") {
    auto s = testsupport::pts_unchecked({{0, 0}, {10, 0}, {5, 1}, {5, 2}, {5, 3}});
    auto upper = [&](const Point& x) { return x.y > 0; };
    CHECK(kth_angular_neighbor(s, 0, 1, upper, 1) == 2);
    CHECK(kth_angular_neighbor(s, 0, 1, upper, 3) == 4);
    CHECK_THROWS_AS(kth_angular_neighbor(s, 0, 1, upper, 4), NotEnoughPoints);
}

TEST_CASE("kth angular neighbor matches the angular sort oracle") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto s = uniform(12, seed + 60);
        // pivot 0, reference 1, region: left halfplane of the ray
        int side = 1;
        std::vector<int> region_ids;
        for (const Point& x : s.points())
            if (x.id != 0 && x.id != 1 && orient_sign(s[0], s[1], x) == side)
                region_ids.push_back(x.id);
        if (region_ids.empty()) continue;
        auto order = sort_ccw_around(s, 0, s[1] - s[0], region_ids);
        auto region = [&](const Point& x) {
            return x.id != 1 && orient_sign(s[0], s[1], x) == side;
        };
        for (size_t k = 1; k <= order.size(); ++k)
            CHECK(kth_angular_neighbor(s, 0, 1, region, static_cast<int>(k)) ==
                  order[k - 1]);
    }
}

TEST_CASE("cone membership") {
    auto s = testsupport::pts_unchecked({{0, 0}, {4, 0}, {0, 4}, {1, 1}, {3, 3}, {-1, 2}});
    Cone c{0, 1, 2};
    CHECK(cone_contains(s, c, s[3]));
    CHECK(cone_contains(s, c, s[4]));
    CHECK(!cone_contains(s, c, s[5]));
    CHECK(!cone_contains(s, c, s[1]));  // boundary rays excluded
}
