#include <doctest.h>

#include "pcp/hull.hpp"
#include "pcp/pointgen.hpp"
#include "pcp/rational.hpp"
#include "test_support.hpp"

using namespace pcp;
using testsupport::pts;
using testsupport::uniform;

TEST_CASE("homogeneous orientation agrees with the integer predicate") {
    SplitMix64 rng(3);
    for (int iter = 0; iter < 300; ++iter) {
        Point a{rng.range(-500, 500), rng.range(-500, 500), 0};
        Point b{rng.range(-500, 500), rng.range(-500, 500), 1};
        Point c{rng.range(-500, 500), rng.range(-500, 500), 2};
        CHECK(orient_sign(HomPoint::from(a), HomPoint::from(b), HomPoint::from(c)) ==
              orient_sign(a, b, c));
    }
}

TEST_CASE("line intersection basics") {
    HomPoint x = line_intersection(Point{0, 0, 0}, Point{4, 4, 1}, Point{0, 4, 2},
                                   Point{4, 0, 3});
    CHECK(hom_equal(x, HomPoint{BigInt(2), BigInt(2), BigInt(1)}));
    CHECK_THROWS_AS(
        line_intersection(Point{0, 0, 0}, Point{1, 0, 1}, Point{0, 1, 2}, Point{1, 1, 3}),
        BadInput);
}

TEST_CASE("ray_hull_exit: axis and diagonal rays in a square") {
    auto s = testsupport::pts_unchecked({{-2, -2}, {2, -2}, {2, 2}, {-2, 2}, {0, 0}, {1, 1}, {1, 0}});
    auto hull = convex_hull(s);
    HomPoint e1 = ray_hull_exit(s, 4, 6, hull);  // (0,0) toward (1,0)
    CHECK(hom_equal(e1, HomPoint{BigInt(2), BigInt(0), BigInt(1)}));
    HomPoint e2 = ray_hull_exit(s, 4, 5, hull);  // (0,0) toward (1,1)
    CHECK(hom_equal(e2, HomPoint{BigInt(2), BigInt(2), BigInt(1)}));
    CHECK_THROWS_AS(ray_hull_exit(s, 0, 4, hull), OutsideHull);
}

TEST_CASE("ray_hull_exit lands on exactly one hull edge") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto s = uniform(12, seed + 11);
        auto layers = convex_layers(s);
        if (layers.layers.size() < 2) continue;
        auto hull = layers.layers[0];
        int origin = layers.layers[1][0];
        for (int toward = 0; toward < s.size(); ++toward) {
            if (toward == origin) continue;
            HomPoint exit = ray_hull_exit(s, origin, toward, hull);
            // Substitution check: the exit is a hull vertex, or sits on
            // exactly one open hull edge.
            int hits = 0;
            bool at_vertex = false;
            const int k = static_cast<int>(hull.size());
            for (int i = 0; i < k; ++i) {
                const Point& a = s[hull[i]];
                const Point& b = s[hull[(i + 1) % k]];
                if (hom_equal(exit, HomPoint::from(a))) at_vertex = true;
                if (orient_sign(a, b, exit) == 0 && hom_within_segment(exit, a, b)) ++hits;
            }
            CHECK((at_vertex || hits == 1));
            // and it lies on the ray through the two points
            CHECK(orient_sign(HomPoint::from(s[origin]), HomPoint::from(s[toward]), exit) == 0);
        }
    }
}
