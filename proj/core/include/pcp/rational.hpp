#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pcp/geometry.hpp"

namespace pcp {

// 512-bit checked integers back every predicate that involves a
// constructed (rational) point: worst-case numerators here stay below
// ~2^330 for the chains of constructions the case analysis needs.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<
    512, 512, boost::multiprecision::signed_magnitude, boost::multiprecision::checked, void>>;

/// Exact rational point in homogeneous form (x/w, y/w), w > 0.
struct HomPoint {
    BigInt x, y, w;

    static HomPoint from(const Point& p) { return HomPoint{BigInt(p.x), BigInt(p.y), BigInt(1)}; }
    static HomPoint from_halves(Coord two_x, Coord two_y) {
        return HomPoint{BigInt(two_x), BigInt(two_y), BigInt(2)};
    }
    bool integral() const { return w == 1; }
    std::string str() const;
};

/// Normalizes w > 0 and divides out the gcd.
HomPoint normalized(HomPoint p);

bool hom_equal(const HomPoint& a, const HomPoint& b);

/// Sign of the orientation determinant of three (possibly rational)
/// points; exact.
int orient_sign(const HomPoint& a, const HomPoint& b, const HomPoint& c);
int orient_sign(const HomPoint& a, const Point& b, const Point& c);
int orient_sign(const Point& a, const Point& b, const HomPoint& c);

/// Intersection of lines (a, b) and (c, d); throws BadInput when
/// parallel.
HomPoint line_intersection(const HomPoint& a, const HomPoint& b, const HomPoint& c,
                           const HomPoint& d);
HomPoint line_intersection(const Point& a, const Point& b, const Point& c, const Point& d);

/// Strictly inside the open segment (a, b) assuming collinearity.
bool hom_within_segment(const HomPoint& x, const Point& a, const Point& b);

/// The unique point where the ray from `origin` in direction `dir`
/// leaves the convex polygon `hull` (CCW ids). The origin must be
/// strictly inside; throws OutsideHull otherwise.
HomPoint ray_hull_exit(const PointSet& s, const HomPoint& origin, Vec dir,
                       const std::vector<int>& hull);

/// Spec-facing overload: ray through two set members, origin strictly
/// inside the hull.
HomPoint ray_hull_exit(const PointSet& s, int origin, int toward, const std::vector<int>& hull);

}  // namespace pcp
