#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcp {

using Coord = std::int64_t;
using I128 = __int128;

// Coordinates are capped so that every predicate fits comfortably in
// 128-bit intermediates (and rational constructions in 512 bits).
inline constexpr Coord kCoordLimit = Coord{1} << 30;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadInput : Error { using Error::Error; };
struct NotEnoughPoints : Error { using Error::Error; };
struct OutsideHull : Error { using Error::Error; };
struct MalformedPart : Error { using Error::Error; };
struct SearchLimitExceeded : Error { using Error::Error; };
struct InvalidCertificate : Error { using Error::Error; };
struct BranchMisfire : Error { using Error::Error; };

struct Point {
    Coord x = 0;
    Coord y = 0;
    int id = -1;
};

struct Vec {
    Coord x = 0;
    Coord y = 0;
};

inline Vec operator-(const Point& a, const Point& b) { return Vec{a.x - b.x, a.y - b.y}; }

enum class Orient : int { CW = -1, Collinear = 0, CCW = 1 };

inline I128 cross(Vec u, Vec v) {
    return static_cast<I128>(u.x) * v.y - static_cast<I128>(u.y) * v.x;
}
inline I128 dot(Vec u, Vec v) {
    return static_cast<I128>(u.x) * v.x + static_cast<I128>(u.y) * v.y;
}
inline int sgn(I128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

/// Sign of the cross product (b-a) x (c-a).
inline int orient_sign(const Point& a, const Point& b, const Point& c) {
    return sgn(cross(b - a, c - a));
}
inline Orient orientation(const Point& a, const Point& b, const Point& c) {
    return static_cast<Orient>(orient_sign(a, b, c));
}

/// A violation found by general_position_check. `c == -1` marks a
/// coincident pair (a, b); otherwise (a, b, c) is a collinear triple.
struct GpViolation {
    int a = -1;
    int b = -1;
    int c = -1;
    bool coincident() const { return c < 0; }
    std::string describe() const;
};

/// Planar point set in general position. Construction through from_xy
/// rejects coincident pairs, collinear triples and out-of-range
/// coordinates; ids always equal positions.
class PointSet {
  public:
    PointSet() = default;

    /// Validating factory: throws BadInput (with the smallest violating
    /// pair/triple in the message) unless the points are in general
    /// position and within the coordinate cap.
    static PointSet from_xy(const std::vector<std::pair<Coord, Coord>>& xy);

    /// Caller guarantees general position (used by generators that
    /// maintain the invariant incrementally).
    static PointSet unchecked(const std::vector<std::pair<Coord, Coord>>& xy);

    int size() const { return static_cast<int>(pts_.size()); }
    const Point& operator[](int id) const { return pts_[static_cast<size_t>(id)]; }
    const std::vector<Point>& points() const { return pts_; }
    std::vector<int> all_ids() const;

  private:
    std::vector<Point> pts_;
};

/// Smallest violating pair (coincident) or triple (collinear), pairs
/// first, in lexicographic id order; nullopt when in general position.
std::optional<GpViolation> general_position_check(const std::vector<Point>& pts);
std::optional<GpViolation> general_position_check(const PointSet& s);

/// Directed line through two points of a set; H(pq, r) is the open side
/// containing r.
struct DirectedLine {
    int p = -1;
    int q = -1;
};

enum class Side : int { Left = 1, Right = -1 };

inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

/// Which open side of line p->q the point r lies on. Throws BadInput if
/// r is on the line.
Side side_of(const PointSet& s, DirectedLine line, int r);

/// Ids of the points of `ids` strictly on the requested side; the line
/// endpoints are never included.
std::vector<int> halfplane_points(const PointSet& s, DirectedLine line, Side side,
                                  const std::vector<int>& ids);
std::vector<int> halfplane_points(const PointSet& s, DirectedLine line, Side side);

/// Open angular domain < pi at `apex`, bounded by the rays apex->arm1
/// and apex->arm2.
struct Cone {
    int apex = -1;
    int arm1 = -1;
    int arm2 = -1;
};

/// Strict membership of x in the open cone.
bool cone_contains(const PointSet& s, const Cone& c, const Point& x);

}  // namespace pcp
