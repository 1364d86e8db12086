#include "pcp/rational.hpp"

#include "pcp/hull.hpp"

namespace pcp {

std::string HomPoint::str() const {
    HomPoint n = normalized(*this);
    std::string out = n.x.str() + "/" + n.w.str() + ", " + n.y.str() + "/" + n.w.str();
    return "(" + out + ")";
}

HomPoint normalized(HomPoint p) {
    if (p.w == 0) throw BadInput("HomPoint: zero denominator");
    if (p.w < 0) {
        p.x = -p.x;
        p.y = -p.y;
        p.w = -p.w;
    }
    BigInt g = gcd(gcd(abs(p.x), abs(p.y)), p.w);
    if (g > 1) {
        p.x /= g;
        p.y /= g;
        p.w /= g;
    }
    return p;
}

bool hom_equal(const HomPoint& a, const HomPoint& b) {
    return a.x * b.w == b.x * a.w && a.y * b.w == b.y * a.w;
}

int orient_sign(const HomPoint& a, const HomPoint& b, const HomPoint& c) {
    // det of rows (b - a), (c - a) after clearing denominators; all
    // denominators are kept positive, so the sign is unaffected.
    BigInt ux = b.x * a.w - a.x * b.w;
    BigInt uy = b.y * a.w - a.y * b.w;
    BigInt vx = c.x * a.w - a.x * c.w;
    BigInt vy = c.y * a.w - a.y * c.w;
    BigInt d = ux * vy - uy * vx;
    return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

int orient_sign(const HomPoint& a, const Point& b, const Point& c) {
    return orient_sign(a, HomPoint::from(b), HomPoint::from(c));
}

int orient_sign(const Point& a, const Point& b, const HomPoint& c) {
    return orient_sign(HomPoint::from(a), HomPoint::from(b), c);
}

HomPoint line_intersection(const HomPoint& a, const HomPoint& b, const HomPoint& c,
                           const HomPoint& d) {
    // Line through a, b as a x + b y = c in cleared form.
    BigInt a1 = b.y * a.w - a.y * b.w;
    BigInt b1 = a.x * b.w - b.x * a.w;
    BigInt c1 = a1 * a.x + b1 * a.y;  // times a.w below
    // Coefficients scale: evaluate on homogeneous coordinates directly.
    // Line L1: a1 * X + b1 * Y = c1 / a.w * W  -> a1*X*a.w + b1*Y*a.w = c1*W.
    BigInt A1 = a1 * a.w, B1 = b1 * a.w, C1 = c1;
    BigInt a2 = d.y * c.w - c.y * d.w;
    BigInt b2 = c.x * d.w - d.x * c.w;
    BigInt c2 = a2 * c.x + b2 * c.y;
    BigInt A2 = a2 * c.w, B2 = b2 * c.w, C2 = c2;

    BigInt den = A1 * B2 - A2 * B1;
    if (den == 0) throw BadInput("line_intersection: parallel lines");
    BigInt x = C1 * B2 - C2 * B1;
    BigInt y = A1 * C2 - A2 * C1;
    return normalized(HomPoint{x, y, den});
}

HomPoint line_intersection(const Point& a, const Point& b, const Point& c, const Point& d) {
    return line_intersection(HomPoint::from(a), HomPoint::from(b), HomPoint::from(c),
                             HomPoint::from(d));
}

bool hom_within_segment(const HomPoint& x, const Point& a, const Point& b) {
    // Strictly between a and b along the dominant axis.
    BigInt ax(a.x), ay(a.y), bx(b.x), by(b.y);
    if (a.x != b.x) {
        BigInt lo = ax * x.w, hi = bx * x.w;
        if (lo > hi) std::swap(lo, hi);
        return lo < x.x && x.x < hi;
    }
    BigInt lo = ay * x.w, hi = by * x.w;
    if (lo > hi) std::swap(lo, hi);
    return lo < x.y && x.y < hi;
}

HomPoint ray_hull_exit(const PointSet& s, const HomPoint& origin, Vec dir,
                       const std::vector<int>& hull) {
    const int k = static_cast<int>(hull.size());
    if (k < 3) throw BadInput("ray_hull_exit: degenerate hull");
    // Strict interiority of the origin.
    for (int i = 0; i < k; ++i) {
        const Point& a = s[hull[i]];
        const Point& b = s[hull[(i + 1) % k]];
        if (orient_sign(HomPoint::from(a), HomPoint::from(b), origin) <= 0)
            throw OutsideHull("ray_hull_exit: origin not strictly inside the hull");
    }
    if (dir.x == 0 && dir.y == 0) throw BadInput("ray_hull_exit: zero direction");

    BigInt dx(dir.x), dy(dir.y);
    for (int i = 0; i < k; ++i) {
        const Point& a = s[hull[i]];
        const Point& b = s[hull[(i + 1) % k]];
        BigInt ex = BigInt(b.x) - BigInt(a.x);
        BigInt ey = BigInt(b.y) - BigInt(a.y);
        // Solve origin + t*dir = a + u*(b - a): exact Cramer.
        BigInt den = dx * ey - dy * ex;  // cross(dir, b - a)
        if (den == 0) continue;          // parallel to the edge
        BigInt rx = BigInt(a.x) * origin.w - origin.x;
        BigInt ry = BigInt(a.y) * origin.w - origin.y;
        BigInt tn = rx * ey - ry * ex;  // t = tn / (den * w)
        BigInt tden = den * origin.w;
        // Require t > 0.
        if (!((tn > 0 && tden > 0) || (tn < 0 && tden < 0))) continue;
        // u = (rx*dy - ry*dx) / (w * den), required in [0, 1): the
        // half-open range assigns an exit through a shared vertex to
        // exactly one of its two edges.
        BigInt u_num = rx * dy - ry * dx;
        BigInt u_den = origin.w * den;
        bool u_ok = u_den > 0 ? (u_num >= 0 && u_num < u_den) : (u_num <= 0 && u_num > u_den);
        if (!u_ok) continue;
        // Exit point = origin + t * dir.
        HomPoint out{origin.x * tden + tn * dx * origin.w,
                     origin.y * tden + tn * dy * origin.w, origin.w * tden};
        return normalized(out);
    }
    throw BadInput("ray_hull_exit: no exit edge found");
}

HomPoint ray_hull_exit(const PointSet& s, int origin, int toward, const std::vector<int>& hull) {
    return ray_hull_exit(s, HomPoint::from(s[origin]), s[toward] - s[origin], hull);
}

}  // namespace pcp
