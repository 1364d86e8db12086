#include "pcp/pointgen.hpp"
#include <memory>

#include <algorithm>
#include <cmath>
#include <functional>

#include "pcp/hull.hpp"

namespace pcp {

std::uint64_t SplitMix64::below(std::uint64_t n) {
    if (n == 0) throw BadInput("SplitMix64::below(0)");
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % n;
}

Coord SplitMix64::range(Coord lo, Coord hi) {
    return lo + static_cast<Coord>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

namespace {

using XY = std::vector<std::pair<Coord, Coord>>;
using Accept = std::function<bool(const Point&)>;

bool clashes(const XY& pts, Coord x, Coord y) {
    const Point cand{x, y, -1};
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i) {
        if (pts[i].first == x && pts[i].second == y) return true;
        for (int j = i + 1; j < n; ++j) {
            Point a{pts[i].first, pts[i].second, -1};
            Point b{pts[j].first, pts[j].second, -1};
            if (orient_sign(a, b, cand) == 0) return true;
        }
    }
    return false;
}

// Draw one more point, redrawing on collinearity or a rejected position.
// Only the newest point is ever redrawn, so the stream stays
// deterministic.
void push_pt(XY& pts, SplitMix64& rng, Coord half, const Accept& ok) {
    for (int attempt = 0; attempt < 200000; ++attempt) {
        Coord x = rng.range(-half, half);
        Coord y = rng.range(-half, half);
        if (clashes(pts, x, y)) continue;
        if (ok && !ok(Point{x, y, -1})) continue;
        pts.emplace_back(x, y);
        return;
    }
    throw BadInput("point generation failed: acceptance region too small");
}

// `count` points near a circle of the given radius, evenly slotted with
// small angular jitter, all accepted by `ok` and in general position
// with everything drawn so far.
void push_ring(XY& pts, SplitMix64& rng, int count, double radius, const Accept& ok) {
    const double slot = 2.0 * M_PI / count;
    for (int i = 0; i < count; ++i) {
        for (int attempt = 0;; ++attempt) {
            if (attempt > 200000) throw BadInput("ring generation failed");
            double jitter = (static_cast<double>(rng.below(1u << 20)) / (1u << 20) - 0.5) * 0.2;
            double theta = slot * (static_cast<double>(i) + 0.5 + jitter);
            Coord x = static_cast<Coord>(std::llround(radius * std::cos(theta)));
            Coord y = static_cast<Coord>(std::llround(radius * std::sin(theta)));
            if (clashes(pts, x, y)) continue;
            if (ok && !ok(Point{x, y, -1})) continue;
            pts.emplace_back(x, y);
            break;
        }
    }
}

PointSet finish(XY pts) {
    PointSet s = PointSet::unchecked(pts);
    if (auto v = general_position_check(s))
        throw BadInput("generator produced a degenerate set: " + v->describe());
    return s;
}

Accept inside_ring(const XY& pts, int ring_begin, int ring_end) {
    // Strictly inside the convex polygon spanned by pts[ring_begin..ring_end).
    XY ring(pts.begin() + ring_begin, pts.begin() + ring_end);
    auto rs = std::make_shared<PointSet>(PointSet::unchecked(ring));
    auto hull = std::make_shared<std::vector<int>>(convex_hull(*rs));
    return [rs, hull](const Point& cand) { return strictly_inside_convex(*rs, *hull, cand); };
}

}  // namespace

PointSet generate(const GenSpec& spec) {
    if (spec.n < 1) throw BadInput("generate: n must be >= 1");
    if (spec.bbox < 32 || spec.bbox > kCoordLimit)
        throw BadInput("generate: bbox out of range [32, 2^30]");

    switch (spec.kind) {
        case GenKind::Uniform: {
            SplitMix64 rng(spec.seed * 0x51A9C1E35F7D0321ULL + 0x1DULL);
            XY pts;
            pts.reserve(static_cast<size_t>(spec.n));
            for (int i = 0; i < spec.n; ++i) push_pt(pts, rng, spec.bbox, nullptr);
            return finish(std::move(pts));
        }
        case GenKind::ConvexPosition: {
            if (spec.n < 3) throw BadInput("generate: convex position needs n >= 3");
            SplitMix64 rng(spec.seed * 0x7C6E9D8B5A3F1E2DULL + 0x2BULL);
            for (int attempt = 0; attempt < 64; ++attempt) {
                XY pts;
                push_ring(pts, rng, spec.n, static_cast<double>(spec.bbox) * 0.9, nullptr);
                PointSet s = finish(std::move(pts));
                if (static_cast<int>(convex_hull(s).size()) == spec.n) return s;
            }
            throw BadInput("generate: convex-position ring kept collapsing (bbox too small)");
        }
        case GenKind::FixedHullSize: {
            if (spec.hull_size < 3 || spec.hull_size > spec.n)
                throw BadInput("generate: hull size must be in [3, n]");
            SplitMix64 rng(spec.seed * 0xA24BAED4963EE407ULL + 0x3FULL);
            for (int attempt = 0; attempt < 64; ++attempt) {
                XY pts;
                push_ring(pts, rng, spec.hull_size, static_cast<double>(spec.bbox) * 0.9,
                          nullptr);
                Accept inside = inside_ring(pts, 0, spec.hull_size);
                bool ok = true;
                try {
                    for (int i = spec.hull_size; i < spec.n; ++i)
                        push_pt(pts, rng, spec.bbox, inside);
                } catch (const BadInput&) {
                    ok = false;
                }
                if (!ok) continue;
                PointSet s = finish(std::move(pts));
                if (static_cast<int>(convex_hull(s).size()) == spec.hull_size) return s;
            }
            throw BadInput("generate: hull size kept drifting");
        }
        case GenKind::FixedLayerProfile: {
            int total = 0;
            for (int c : spec.layer_profile) total += c;
            if (spec.layer_profile.empty() || total != spec.n)
                throw BadInput("generate: layer profile must sum to n");
            for (size_t j = 0; j + 1 < spec.layer_profile.size(); ++j)
                if (spec.layer_profile[j] < 3)
                    throw BadInput("generate: non-innermost layers need >= 3 points");
            SplitMix64 rng(spec.seed * 0xD1342543DE82EF95ULL + 0x53ULL);
            for (int attempt = 0; attempt < 64; ++attempt) {
                XY pts;
                bool ok = true;
                double radius = static_cast<double>(spec.bbox) * 0.9;
                try {
                    for (size_t j = 0; j < spec.layer_profile.size() && ok; ++j) {
                        int c = spec.layer_profile[j];
                        Accept inside =
                            j == 0 ? Accept{}
                                   : inside_ring(pts,
                                                 static_cast<int>(pts.size()) -
                                                     spec.layer_profile[j - 1],
                                                 static_cast<int>(pts.size()));
                        if (c >= 3) {
                            push_ring(pts, rng, c, radius, inside);
                        } else {
                            Coord half = std::max<Coord>(4, static_cast<Coord>(radius / 8.0));
                            for (int i = 0; i < c; ++i) push_pt(pts, rng, half, inside);
                        }
                        radius *= 0.45;
                        if (radius < 4) radius = 4;
                    }
                } catch (const BadInput&) {
                    ok = false;
                }
                if (!ok) continue;
                PointSet s = finish(std::move(pts));
                LayerDecomposition d = convex_layers(s);
                std::vector<int> sizes;
                for (auto& l : d.layers) sizes.push_back(static_cast<int>(l.size()));
                if (sizes == spec.layer_profile) return s;
            }
            throw BadInput("generate: layer profile kept drifting");
        }
        case GenKind::Fixture:
            return fixture_points(spec.fixture);
    }
    throw BadInput("generate: unknown kind");
}

}  // namespace pcp
