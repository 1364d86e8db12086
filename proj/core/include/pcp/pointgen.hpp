#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcp/geometry.hpp"

namespace pcp {

/// Fixed, named PRNG (splitmix64) so that every seeded artifact is
/// reproducible across platforms.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, n) by rejection; deterministic across platforms.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi], inclusive.
    Coord range(Coord lo, Coord hi);
};

enum class GenKind { Uniform, ConvexPosition, FixedHullSize, FixedLayerProfile, Fixture };

struct GenSpec {
    GenKind kind = GenKind::Uniform;
    int n = 13;
    std::uint64_t seed = 0;
    Coord bbox = 1'000'000;
    int hull_size = 0;                // FixedHullSize
    std::vector<int> layer_profile;   // FixedLayerProfile, outermost first
    std::string fixture;              // Fixture
};

/// Deterministic general-position point set matching the spec; throws
/// BadInput for infeasible specs (n < 1, hull_size > n, bad profile,
/// unknown fixture, bbox out of range).
PointSet generate(const GenSpec& spec);

/// Names of the hand-built fixture instances (one per proof branch the
/// acceptance sweep must cover).
std::vector<std::string> fixture_names();

/// The frozen coordinates of a named fixture.
PointSet fixture_points(const std::string& name);

}  // namespace pcp
