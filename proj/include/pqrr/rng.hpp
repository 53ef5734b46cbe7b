#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace pqrr {

// All randomness in the library flows through the helpers below. The
// distributions are written out explicitly (rather than using the
// <random> distribution templates) so that byte streams depend only on
// this code and the seed, never on the standard library vendor.

/// Uniform draw in [0, bound) by rejection sampling on mt19937 output.
inline std::uint32_t bounded_u32(std::mt19937& g, std::uint32_t bound) {
    const std::uint32_t threshold = (-bound) % bound;
    for (;;) {
        std::uint32_t x = g();
        if (x >= threshold) return x % bound;
    }
}

/// Uniform float in [0, 1) with 24 bits of resolution.
inline float uniform01(std::mt19937& g) {
    return float(g() >> 8) * (1.0f / 16777216.0f);
}

/// Counter-based generator used where generation must parallelize over
/// rows without sharing RNG state (splitmix64).
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in (0, 1].
    double next_open01() {
        return double((next() >> 11) + 1) * (1.0 / 9007199254740992.0);
    }

    /// Standard normal pair via Box-Muller.
    void next_gauss(double& g0, double& g1) {
        const double two_pi = 6.283185307179586476925286766559;
        double u1 = next_open01();
        double u2 = next_open01();
        double r = std::sqrt(-2.0 * std::log(u1));
        g0 = r * std::cos(two_pi * u2);
        g1 = r * std::sin(two_pi * u2);
    }
};

}  // namespace pqrr
