#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace plunet {

// Deterministic 64-bit generator so experiments reproduce bit for bit from a
// seed, independent of platform or standard library. The core is SplitMix64:
//
//     state += 0x9E3779B97F4A7C15
//     z = state
//     z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//     z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//     return z ^ (z >> 31)
//
// Reference stream for seed 0: e220a8397b1dcdaf, 6e789e6aa1b965f4,
// 06c45d188009454f, ... (tests pin these).
//
// Uniform doubles take the top 53 bits; standard normals use the Box-Muller
// cosine branch, one draw per (u1, u2) pair, rejecting u1 == 0.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

    // Standard normal N(0, 1).
    double normal() {
        double u1 = uniform();
        while (u1 == 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t state_;
};

}  // namespace plunet
