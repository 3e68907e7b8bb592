#pragma once
// Deterministic randomness helpers. std::mt19937_64 output is pinned by the
// standard, but the std distributions are not; everything downstream of a seed
// goes through these helpers so artifacts are reproducible across toolchains.

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace triframes {

using Rng = std::mt19937_64;

// Unbiased draw from [0, bound) via rejection sampling. bound must be >= 1.
inline std::uint64_t rng_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

// Uniform double in [0, 1) with 53 random bits.
inline double rng_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller.
inline double rng_normal(Rng& rng) {
    double u1 = 1.0 - rng_unit(rng);  // (0, 1]
    double u2 = rng_unit(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793 * u2);
}

// Fisher-Yates shuffle driven by rng_below.
template <typename T>
void deterministic_shuffle(std::vector<T>& items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng_below(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace triframes
