#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace prequant {

// All randomized code in this library draws through these helpers instead of
// <random> distributions, so that a given (seed, stream) pair produces the
// same bytes on every platform. mt19937_64 output is portable; the standard
// distributions are not.

inline std::mt19937_64 makeStream(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniformUnit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniformIn(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniformUnit(rng);
}

inline int uniformInt(std::mt19937_64& rng, int lo, int hi) {
    // inclusive bounds; modulo bias is irrelevant for the small ranges used here
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// One standard normal draw (Box-Muller, cosine leg only; keeps state out of
// the interface at the cost of one discarded uniform).
inline double gaussian(std::mt19937_64& rng) {
    double u1 = 1.0 - uniformUnit(rng);  // (0, 1]
    double u2 = uniformUnit(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

}  // namespace prequant
