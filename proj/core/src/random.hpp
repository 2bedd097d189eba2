#ifndef VALIDITY_SRC_RANDOM_HPP
#define VALIDITY_SRC_RANDOM_HPP

// std::mt19937_64 has a fully specified output sequence; the standard
// distributions do not. These helpers map raw engine output to values
// themselves so seeded results are identical across standard libraries.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>

namespace validity::detail {

using Engine = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(Engine& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) by rejection; bound must be > 0.
inline std::uint64_t uniform_below(Engine& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = rng();
    while (x >= limit) {
        x = rng();
    }
    return x % bound;
}

}  // namespace validity::detail

#endif
