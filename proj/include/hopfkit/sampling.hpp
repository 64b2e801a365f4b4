#pragma once

#include "hopfkit/rational.hpp"

#include <cstdint>
#include <random>

namespace hopfkit {

/// Independent seed for sample `index` of a run seeded with `seed`, so that a
/// sample's data does not depend on how many samples came before it.
inline std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Uniform integer in [lo, hi] by modulo reduction (the bias is irrelevant
/// here and the mapping is stable across standard libraries, unlike
/// std::uniform_int_distribution).
inline long uniform_int(std::mt19937_64& rng, long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng() % span);
}

inline Rational small_rational(std::mt19937_64& rng, long bound = 3) { return Rational(uniform_int(rng, -bound, bound)); }

}  // namespace hopfkit
