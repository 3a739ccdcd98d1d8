#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>

// Deterministic randomness helpers.
//
// All random draws in the library go through these functions so that results
// are reproducible bit-for-bit across platforms and standard library
// implementations.  std::mt19937_64 has a standard-pinned output sequence,
// but std::uniform_int_distribution does not, so bounded draws are done by
// rejection sampling on the raw engine output.

namespace anacon {

// SplitMix64 finalizer.  Bijective, good avalanche.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Derives an independent stream seed from a master seed and two indices
// (e.g. excluded vertex and restart number).  Distinct (a, b) pairs give
// decorrelated streams even when master seeds are small integers.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull;
    z = mix64(z + 0x9E3779B97F4A7C15ull * (a + 1));
    z = mix64(z + 0xD1B54A32D192ED03ull * (b + 1));
    return mix64(z);
}

// Uniform draw in [0, bound).  Masked rejection sampling: consumes a
// variable number of engine outputs but is exactly uniform and depends only
// on the engine's standard-defined sequence.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t mask = ~0ull >> std::countl_zero(bound - 1);
    for (;;) {
        const std::uint64_t v = rng() & mask;
        if (v < bound) return v;
    }
}

// Uniform double in (0, 1]; 53 random bits, never returns 0 so it is safe
// to take logs.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

// Standard exponential variate, used for Dirichlet starts.
inline double exp1(std::mt19937_64& rng) {
    return -std::log(uniform01(rng));
}

}  // namespace anacon
