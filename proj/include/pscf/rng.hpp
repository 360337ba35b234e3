#pragma once

#include <cstdint>

#include "pscf/rational.hpp"

namespace pscf {

/// SplitMix64 stream generator. Tiny, fast, and fully reproducible across
/// platforms; used for all randomized sampling in the library.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
};

/// The SplitMix64 avalanche finalizer applied to a single word.
std::uint64_t mix64(std::uint64_t x);

/// Deterministic stream seed for a (a, b, c) coordinate, e.g. (n, m, trial).
/// Streams are independently reproducible regardless of evaluation order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c);

/// Uniform integer in [0, bound) by rejection sampling; bound >= 1.
Bigint uniform_below(SplitMix64& rng, const Bigint& bound);

}  // namespace pscf
