#include "pscf/rng.hpp"

#include <stdexcept>

namespace pscf {

std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t SplitMix64::next() {
    state += 0x9E3779B97F4A7C15ULL;
    return mix64(state);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t h = seed;
    h = mix64(h ^ mix64(a + 0x9E3779B97F4A7C15ULL));
    h = mix64(h ^ mix64(b + 0xC2B2AE3D27D4EB4FULL));
    h = mix64(h ^ mix64(c + 0x165667B19E3779F9ULL));
    return h;
}

Bigint uniform_below(SplitMix64& rng, const Bigint& bound) {
    if (bound < 1) throw std::invalid_argument("uniform_below: bound must be >= 1");
    if (bound == 1) return Bigint(0);
    const unsigned bits = boost::multiprecision::msb(bound - 1) + 1;
    const unsigned words = (bits + 63) / 64;
    const unsigned top_bits = bits - 64 * (words - 1);
    const std::uint64_t top_mask =
        (top_bits >= 64) ? ~0ULL : ((std::uint64_t(1) << top_bits) - 1);
    for (;;) {
        Bigint value = 0;
        for (unsigned w = 0; w < words; ++w) {
            std::uint64_t chunk = rng.next();
            if (w == 0) chunk &= top_mask;  // w == 0 is the most significant word
            value <<= 64;
            value |= Bigint(chunk);
        }
        if (value < bound) return value;
    }
}

}  // namespace pscf
