#pragma once

// Deterministic seeded RNG (splitmix64) so randomized suites reproduce
// byte-identically across platforms and standard library versions.

#include <cstdint>

namespace helly {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    long below(long n) { return static_cast<long>(next() % static_cast<std::uint64_t>(n)); }
    // uniform in [lo, hi]
    long range(long lo, long hi) { return lo + below(hi - lo + 1); }
};

}  // namespace helly
