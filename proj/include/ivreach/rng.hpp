#pragma once

#include <cstdint>

namespace ivreach {

// Counter-based uniform generator. Every draw is a pure function of
// (seed, stream, index), so sampling is reproducible independent of
// evaluation order, thread count, and scheduling.

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Uniform in [0, 1) with 53 random bits.
inline double u01(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t z = mix64(mix64(mix64(seed) ^ (stream * 0xd1342543de82ef95ull))
                            ^ (index * 0xaf251af3b0f025b5ull));
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

// Uniform in [lo, hi]; degenerate bounds return lo exactly.
inline double uniform_in(double lo, double hi, double u) {
    if (lo == hi) return lo;
    return lo + u * (hi - lo);
}

} // namespace ivreach
