#pragma once

#include <cstdint>

namespace trnplan {

// Counter-based random number primitives. Every draw is a pure function of
// the words mixed in, so trials can run in any order or on any number of
// threads and still produce identical values.

// Fixed 64-bit finalizer (splitmix64).
inline std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Hash of an ordered tuple of words; chaining through mix64 avoids the
// (a, b) / (b, a) collisions a plain xor would have.
inline std::uint64_t hash_words(std::uint64_t a, std::uint64_t b) noexcept {
    return mix64(mix64(a) + b);
}

inline std::uint64_t hash_words(std::uint64_t a, std::uint64_t b, std::uint64_t c) noexcept {
    return mix64(hash_words(a, b) + c);
}

// Maps a 64-bit word to a double in [0, 1) using the top 53 bits.
inline double unit_uniform(std::uint64_t word) noexcept {
    return static_cast<double>(word >> 11) * 0x1.0p-53;
}

// Small sequential generator for places that need a stream rather than
// counter addressing (e.g. shuffles inside the topology generator).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // Unbiased draw from [0, bound) by rejection.
    std::uint64_t next_below(std::uint64_t bound) noexcept {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % bound;
    }

    double next_unit() noexcept { return unit_uniform(next()); }

private:
    std::uint64_t state_;
};

}  // namespace trnplan
