#pragma once

#include <cstdint>

namespace cg {

using u128 = unsigned __int128;

// splitmix64: tiny, portable, seed-stable. Every sampled estimate in this
// library takes an explicit seed; there is no ambient randomness anywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound > 0. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    u128 next128() { return (u128(next()) << 64) | next(); }

    u128 below128(u128 bound) {
        if (bound <= UINT64_MAX) return below(static_cast<std::uint64_t>(bound));
        const u128 limit = bound * (~u128(0) / bound);
        u128 x;
        do {
            x = next128();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::uint64_t state_;
};

} // namespace cg
