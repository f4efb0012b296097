#pragma once

#include <cstdint>

namespace rk {

// SplitMix64: tiny, portable, and identical across platforms, which keeps
// seeded sweeps byte-reproducible (libstdc++ distributions are not).
class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    // Derive an independent stream (per-trial seeds from a master seed).
    std::uint64_t fork() { return next_u64(); }

private:
    std::uint64_t state_;
};

}  // namespace rk
