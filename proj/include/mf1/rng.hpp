#pragma once

#include <cstdint>

namespace mf1 {

// SplitMix64 (Steele, Lea & Flood 2014; fixed-increment variant by Vigna).
// 64-bit state, 64-bit output, identical sequences on every platform.
// Trial k of a run draws from SplitMix64(derive(master_seed, k)), so the
// per-trial streams are fixed no matter how trials are scheduled.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Sub-seed for an independent stream: the SplitMix64 output function
    /// applied twice to (master ^ mixed stream id), so nearby ids land far
    /// apart in the state space.
    static std::uint64_t derive(std::uint64_t master, std::uint64_t stream) {
        return mix(master ^ mix(stream + 0x9E3779B97F4A7C15ULL));
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace mf1
