#pragma once

#include <cstdint>

namespace satjac {

/// SplitMix64: the output at step i is mix(seed + (i+1)*GAMMA), so the stream
/// is a pure function of (seed, i) and reproduces bit-for-bit everywhere.
class SplitMix64 {
public:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += kGamma;
        return mix(state_);
    }

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// Deterministic sub-seed derivation; label 0,1,2,... picks independent streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t label) {
    return SplitMix64::mix(seed ^ ((label + 1) * SplitMix64::kGamma));
}

/// Sub-seed used for the attempt-th reseed after a genericity failure.
inline std::uint64_t retry_seed(std::uint64_t seed, unsigned attempt) {
    return derive_seed(seed, 0x52455452ull + attempt);  // disjoint label space
}

}  // namespace satjac
