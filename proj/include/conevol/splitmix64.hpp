#pragma once

#include <cstdint>

namespace conevol {

// SplitMix64 (Steele/Lea/Flood; the java.util.SplittableRandom mixer). The
// whole output stream is a pure function of (seed, index):
//
//     value(seed, i) = mix64(seed + (i + 1) * GAMMA)
//
// which makes every sampled quantity reproducible across languages and
// independent of evaluation order, so chunked or parallel consumers reduce
// to the same answer for a given seed.
class SplitMix64 {
public:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static std::uint64_t mix64(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Counter-based access: the i-th value of the stream seeded by `seed`.
    static std::uint64_t at(std::uint64_t seed, std::uint64_t index) {
        return mix64(seed + (index + 1) * kGamma);
    }

    std::uint64_t next() {
        state_ += kGamma;
        return mix64(state_);
    }

    /// Uniform in [0, bound). Plain modulo: the bias is < bound/2^64, far
    /// below anything the statistical oracles can resolve.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    /// Uniform integer in [lo, hi], inclusive.
    std::int64_t next_in_range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    static double unit_at(std::uint64_t seed, std::uint64_t index) {
        return static_cast<double>(at(seed, index) >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

} // namespace conevol
