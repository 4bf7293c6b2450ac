#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace bperiod {

/**
 * @brief Keyed random stream: xoshiro256** seeded through SplitMix64.
 *
 * A stream is identified by a (seed, index) pair. The key is
 * mix(seed) ^ mix(index ^ 0xD1B54A32D192ED03), where mix is the SplitMix64
 * finalizer; the four xoshiro state words are the first four outputs of a
 * SplitMix64 generator started at that key. Streams with different indices
 * are statistically independent for simulation purposes, so replication k of
 * a study can always use stream (seed, k) regardless of which thread runs it.
 *
 * Satisfies UniformRandomBitGenerator. Variate transforms (uniform, normal,
 * bernoulli) are defined here rather than taken from <random> so that draws are
 * identical across standard library implementations.
 */
class StreamRng {
public:
    using result_type = std::uint64_t;

    StreamRng(std::uint64_t seed, std::uint64_t index) noexcept {
        std::uint64_t key = mix(seed) ^ mix(index ^ 0xD1B54A32D192ED03ULL);
        for (auto& word : state_) {
            key += 0x9E3779B97F4A7C15ULL;
            word = mix(key);
        }
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// 1 with probability p. p <= 0 never succeeds, p >= 1 always does.
    int bernoulli(double p) noexcept { return uniform() < p ? 1 : 0; }

    /// Standard normal via Box-Muller; one uniform pair per draw, no cached second value.
    double normal() noexcept {
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::array<std::uint64_t, 4> state_{};
};

}  // namespace bperiod
