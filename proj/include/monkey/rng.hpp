#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>

namespace monkey {

inline constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
}

/// Stream seed for (seed, stream_id); distinct ids give unrelated xoshiro states.
inline constexpr std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream_id) {
    return splitmix64_mix(splitmix64_mix(seed) ^ splitmix64_mix(stream_id + 0x9e3779b97f4a7c15ULL));
}

/// Stream id of the trial at (iteration, prefix_length), both 1-based.
inline constexpr std::uint64_t trial_stream_id(std::size_t iteration, std::size_t prefix_length) {
    return (static_cast<std::uint64_t>(iteration) << 32U) | static_cast<std::uint64_t>(prefix_length);
}

/**
 * Deterministic xoshiro256** stream keyed by (seed, stream_id).
 *
 * Satisfies UniformRandomBitGenerator. Symbol draws go through `bounded()`,
 * which is fully specified here, so sequences are identical on every platform.
 */
class RngStream {
public:
    using result_type = std::uint64_t;

    RngStream(std::uint64_t seed, std::uint64_t stream_id) : RngStream(derive_stream_seed(seed, stream_id), Tag{}) {}

    static RngStream from_stream_seed(std::uint64_t stream_seed) { return RngStream(stream_seed, Tag{}); }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    [[nodiscard]] std::uint64_t stream_seed() const { return stream_seed_; }

    result_type operator()() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17U;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform integer in [0, range) by Lemire's multiply-and-reject method.
    std::uint64_t bounded(std::uint64_t range) {
        std::uint64_t x = (*this)();
        __uint128_t m = static_cast<__uint128_t>(x) * range;
        auto low = static_cast<std::uint64_t>(m);
        if (low < range) {
            const std::uint64_t threshold = (0 - range) % range;
            while (low < threshold) {
                x = (*this)();
                m = static_cast<__uint128_t>(x) * range;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64U);
    }

private:
    struct Tag {};

    RngStream(std::uint64_t stream_seed, Tag) : stream_seed_(stream_seed) {
        std::uint64_t z = stream_seed;
        for (auto& word : state_) {
            z += 0x9e3779b97f4a7c15ULL;
            word = splitmix64_mix(z);
        }
    }

    static constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t stream_seed_;
    std::array<std::uint64_t, 4> state_{};
};

}  // namespace monkey
