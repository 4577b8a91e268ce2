#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace uavlink {

/// SplitMix64 generator. One 64-bit word of state; the output stream is a
/// pure function of the seed, so runs are reproducible on any platform.
class Rng {
public:
    explicit constexpr Rng(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t state() const noexcept { return state_; }

    constexpr std::uint64_t next_u64() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 bits of precision.
    constexpr double next_uniform() noexcept { return uniform_from_bits(next_u64()); }

    static constexpr double uniform_from_bits(std::uint64_t bits) noexcept {
        return static_cast<double>(bits >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

/// Draws k distinct indices from [0, n). The candidate list starts in
/// ascending order and each draw removes by position, so the emission order
/// is fully determined by the generator.
std::vector<std::size_t> sample_without_replacement(Rng& rng, std::size_t n, std::size_t k);

} // namespace uavlink
