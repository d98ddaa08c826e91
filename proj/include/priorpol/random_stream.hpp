#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace priorpol {

// Seeded source of independent per-key substreams.
//
// A substream depends only on (seed, purpose, key), never on how many other
// substreams were drawn before it, so evaluation order and threading cannot
// change any random draw.
class RandomStream {
public:
    using Engine = std::mt19937_64;

    explicit RandomStream(std::uint64_t seed = 42) noexcept : seed_(seed) {}

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

    [[nodiscard]] Engine substream(std::string_view purpose, std::string_view key) const noexcept;
    [[nodiscard]] Engine substream(std::string_view purpose, std::uint64_t index) const noexcept;

private:
    std::uint64_t seed_;
};

// Portable draws: std:: distributions are implementation-defined, these are not.

// Uniform on [0, 1) with 53 random bits.
[[nodiscard]] double uniform_unit(RandomStream::Engine& engine) noexcept;

// Uniform on {0, ..., bound - 1}, unbiased; bound must be > 0.
[[nodiscard]] std::uint64_t uniform_index(RandomStream::Engine& engine, std::uint64_t bound) noexcept;

[[nodiscard]] std::uint64_t splitmix64(std::uint64_t x) noexcept;
[[nodiscard]] std::uint64_t fnv1a64(std::string_view text) noexcept;

}  // namespace priorpol
