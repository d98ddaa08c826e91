#include "priorpol/random_stream.hpp"

#include <limits>

namespace priorpol {

std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view text) noexcept
{
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const char c : text) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

RandomStream::Engine RandomStream::substream(std::string_view purpose, std::string_view key) const noexcept
{
    auto state = splitmix64(seed_);
    state = splitmix64(state ^ fnv1a64(purpose));
    state = splitmix64(state ^ fnv1a64(key));
    return Engine{state};
}

RandomStream::Engine RandomStream::substream(std::string_view purpose, std::uint64_t index) const noexcept
{
    auto state = splitmix64(seed_);
    state = splitmix64(state ^ fnv1a64(purpose));
    state = splitmix64(state ^ splitmix64(index));
    return Engine{state};
}

double uniform_unit(RandomStream::Engine& engine) noexcept
{
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_index(RandomStream::Engine& engine, std::uint64_t bound) noexcept
{
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    const auto limit = max - (max % bound);
    std::uint64_t draw = engine();
    while (draw >= limit) {
        draw = engine();
    }
    return draw % bound;
}

}  // namespace priorpol
