#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace dynclust {

using Rng = std::mt19937_64;

/// Uniform index in [0, n). n must be positive.
inline std::size_t uniform_index(Rng &rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

/// Fisher-Yates shuffle.
template <typename T>
void shuffle_in_place(std::span<T> items, Rng &rng) {
    for (std::size_t i = items.size(); i > 1; --i)
        std::swap(items[i - 1], items[uniform_index(rng, i)]);
}

/// splitmix64 step; derives independent sub-stream seeds from one master seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace dynclust
