#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace caps {

// SplitMix64 finalizer. Bijective on 64-bit integers.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Seed for the stream of sample `index` under `master_seed`. Distinct indices
// give distinct seeds (mix64 is a bijection applied to distinct inputs).
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) {
    return mix64(master_seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

using Stream = std::mt19937_64;

inline Stream make_stream(std::uint64_t master_seed, std::uint64_t index) {
    return Stream(derive_seed(master_seed, index));
}

// Unbiased draw from [0, n). Lemire's nearly-divisionless method; the slow
// path is taken with probability < n / 2^64.
inline std::uint64_t bounded_uniform(Stream& g, std::uint64_t n) {
    std::uint64_t x = g();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
        const std::uint64_t t = (0 - n) % n;
        while (lo < t) {
            x = g();
            m = static_cast<__uint128_t>(x) * n;
            lo = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

// Fisher-Yates with bounded_uniform draws; deterministic given the stream.
template <typename T>
void shuffle_stream(std::vector<T>& v, Stream& g) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(bounded_uniform(g, i));
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace caps
