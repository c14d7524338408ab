#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qlab {

using Rng = std::mt19937_64;

// Uniform variate in (0,1], 53-bit resolution. Hand-rolled so results are
// identical across standard library implementations.
inline double uniform01(Rng& g) {
    return static_cast<double>((g() >> 11) + 1) * 0x1.0p-53;
}

inline double exponential(Rng& g, double mean) {
    return -mean * std::log(uniform01(g));
}

// splitmix64 finalizer, used to derive independent substream seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    return mix_seed(mix_seed(a) ^ b);
}

}  // namespace qlab
