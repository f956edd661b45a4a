#pragma once

#include <cstdint>
#include <random>

namespace jamming {

/// SplitMix64 finalizer; mixes a (seed, stream index) pair into a
/// well-separated 64-bit state.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Independent RNG stream keyed by (seed, index). Streams are reproducible
/// and may be consumed in any order, so sample-parallel code stays
/// deterministic.
inline std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(mix64(mix64(seed) ^ index));
}

}  // namespace jamming
