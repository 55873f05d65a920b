#pragma once

#include <cstdint>
#include <random>

namespace cgdl {

/// Independent, reproducible stream for task `index` under a global `seed`.
/// Work split across threads draws from per-task streams, so results do not
/// depend on how tasks are scheduled.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return std::mt19937_64(mix(mix(seed) ^ index));
}

/// Uniform integer in [0, bound). Rejection sampling keeps the result
/// identical across standard library implementations.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1)
    return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

} // namespace cgdl
