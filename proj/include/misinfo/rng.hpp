#pragma once

#include <cstdint>
#include <random>

namespace misinfo {

// Seeds are derived with SplitMix64 so each (seed, stream) pair gets an
// independent mt19937_64 state. Sampling avoids std distributions, whose
// output differs across standard library implementations.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t sub = 0) {
  return splitmix64(splitmix64(seed ^ splitmix64(stream)) ^ splitmix64(sub + 0x632be59bd9b4e019ULL));
}

using Rng = std::mt19937_64;

inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Uniform integer in [lo, hi] by rejection sampling.
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());  // full 64-bit range
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

}  // namespace misinfo
