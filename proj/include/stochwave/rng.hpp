#pragma once

#include <cmath>
#include <cstdint>

namespace stochwave {

// Counter-based generator: every draw is a pure function of its key
// (seed, path_index, level, step), so paths can be produced in any order,
// from any thread, and bridge refinements of the same path reuse the keys
// of the levels they came from.

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct RngKey {
  std::uint64_t seed = 0;
  std::uint64_t path_index = 0;
  std::uint64_t level = 0;
  std::uint64_t step = 0;
};

inline std::uint64_t key_state(const RngKey& k) {
  std::uint64_t h = mix64(k.seed);
  h = mix64(h ^ (0x517cc1b727220a95ULL + k.path_index));
  h = mix64(h ^ (0x6eed0e9da4d94a4fULL + k.level));
  h = mix64(h ^ (0x2545f4914f6cdd1dULL + k.step));
  return h;
}

/// Uniform in (0,1]; `lane` selects independent draws under one key.
inline double uniform_at(const RngKey& k, std::uint64_t lane = 0) {
  const std::uint64_t h = mix64(key_state(k) + lane);
  return static_cast<double>((h >> 11) + 1) * 0x1.0p-53;
}

/// Standard normal via Box-Muller on two keyed uniforms.
inline double normal_at(const RngKey& k) {
  const double u1 = uniform_at(k, 1);
  const double u2 = uniform_at(k, 2);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

}  // namespace stochwave
