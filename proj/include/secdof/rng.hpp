#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace secdof {

// Reproducible randomness. Every stream in the library is keyed by a
// (master_seed, stream_index) pair: the index is pushed through the
// SplitMix64 finalizer and the result seeds a std::mt19937_64, whose output
// sequence is fixed by the C++ standard. Uniform and Gaussian variates are
// derived below with explicit arithmetic (no std::*_distribution, whose
// output is implementation-defined), so a given key produces the same
// numbers on every run and under any parallel schedule.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::mt19937_64 stream_rng(std::uint64_t master_seed,
                                  std::uint64_t stream) {
  return std::mt19937_64(
      splitmix64(master_seed + 0x9E3779B97F4A7C15ull * (stream + 1)));
}

// Uniform on (0, 1], 53-bit resolution. The open lower end keeps log() in
// the Box-Muller transform finite.
inline double uniform_open01(std::mt19937_64& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1p-53;
}

// Uniform on [0, 1).
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1p-53;
}

// Unbiased integer in [0, n) by rejection.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % n;
  }
}

// One Box-Muller pair of independent standard normals.
inline std::pair<double, double> normal_pair(std::mt19937_64& rng) {
  const double u1 = uniform_open01(rng);
  const double u2 = uniform01(rng);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

// Circularly-symmetric complex Gaussian with E|h|^2 = 1.
inline std::complex<double> complex_gaussian(std::mt19937_64& rng) {
  const auto [g1, g2] = normal_pair(rng);
  return {g1 * M_SQRT1_2, g2 * M_SQRT1_2};
}

}  // namespace secdof
