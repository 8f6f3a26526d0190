// Seedable randomness with a stable cross-platform contract.
//
// All randomness in the library flows through std::mt19937_64 (whose output
// sequence is fixed by the C++ standard) combined with the hand-rolled
// distribution helpers below. The standard library's distribution classes are
// implementation-defined, so they are deliberately not used anywhere: a seed
// produces bit-identical draws on every conforming platform and build.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace distbeam {

using RandomEngine = std::mt19937_64;

// splitmix64 finalizer; the basis for all seed derivation.
constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Deterministic child seed: the index-th output of a splitmix64 stream
// seeded with `seed`. Chain calls to derive from multi-part indices, e.g.
// mix_seed(mix_seed(master, run), coordinate).
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15ull);
}

constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return mix_seed(mix_seed(seed, a), b);
}

constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                                 std::uint64_t c) {
  return mix_seed(mix_seed(seed, a, b), c);
}

// Stream tags keep independently consumed sub-streams (initial point,
// perturbations, update masks, ...) from aliasing each other.
namespace stream {
inline constexpr std::uint64_t init = 0x01;
inline constexpr std::uint64_t perturbation = 0x02;
inline constexpr std::uint64_t mask = 0x03;
inline constexpr std::uint64_t run = 0x10;
inline constexpr std::uint64_t channel = 0x11;
inline constexpr std::uint64_t shift = 0x12;
inline constexpr std::uint64_t state = 0x13;
}  // namespace stream

// Uniform double in [0, 1) from the top 53 bits of one engine output.
inline double uniform01(RandomEngine& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform double in [lo, hi).
inline double uniform_in(RandomEngine& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

inline bool bernoulli(RandomEngine& rng, double p) { return uniform01(rng) < p; }

// Box-Muller pair of independent standard normals.
inline void gaussian_pair(RandomEngine& rng, double& z0, double& z1) {
  const double u1 = 1.0 - uniform01(rng);  // (0, 1]; keeps log() finite
  const double u2 = uniform01(rng);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * 3.14159265358979323846 * u2;
  z0 = r * std::cos(angle);
  z1 = r * std::sin(angle);
}

// FNV-1a, used for config fingerprints and content hashes.
constexpr std::uint64_t fnv1a64(std::string_view bytes,
                                std::uint64_t h = 0xCBF29CE484222325ull) {
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ull;
  }
  return h;
}

inline std::uint64_t fnv1a64_append(std::uint64_t h, double v) {
  std::uint64_t bits;
  static_assert(sizeof(bits) == sizeof(v));
  __builtin_memcpy(&bits, &v, sizeof(bits));
  for (int i = 0; i < 8; ++i) {
    h ^= (bits >> (8 * i)) & 0xFFu;
    h *= 0x100000001B3ull;
  }
  return h;
}

}  // namespace distbeam
