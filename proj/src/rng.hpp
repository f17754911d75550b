#pragma once

#include <cstdint>

namespace cdkit {

// Deterministic pseudo-random generator used everywhere the library needs
// randomness (synthetic data, random coordinate picks).  The exact update
// rules below are part of the reproducibility contract documented in the
// README, so this class must not be swapped for std::mt19937 or similar.
//
// State update (xorshift64*):
//   s ^= s >> 12;  s ^= s << 25;  s ^= s >> 27;
//   output = s * 2685821657736338717
//
// Seeding runs the raw seed through one splitmix64 step so that small seeds
// (including 0) give well-mixed nonzero states.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53 random bits: (next_u64() >> 11) * 2^-53.
  double uniform01();

  // Standard normal via Box-Muller.  Normals are produced in pairs; the
  // sine half is cached and returned by the next call.  u1 is redrawn
  // until nonzero so log(u1) stays finite.
  double normal();

  // Uniform integer in [0, n).  Rejection sampling keeps it exactly
  // unbiased: draws above the largest multiple of n are discarded.
  std::uint64_t uniform_below(std::uint64_t n);

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace cdkit
