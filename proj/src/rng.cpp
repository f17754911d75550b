#include "rng.hpp"

#include <cmath>

#include "errors.hpp"

namespace cdkit {

namespace {

constexpr std::uint64_t kSplitmixGamma = 0x9E3779B97F4A7C15ull;

std::uint64_t splitmix64(std::uint64_t x) {
  std::uint64_t z = x + kSplitmixGamma;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : state_(splitmix64(seed)) {
  // xorshift64* has a single forbidden state.
  if (state_ == 0) state_ = kSplitmixGamma;
}

std::uint64_t Rng::next_u64() {
  std::uint64_t s = state_;
  s ^= s >> 12;
  s ^= s << 25;
  s ^= s >> 27;
  state_ = s;
  return s * 2685821657736338717ull;
}

double Rng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1;
  do {
    u1 = uniform01();
  } while (u1 <= 0.0);
  double u2 = uniform01();
  double r = std::sqrt(-2.0 * std::log(u1));
  double t = 2.0 * 3.14159265358979323846 * u2;
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

std::uint64_t Rng::uniform_below(std::uint64_t n) {
  if (n == 0) fail(Errc::invalid_argument, "uniform_below: n must be positive");
  // 2^64 mod n, computed without 128-bit arithmetic; 0 means n divides 2^64.
  std::uint64_t rem = (UINT64_MAX % n + 1) % n;
  std::uint64_t r = next_u64();
  if (rem != 0) {
    std::uint64_t limit = 0 - rem;  // wraps to 2^64 - rem
    while (r >= limit) r = next_u64();
  }
  return r % n;
}

}  // namespace cdkit
