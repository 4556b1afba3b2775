#pragma once

// Portable seeded randomness. Distributions are computed here rather than by
// <random>'s distribution classes so streams agree across standard libraries.

#include <cstdint>
#include <random>

namespace kinkline {

std::uint64_t splitmix64(std::uint64_t& state);

/// Stream seed for (seed, a, b), e.g. (run seed, function index, trial index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Unit-rate exponential.
  double exponential();

 private:
  std::mt19937_64 engine_;
};

}  // namespace kinkline
