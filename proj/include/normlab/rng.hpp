#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "normlab/scalar.hpp"

namespace normlab {

// Deterministic random source. All draws are derived from raw mt19937_64
// output with fixed arithmetic, so a seed reproduces the exact same stream
// on any platform (std::uniform_real_distribution makes no such promise).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53-bit resolution.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool coin() { return (engine_() & 1u) != 0; }

  double normal() {
    // Box-Muller; one value per call keeps the stream simple to reason about.
    double u1 = unit();
    double u2 = unit();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  Scalar scalar(ScalarField field, double lo = -1.0, double hi = 1.0) {
    double re = uniform(lo, hi);
    if (field == ScalarField::Real) return Scalar(re, 0.0);
    return Scalar(re, uniform(lo, hi));
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Stable mixing of a base seed with a case/trial index.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace normlab
