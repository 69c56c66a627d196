#pragma once

#include <cstdint>

#include "sta/multivector.hpp"
#include "sta/spinor_ops.hpp"

namespace sta {

// splitmix64
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi).
  double uniform(double lo = -1.0, double hi = 1.0) {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  Complex complex_uniform() {
    const double re = uniform();
    return {re, uniform()};
  }

 private:
  std::uint64_t state_;
};

// Components uniform in [-1, 1]^2.
DiracSpinor random_spinor(SplitMix64& rng);
// Rejection-sampled until |det[Omega]| >= min_det.
DiracSpinor random_regular_spinor(SplitMix64& rng, double min_det = 0.1);
// All 16 coefficients complex, uniform in [-1, 1]^2.
Multivector random_multivector(SplitMix64& rng);
// Real coefficients on the 8 even blades.
Multivector random_even_real(SplitMix64& rng);

}  // namespace sta
