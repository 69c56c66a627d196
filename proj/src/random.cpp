#include "sta/random.hpp"

#include "sta/measurement.hpp"

namespace sta {

DiracSpinor random_spinor(SplitMix64& rng) {
  const Complex p1 = rng.complex_uniform();
  const Complex p2 = rng.complex_uniform();
  const Complex p3 = rng.complex_uniform();
  const Complex p4 = rng.complex_uniform();
  return {p1, p2, p3, p4};
}

DiracSpinor random_regular_spinor(SplitMix64& rng, double min_det) {
  for (;;) {
    DiracSpinor d = random_spinor(rng);
    if (std::abs(to_complex_I(det_omega(omega_pair(d)))) >= min_det) return d;
  }
}

Multivector random_multivector(SplitMix64& rng) {
  Multivector::Coeffs c{};
  for (auto& v : c) v = rng.complex_uniform();
  return Multivector(c);
}

Multivector random_even_real(SplitMix64& rng) {
  Multivector::Coeffs c{};
  for (unsigned m = 0; m < kBladeCount; ++m) {
    if (BladeIndex(m).grade() % 2 == 0) c[m] = rng.uniform();
  }
  return Multivector(c);
}

}  // namespace sta
