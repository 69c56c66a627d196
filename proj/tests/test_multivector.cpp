#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "sta/errors.hpp"
#include "sta/random.hpp"
#include "test_util.hpp"

using namespace sta;
using namespace sta::basis;

TEST(Multivector, GeometricProductMatchesOracle) {
  SplitMix64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const Multivector a = random_multivector(rng);
    const Multivector b = random_multivector(rng);
    const Multivector expect = testutil::from_coeffs(oracle::product(testutil::coeffs(a), testutil::coeffs(b)));
    EXPECT_MV_NEAR(a * b, expect, 1e-13);
  }
}

TEST(Multivector, AssociativeAndDistributive) {
  SplitMix64 rng(11);
  for (int k = 0; k < 500; ++k) {
    const Multivector a = random_multivector(rng);
    const Multivector b = random_multivector(rng);
    const Multivector c = random_multivector(rng);
    EXPECT_MV_NEAR((a * b) * c, a * (b * c), 1e-12);
    EXPECT_MV_NEAR(a * (b + c), a * b + a * c, 1e-12);
  }
}

TEST(Multivector, RestFrameAndPseudoscalar) {
  for (int k = 1; k <= 3; ++k) {
    EXPECT_MV_NEAR(e(k), gamma(k) * gamma(0), 0.0);
    EXPECT_MV_NEAR(e(k) * e(k), one(), 0.0);
    EXPECT_MV_NEAR(pseudoscalar() * gamma(k), -(gamma(k) * pseudoscalar()), 0.0);
  }
  EXPECT_MV_NEAR(pseudoscalar() * gamma(0), -(gamma(0) * pseudoscalar()), 0.0);
  EXPECT_MV_NEAR(e(1) * e(2) * e(3), pseudoscalar(), 0.0);
  EXPECT_MV_NEAR(pseudoscalar(), Multivector::blade(kPseudoscalarMask), 0.0);
  EXPECT_MV_NEAR(pseudoscalar() * pseudoscalar(), -one(), 0.0);
  EXPECT_MV_NEAR(J(), Complex(0, -1) * pseudoscalar(), 0.0);
  EXPECT_MV_NEAR(J() * J(), one(), 0.0);
  EXPECT_MV_NEAR(E3(), J() * e(3), 0.0);
  EXPECT_MV_NEAR(E3(), imag() * gamma(1, 2), 1e-15);
}

TEST(Multivector, ConjugationsAreAntiOrHomomorphisms) {
  SplitMix64 rng(3);
  for (int k = 0; k < 100; ++k) {
    const Multivector a = random_multivector(rng);
    const Multivector b = random_multivector(rng);
    EXPECT_MV_NEAR(reverse(a * b), reverse(b) * reverse(a), 1e-12);
    EXPECT_MV_NEAR(grade_involute(a * b), grade_involute(a) * grade_involute(b), 1e-12);
    EXPECT_MV_NEAR(complex_conjugate(a * b), complex_conjugate(a) * complex_conjugate(b), 1e-12);
    EXPECT_MV_NEAR(reverse(reverse(a)), a, 0.0);
  }
}

TEST(Multivector, GradePartsAndProductsDecompose) {
  SplitMix64 rng(5);
  const Multivector a = random_multivector(rng);
  const Multivector b = random_multivector(rng);
  Multivector sum;
  for (int k = 0; k <= 4; ++k) sum += grade_project(a, k);
  EXPECT_MV_NEAR(sum, a, 0.0);
  EXPECT_MV_NEAR(even_part(a) + odd_part(a), a, 0.0);
  EXPECT_MV_NEAR(sym_product(a, b) + antisym_product(a, b), a * b, 1e-13);
  // vectors: a.b + a^b = ab
  const Multivector u = grade_project(a, 1);
  const Multivector v = grade_project(b, 1);
  EXPECT_MV_NEAR(inner_product(u, v) + outer_product(u, v), u * v, 1e-13);
  EXPECT_MV_NEAR(inner_product(2.0 * one(), v), 2.0 * v, 0.0);
}

TEST(Multivector, ExpMatchesSeriesOracle) {
  SplitMix64 rng(9);
  for (int k = 0; k < 50; ++k) {
    const Multivector g = 0.2 * random_multivector(rng);
    EXPECT_MV_NEAR(exp(g), testutil::from_coeffs(oracle::exp_series(testutil::coeffs(g))), 1e-13);
  }
}

TEST(Multivector, ExpRotorAndBoostClosedForms) {
  const double t = 1.3;
  EXPECT_MV_NEAR(exp(t * e(1, 2)), std::cos(t) * one() + std::sin(t) * e(1, 2), 1e-13);
  EXPECT_MV_NEAR(exp(t * e(3)), std::cosh(t) * one() + std::sinh(t) * e(3), 1e-12);
  SplitMix64 rng(13);
  const Multivector g = 3.0 * random_multivector(rng);
  EXPECT_MV_NEAR(exp(g) * exp(-g), one(), 1e-8);
}

TEST(Multivector, ExpOverflowIsReported) {
  EXPECT_THROW(exp(800.0 * e(3)), OverflowError);
}

TEST(Multivector, PowerAndInverse) {
  SplitMix64 rng(17);
  const Multivector g = random_multivector(rng);
  EXPECT_MV_NEAR(power(g, 3), g * g * g, 1e-12);
  EXPECT_MV_NEAR(power(g, 0), one(), 0.0);
  EXPECT_MV_NEAR(power(g, -2) * g * g, one(), 1e-9);
  EXPECT_MV_NEAR(inverse(g) * g, one(), 1e-9);
}

TEST(Multivector, NonFiniteCoefficientsRejected) {
  EXPECT_THROW(checked_complex(std::numeric_limits<double>::quiet_NaN()), DomainError);
  EXPECT_THROW(checked_complex(0.0, std::numeric_limits<double>::infinity()), DomainError);
}

TEST(Multivector, PauliConjugationsInRestFrame) {
  for (int k = 1; k <= 3; ++k) {
    EXPECT_MV_NEAR(pauli_minus(e(k)), -e(k), 0.0);
    EXPECT_MV_NEAR(pauli_dagger(e(k)), e(k), 0.0);
    EXPECT_MV_NEAR(pauli_star(e(k)), -e(k), 0.0);
  }
  EXPECT_MV_NEAR(pauli_dagger(pseudoscalar()), -pseudoscalar(), 0.0);
  EXPECT_MV_NEAR(pauli_minus(pseudoscalar()), -pseudoscalar(), 0.0);
  EXPECT_MV_NEAR(pauli_dagger(imag()), imag(), 0.0);
}
