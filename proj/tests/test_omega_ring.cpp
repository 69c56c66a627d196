#include <gtest/gtest.h>

#include "sta/errors.hpp"
#include "sta/random.hpp"
#include "test_util.hpp"

using namespace sta;

namespace {

OmegaRingElement random_ring(SplitMix64& rng) {
  const double a = rng.uniform(), b = rng.uniform(), c = rng.uniform(), d = rng.uniform();
  return {a, b, c, d};
}

}  // namespace

TEST(OmegaRing, SplitRoundTrip) {
  SplitMix64 rng(1);
  for (int k = 0; k < 100; ++k) {
    const OmegaRingElement a = random_ring(rng);
    EXPECT_RING_NEAR(OmegaRingElement::from_split(a.plus(), a.minus()), a, 1e-15);
  }
}

TEST(OmegaRing, UnitsActOnProjections) {
  const OmegaRingElement I = OmegaRingElement::unit_I();
  EXPECT_EQ(I.plus(), Complex(0, 1));
  EXPECT_EQ(I.minus(), Complex(0, -1));
  const OmegaRingElement J = OmegaRingElement::unit_J();
  EXPECT_EQ(J.plus(), Complex(1, 0));
  EXPECT_EQ(J.minus(), Complex(-1, 0));
  EXPECT_RING_NEAR(J * J, OmegaRingElement(1.0), 0.0);
  EXPECT_RING_NEAR(I * I, OmegaRingElement(-1.0), 0.0);
  EXPECT_MV_NEAR(J.to_multivector(), basis::J(), 0.0);
}

TEST(OmegaRing, ProductAgreesWithGeometricProduct) {
  SplitMix64 rng(2);
  for (int k = 0; k < 100; ++k) {
    const OmegaRingElement a = random_ring(rng);
    const OmegaRingElement b = random_ring(rng);
    EXPECT_MV_NEAR((a * b).to_multivector(), a.to_multivector() * b.to_multivector(), 1e-14);
    EXPECT_RING_NEAR(OmegaRingElement::from_multivector(a.to_multivector()), a, 0.0);
  }
}

TEST(OmegaRing, Conjugations) {
  // i -> -i sends J to -J; I -> -I sends J to -J as well
  const OmegaRingElement J = OmegaRingElement::unit_J();
  EXPECT_RING_NEAR(conj_i(J), -J, 0.0);
  EXPECT_RING_NEAR(conj_I(J), -J, 0.0);
  EXPECT_RING_NEAR(conj_i(OmegaRingElement::unit_I()), OmegaRingElement::unit_I(), 0.0);
  SplitMix64 rng(3);
  const OmegaRingElement a = random_ring(rng);
  EXPECT_MV_NEAR(conj_i(a).to_multivector(), complex_conjugate(a.to_multivector()), 1e-15);
}

TEST(OmegaRing, ZeroDivisors) {
  const OmegaRingElement p = 0.5 * (OmegaRingElement(1.0) + OmegaRingElement::unit_J());
  EXPECT_FALSE(p.is_invertible());
  EXPECT_RING_NEAR(p * p, p, 0.0);
  EXPECT_THROW(inverse(p), ZeroDivisorError);
  EXPECT_THROW(sqrt(p), ZeroDivisorError);
  EXPECT_THROW(log(p), ZeroDivisorError);
  EXPECT_THROW(OmegaRingElement(1.0) / p, ZeroDivisorError);
}

TEST(OmegaRing, ElementaryFunctions) {
  SplitMix64 rng(4);
  for (int k = 0; k < 50; ++k) {
    const OmegaRingElement a = random_ring(rng);
    if (!a.is_invertible(1e-3)) continue;
    EXPECT_RING_NEAR(inverse(a) * a, OmegaRingElement(1.0), 1e-10);
    const OmegaRingElement s = sqrt(a);
    EXPECT_RING_NEAR(s * s, a, 1e-12);
    EXPECT_RING_NEAR(exp(log(a)), a, 1e-12);
    EXPECT_MV_NEAR(exp(a).to_multivector(), exp(a.to_multivector()), 1e-12);
  }
  const OmegaRingElement c(0.3, 0.1, -0.2, 0.05);
  const OmegaRingElement z = acos(c);
  EXPECT_RING_NEAR(OmegaRingElement::from_split(std::cos(z.plus()), std::cos(z.minus())), c, 1e-13);
}

TEST(OmegaRing, FromMultivectorRejectsOtherGrades) {
  EXPECT_THROW(OmegaRingElement::from_multivector(basis::e(1)), DomainError);
  EXPECT_TRUE(in_span_1_I(OmegaRingElement(2.0, 0.0, 3.0)));
  EXPECT_FALSE(in_span_1_I(OmegaRingElement::unit_J()));
  EXPECT_EQ(to_complex_I(OmegaRingElement(2.0, 0.0, 3.0)), Complex(2, 3));
}
