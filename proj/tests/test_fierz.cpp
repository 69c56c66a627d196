#include <gtest/gtest.h>

#include <cmath>

#include "sta/errors.hpp"
#include "sta/fierz.hpp"
#include "sta/random.hpp"
#include "test_util.hpp"

using namespace sta;
using namespace sta::basis;

namespace {

const IdentityResult& find(const std::vector<IdentityResult>& v, const std::string& name) {
  for (const auto& r : v)
    if (r.name == name) return r;
  throw std::runtime_error("missing identity " + name);
}

bool grade_only(const Multivector& g, int k, double tol) {
  return distance(g, grade_project(g, k)) <= tol;
}

}  // namespace

TEST(Fierz, IdentitySpinor) {
  const Observables o = observables(one());
  EXPECT_MV_NEAR(o.J, gamma(0), 0.0);
  EXPECT_MV_NEAR(o.S, gamma(1, 2), 0.0);
  EXPECT_MV_NEAR(o.K, gamma(3), 0.0);
  EXPECT_RING_NEAR(o.R, OmegaRingElement(1.0), 0.0);
  EXPECT_NEAR(o.theta, 1.0, 0.0);
  EXPECT_MV_NEAR(o.phi_a, Multivector{}, 0.0);
  const FierzReport r = fierz_check(o);
  for (const auto& i : r.corrected) EXPECT_EQ(i.residual, 0.0) << i.name;
  EXPECT_TRUE(r.consistent());
  EXPECT_TRUE(r.j2_nonnegative);
  EXPECT_TRUE(r.k2_nonpositive);
}

TEST(Fierz, PublishedSignsOfJSAndJSKFailForTheIdentity) {
  // gamma0 gamma12 = -I gamma3 already at g = 1
  EXPECT_MV_NEAR(gamma(0) * gamma(1, 2), -(pseudoscalar() * gamma(3)), 0.0);
  const FierzReport r = fierz_check(observables(one()));
  EXPECT_FALSE(find(r.stated, "JS = I R^dag K").passed);
  EXPECT_FALSE(find(r.stated, "JSK = -I |R|^2 R^dag").passed);
  EXPECT_TRUE(find(r.corrected, "JS = -I R^dag K").passed);
  EXPECT_TRUE(find(r.corrected, "JSK = I |R|^2 R^dag").passed);
  for (const char* name : {"J^2 = R1^2 + R2^2", "S^2 = -R^2", "K^2 = -J^2", "K.J = 0",
                           "KJ = I S R^dag", "KJ = K^J"}) {
    EXPECT_TRUE(find(r.stated, name).passed) << name;
  }
  EXPECT_FALSE(r.all_stated_passed());
}

TEST(Fierz, UnitVectorSpinor) {
  const SpinorOperator g = spinor_operator(DiracSpinor(0, 0, 0, 1));
  EXPECT_MV_NEAR(g.psi(), e(1), 0.0);
  const Observables o = observables(g);
  EXPECT_MV_NEAR(o.J, gamma(0), 1e-15);
  EXPECT_RING_NEAR(o.R, OmegaRingElement(-1.0), 1e-15);
  EXPECT_MV_NEAR(o.S, e(1) * gamma(1, 2) * reverse(e(1)), 1e-15);
  EXPECT_MV_NEAR(o.S, gamma(1, 2), 1e-15);
  EXPECT_TRUE(fierz_check(o).consistent());
}

TEST(Fierz, RejectsOddAndComplex) {
  EXPECT_THROW(observables(gamma(1)), DomainError);
  EXPECT_THROW(observables(imag() * e(3)), DomainError);
}

TEST(Fierz, HermitianPartCurrent) {
  SplitMix64 rng(70);
  for (int k = 0; k < 50; ++k) {
    const std::array<double, 4> c{rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform()};
    const Multivector X = paravector(c);
    const Multivector x = paravector({0.0, c[1], c[2], c[3]});
    const double xx = c[1] * c[1] + c[2] * c[2] + c[3] * c[3];
    const Observables o = observables(X);
    EXPECT_MV_NEAR(o.J, ((c[0] * c[0] + xx) * one() + 2.0 * c[0] * x) * gamma(0), 1e-14);
  }
}

TEST(Fierz, CurrentComponentFormula) {
  SplitMix64 rng(71);
  for (int k = 0; k < 200; ++k) {
    const SpinorOperator g = spinor_operator(random_spinor(rng));
    const SubstitutionVars v = substitution_vars(g.source());
    const Multivector x = paravector({0.0, v.x[1], v.x[2], v.x[3]});
    const Multivector y = paravector({0.0, v.y[1], v.y[2], v.y[3]});
    double sq = v.x[0] * v.x[0] + v.y[0] * v.y[0];
    for (int j = 1; j < 4; ++j) sq += v.x[j] * v.x[j] + v.y[j] * v.y[j];
    const Multivector ggd = sq * one() + 2.0 * (v.x[0] * x + v.y[0] * y + cross(x, y));
    const Observables o = observables(g);
    EXPECT_MV_NEAR(o.N, ggd, 1e-13);
    EXPECT_MV_NEAR(o.J, ggd * gamma(0), 1e-13);
    // g-dagger g has the opposite cross term
    const Multivector gdg = pauli_dagger(g.psi()) * g.psi();
    EXPECT_MV_NEAR(gdg, sq * one() + 2.0 * (v.x[0] * x + v.y[0] * y - cross(x, y)), 1e-13);
  }
}

TEST(Fierz, StructuralInvariants) {
  SplitMix64 rng(72);
  for (int k = 0; k < 300; ++k) {
    const Multivector g = random_even_real(rng);
    const Observables o = observables(g);
    EXPECT_TRUE(grade_only(o.J, 1, 1e-13));
    EXPECT_TRUE(grade_only(o.K, 1, 1e-13));
    EXPECT_TRUE(grade_only(o.S, 2, 1e-13));
    EXPECT_MV_NEAR(reverse(o.K), o.K, 1e-13);
    EXPECT_MV_NEAR(reverse(o.S), -o.S, 1e-13);
    EXPECT_MV_NEAR(g * reverse(g), reverse(g) * g, 1e-13);
    EXPECT_MV_NEAR(o.R.to_multivector(), g * reverse(g), 1e-13);
    EXPECT_MV_NEAR(o.S, -(pseudoscalar() * g * e(3) * reverse(g)), 1e-13);
    EXPECT_MV_NEAR(o.J, o.theta * gamma(0) + o.phi_a, 1e-15);
  }
}

TEST(Fierz, CorrectedRelationsHoldOnRandomSpinors) {
  SplitMix64 rng(73);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const FierzReport r = fierz_check(observables(spinor_operator(random_regular_spinor(rng))));
    EXPECT_TRUE(r.consistent());
    EXPECT_TRUE(r.j2_nonnegative);
    EXPECT_TRUE(r.k2_nonpositive);
    EXPECT_FALSE(find(r.stated, "JS = I R^dag K").passed);
    worst = std::max(worst, r.max_residual());
  }
  // stated JS/JSK residuals are order one, the rest stay tiny
  EXPECT_GT(worst, 0.5);
}

TEST(Fierz, CorrectedResidualsAreTiny) {
  SplitMix64 rng(74);
  for (int k = 0; k < 1000; ++k) {
    const FierzReport r = fierz_check(observables(random_even_real(rng)));
    for (const auto& i : r.corrected) EXPECT_LT(i.residual, 1e-9) << i.name;
    for (const auto& i : r.stated) {
      if (i.name == "JS = I R^dag K" || i.name == "JSK = -I |R|^2 R^dag") continue;
      EXPECT_LT(i.residual, 1e-9) << i.name;
    }
  }
}

TEST(Fierz, SingularSpinor) {
  const SpinorOperator g = spinor_operator(DiracSpinor(0.8, 0, 0.8, 0));
  const Observables o = observables(g);
  EXPECT_RING_NEAR(o.R, OmegaRingElement(), 1e-15);
  EXPECT_MV_NEAR(o.J * o.J, Multivector{}, 1e-14);
  EXPECT_MV_NEAR(o.S * o.S, Multivector{}, 1e-14);
  EXPECT_FALSE(o.J.is_zero());
  EXPECT_TRUE(fierz_check(o).consistent());
  const RegularityReport rr = regularity(g);
  EXPECT_EQ(rr.kind, Regularity::Singular);
  EXPECT_TRUE(rr.R1_zero);
  EXPECT_TRUE(rr.R2_zero);
  EXPECT_FALSE(rr.J_zero);
  EXPECT_EQ(to_string(rr.kind), "SINGULAR");
}

TEST(Fierz, RegularityExamples) {
  EXPECT_EQ(regularity(spinor_operator(DiracSpinor(1, 0, 0, 0))).kind, Regularity::Regular);
  const RegularityReport r = regularity(spinor_operator(DiracSpinor(1, 0, Complex(0, 1), 0)));
  EXPECT_EQ(r.kind, Regularity::Regular);
  EXPECT_RING_NEAR(r.det, OmegaRingElement(0, 0, 2, 0), 1e-15);
  EXPECT_EQ(regularity(spinor_operator(DiracSpinor(1, 0, 1, 0))).kind, Regularity::Singular);
  EXPECT_EQ(to_string(Regularity::Regular), "REGULAR");
  const RegularityReport zero = regularity(spinor_operator(DiracSpinor{}));
  EXPECT_TRUE(zero.J_zero && zero.S_zero && zero.K_zero);
}

TEST(Fierz, CurrentIsFrameCovariant) {
  SplitMix64 rng(75);
  for (int k = 0; k < 100; ++k) {
    const Multivector g = random_even_real(rng);
    // rotor from a random real bivector
    Multivector B;
    for (unsigned m : {0x3u, 0x5u, 0x9u, 0x6u, 0xAu, 0xCu}) B += Multivector::blade(m, 0.7 * rng.uniform());
    const Multivector L = exp(B);
    EXPECT_MV_NEAR(L * reverse(L), one(), 1e-12);
    const Observables before = observables(g);
    const Observables after = observables(L * g);
    EXPECT_MV_NEAR(after.J, L * before.J * reverse(L), 1e-11);
  }
}
