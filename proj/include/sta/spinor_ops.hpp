#pragma once

#include <array>
#include <optional>
#include <utility>

#include "sta/multivector.hpp"
#include "sta/omega_ring.hpp"

namespace sta {

// Four-component column spinor (phi1..phi4), stored zero-based.
struct DiracSpinor {
  std::array<Complex, 4> phi{};

  DiracSpinor() = default;
  DiracSpinor(Complex p1, Complex p2, Complex p3, Complex p4);

  Complex operator[](int k) const { return phi[k]; }
};

struct OmegaPair {
  OmegaRingElement omega0;  // phi1 + J phi3
  OmegaRingElement omega1;  // phi4 + J phi2
};

// Even spinor operator psi in Cl(1,3)^+ together with its cached Omega-pair
// and the column spinor it came from. Construct only through the factories,
// which keep the three views consistent.
class SpinorOperator {
 public:
  static SpinorOperator from_spinor(const DiracSpinor& d);
  // Accepts a real even multivector; the spinor is read off the first column
  // of its matrix. Throws DomainError otherwise.
  static SpinorOperator from_even(const Multivector& g, double tol = kDefaultTol);

  const Multivector& psi() const { return psi_; }
  const OmegaRingElement& omega0() const { return omega_.omega0; }
  const OmegaRingElement& omega1() const { return omega_.omega1; }
  const OmegaPair& omega_pair() const { return omega_; }
  const DiracSpinor& source() const { return source_; }

 private:
  SpinorOperator(Multivector psi, OmegaPair omega, DiracSpinor source)
      : psi_(std::move(psi)), omega_(omega), source_(source) {}

  Multivector psi_;
  OmegaPair omega_;
  DiracSpinor source_;
};

// S = (phi1 + phi2 e13 + phi3 e3 + phi4 e1) u_++, an element of the minimal
// left ideal generated by u_++.
Multivector g_spinor(const DiracSpinor& d);

// psi = alpha1 + e13 alpha2 + e3 alpha3 + e1 alpha4, alpha_k = phi_k with i -> g21.
SpinorOperator spinor_operator(const DiracSpinor& d);
// The same psi assembled from Omega = Omega0 + Omega1 e1 as
// (Omega + conj(Omega))/2 + (Omega - conj(Omega)) E3 / 2.
Multivector spinor_operator_from_omega(const OmegaPair& omega);

// Phi = psi gamma0.
Multivector odd_operator(const DiracSpinor& d);

struct ComplexOperators {
  Multivector z_plus;   // psi E3
  Multivector z_minus;  // psi gamma0 E3
};
ComplexOperators complex_operators(const DiracSpinor& d);

OmegaPair omega_pair(const DiracSpinor& d);
DiracSpinor spinor_from_omega_pair(const OmegaPair& omega);

// phi1 = x0 + i y3, phi2 = -y2 + i y1, phi3 = x3 + i y0, phi4 = x1 + i x2.
struct SubstitutionVars {
  std::array<double, 4> x{};
  std::array<double, 4> y{};
};
SubstitutionVars substitution_vars(const DiracSpinor& d);
DiracSpinor from_substitution(const SubstitutionVars& v);
// x0 + x1 e1 + x2 e2 + x3 e3 in G3.
Multivector paravector(const std::array<double, 4>& c);
// sum c_mu gamma_mu.
Multivector spacetime_vector(const std::array<double, 4>& c);

// psi = X + I Y with [X]_Omega Hermitian and [I Y]_Omega anti-Hermitian.
struct HermitianSplit {
  SpinorOperator x_part;
  SpinorOperator iy_part;
  Multivector X;
  Multivector Y;
};
HermitianSplit hermitian_split(const SpinorOperator& psi);

// M-hat = m1 cosh(phi) + I m2 sinh(phi) = exp(phi n) m1-hat with n = m1-hat x m2-hat.
struct BoostDecomposition {
  Multivector m1;
  Multivector m2;
  Multivector m1_hat;
  Multivector m2_hat;  // zero when m2 vanishes
  Multivector direction;  // m1-hat x m2-hat, zero when m2 vanishes
  double phi = 0.0;
  // tanh(2 phi): speed of the boost carrying m1-hat e3 m1-hat to a-hat.
  double velocity = 0.0;
  // |m2| / |m1| = tanh(phi).
  double m_ratio = 0.0;
};

// Point on the complex Riemann sphere determined by Lambda = Omega0^-1 Omega1.
struct SphereState {
  OmegaRingElement lambda;
  Multivector M;
  OmegaRingElement M_squared;  // 1 - Lambda conj(Lambda)
  Multivector M_hat;           // M / sqrt(M^2), principal branch
  Multivector a_hat;           // M-hat e3 M-hat
  // Lambda is a nonzero zero divisor (Lambda conj(Lambda) = 0): the limiting
  // state of the boosted family, which does not describe a spin state.
  bool limiting = false;
  // Present when M^2 is real and positive.
  std::optional<BoostDecomposition> boost;
};

// Throws ZeroDivisorError if Omega0 is singular and NullStateError if M^2 = 0.
SphereState sphere_state(const DiracSpinor& d);
SphereState sphere_state_from_lambda(const OmegaRingElement& lambda);

// T_E+ = (1 + Lambda e1) E3+, an idempotent.
Multivector idempotent_T(const SphereState& state);

// M x N = -I (M ^ N) for vectors of the embedded G3.
Multivector cross(const Multivector& a, const Multivector& b);

// Throws DomainError unless M^2 is real and positive, or if the parts are
// inconsistent with M-hat^2 = 1 beyond 1e-10.
BoostDecomposition boost_decompose(const SphereState& state);

// Canonical forms of the parity-invariant part S_E = S + S^# = Omega E3+.
struct CanonicalSE {
  OmegaRingElement exp_omega1;     // sqrt(det[Omega])
  OmegaRingElement exp_J_omega2;   // Omega0 / sqrt(Omega0 conj(Omega0))
  OmegaRingElement omega1;
  OmegaRingElement omega2;
  Multivector M_hat;  // branch chosen so that S_E = J e^omega M-hat E3+
  Multivector a_hat;
  OmegaRingElement z_e;
  Multivector b_e;  // M-hat e3 = cos z_e + I b_e sin z_e
  OmegaRingElement z_a;
  Multivector b_a;  // a-hat M-hat = cos z_a + I b_a sin z_a
  Multivector S_E;
  Multivector polar_form;  // J e^{omega1 + J omega2} M-hat E3+
  Multivector e3_form;     // e^{omega1} e^{I b_e z_e} e^{omega2 e3} E3+
  Multivector a_form;      // e^{omega1} e^{omega2 a-hat} e^{I b_a z_a} E3+
};

// Throws ZeroDivisorError when det[Omega] or Omega0 is singular.
CanonicalSE canonical_se(const DiracSpinor& d);

// --- boosted family M = exp(phi_x e3) x + e3 ----------------------------------

struct Vec2 {
  double x1 = 0.0;
  double x2 = 0.0;
};

inline double dot(Vec2 a, Vec2 b) { return a.x1 * b.x1 + a.x2 * b.x2; }
inline double norm_sq(Vec2 a) { return dot(a, a); }

// x cosh(phi_x) + e3 + I (e3 x x) sinh(phi_x).
Multivector family_M(Vec2 x, double phi_x);
// Realization Omega0 = 1, Omega1 = J exp(-J phi_x)(x1 + i x2).
DiracSpinor family_spinor(Vec2 x, double phi_x);
// Realization Omega0 = exp(J phi_x), Omega1 = J (x1 + i x2).
DiracSpinor family_spinor_alt(Vec2 x, double phi_x);
// sqrt(x^2 sinh^2 phi_x / (x^2 cosh^2 phi_x + 1)).
double family_velocity_formula(Vec2 x, double phi_x);

// M_perp = -exp(phi_x e3) x / x^2 + e3, with a-hat_perp = -a-hat. Throws
// DomainError if x = 0 or if state does not belong to the family (x, phi_x).
SphereState perp_state(const SphereState& state, Vec2 x, double phi_x);

}  // namespace sta
