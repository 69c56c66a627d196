#include "sta/measurement.hpp"

#include <algorithm>
#include <cmath>

#include "sta/errors.hpp"
#include "sta/matrix_bridge.hpp"

namespace sta {

namespace {

Multivector omega_multivector(const OmegaPair& omega) {
  return omega.omega0.to_multivector() + omega.omega1 * basis::e(1);
}

double ring_distance(const OmegaRingElement& a, const OmegaRingElement& b) {
  return (a - b).max_abs();
}

}  // namespace

Ket make_ket(const DiracSpinor& d) { return make_ket(omega_pair(d)); }

Ket make_ket(const OmegaPair& omega) {
  return {2.0 * omega_multivector(omega) * idempotents().u_pp, omega};
}

EKet make_eket(const DiracSpinor& d) { return make_eket(omega_pair(d)); }

EKet make_eket(const OmegaPair& omega) {
  return {std::sqrt(2.0) * omega_multivector(omega) * idempotents().E3_plus, omega};
}

Multivector bra(const Ket& k) { return reverse(complex_conjugate(k.ideal_element)); }
Multivector bra(const EKet& k) { return reverse(complex_conjugate(k.ideal_element)); }

Complex braket(const Ket& phi, const Ket& omega) {
  return scalar_part(bra(phi) * omega.ideal_element);
}

Complex dirac_components(const DiracSpinor& phi, const DiracSpinor& psi) {
  return std::conj(phi[0]) * psi[0] + std::conj(phi[1]) * psi[1] -
         std::conj(phi[2]) * psi[2] - std::conj(phi[3]) * psi[3];
}

Complex dirac_vector_form(const DiracSpinor& phi, const DiracSpinor& psi) {
  const SubstitutionVars a = substitution_vars(phi);
  const SubstitutionVars b = substitution_vars(psi);
  const auto& r = a.x;
  const auto& s = a.y;
  const auto& x = b.x;
  const auto& y = b.y;
  const double re = (r[0] * x[0] - r[1] * x[1] - r[2] * x[2] - r[3] * x[3]) -
                    (s[0] * y[0] - s[1] * y[1] - s[2] * y[2] - s[3] * y[3]);
  const double im = r[0] * y[3] - r[3] * y[0] + s[0] * x[3] - s[3] * x[0] + r[2] * x[1] -
                    r[1] * x[2] + s[1] * y[2] - s[2] * y[1];
  return {re, im};
}

Multivector e_inner(const EKet& phi, const EKet& omega) {
  return bra(phi) * omega.ideal_element;
}

Multivector e_inner_polar(const DiracSpinor& phi, const DiracSpinor& omega) {
  const CanonicalSE a = canonical_se(phi);
  const CanonicalSE b = canonical_se(omega);
  const OmegaRingElement phase =
      conj_i(a.exp_omega1 * a.exp_J_omega2) * (b.exp_omega1 * b.exp_J_omega2);
  const Multivector core =
      sym_product(a.M_hat, b.M_hat) +
      basis::J() * sym_product(antisym_product(a.M_hat, b.M_hat), basis::e(3));
  return 2.0 * phase * idempotents().E3_plus * core;
}

Multivector e_inner_components(const DiracSpinor& phi, const DiracSpinor& psi) {
  const Complex d = dirac_components(phi, psi);
  const Complex c = Complex{0.0, 1.0} * (std::conj(phi[2]) * psi[0] - std::conj(phi[0]) * psi[2] +
                                         std::conj(phi[3]) * psi[1] - std::conj(phi[1]) * psi[3]);
  return 2.0 * idempotents().E3_plus * (d * basis::one() + c * basis::pseudoscalar());
}

Multivector e_outer(const EKet& omega) { return omega.ideal_element * bra(omega); }

Multivector e_outer_polar(const DiracSpinor& omega) {
  const CanonicalSE c = canonical_se(omega);
  return 2.0 * (c.exp_omega1 * c.exp_omega1) * c.M_hat * idempotents().E3_plus * c.M_hat;
}

Complex complex_projection(const Multivector& g) {
  const PauliConjugates c = pauli_conjugations(g);
  return scalar_part(0.25 * (g + c.minus + c.dagger + c.star));
}

Complex dirac_from_e(const EKet& phi, const EKet& omega) {
  return complex_projection(e_inner(phi, omega));
}

bool special_condition(const DiracSpinor& phi, const DiracSpinor& omega) {
  Multivector m_phi, m_omega;
  try {
    m_phi = canonical_se(phi).M_hat;
    m_omega = canonical_se(omega).M_hat;
  } catch (const Error&) {
    return false;
  }
  const Multivector s = sym_product(m_phi, m_omega);
  const Multivector t = sym_product(antisym_product(m_phi, m_omega), basis::e(3));
  const double tol = kDefaultTol * std::max({1.0, s.max_abs(), t.max_abs()});
  return approx_equal(s, pauli_dagger(s), tol) && approx_equal(t, -pauli_dagger(t), tol);
}

Complex dirac_from_e_simplified(const EKet& phi, const EKet& omega) {
  const Multivector p = e_inner(phi, omega);
  return scalar_part(0.5 * (p + pauli_dagger(p)));
}

Complex dirac_inner(const DiracSpinor& phi, const DiracSpinor& omega) {
  const EKet a = make_eket(phi);
  const EKet b = make_eket(omega);
  return special_condition(phi, omega) ? dirac_from_e_simplified(a, b) : dirac_from_e(a, b);
}

OmegaRingElement gauge_factor(const GaugeParams& g) {
  return exp(g.theta * OmegaRingElement::unit_I() + g.phi * OmegaRingElement::unit_J());
}

EKet gauge_transform(const EKet& k, const GaugeParams& g) {
  const OmegaRingElement f = gauge_factor(g);
  return make_eket(OmegaPair{f * k.omega.omega0, f * k.omega.omega1});
}

OmegaRingElement det_omega(const OmegaPair& omega) {
  return omega.omega0 * conj_i(omega.omega0) - conj_i(omega.omega1) * omega.omega1;
}

std::pair<EKet, GaugeParams> gauge_normalize(const EKet& k) {
  const OmegaRingElement det = det_omega(k.omega);
  if (!det.is_invertible()) throw ZeroDivisorError("zero divisor: det[Omega] is singular");
  if (!k.omega.omega0.is_invertible()) {
    throw ZeroDivisorError("zero divisor: Omega0 is not invertible");
  }
  // det is in span{1, I}, so its plus component a + ib encodes a + bI.
  GaugeParams g;
  g.theta = -0.5 * std::arg(det.plus());
  g.phi = -0.5 * std::log(std::abs(k.omega.omega0.plus()) / std::abs(k.omega.omega0.minus()));
  return {gauge_transform(k, g), g};
}

EKet normalize_physical(const EKet& k) {
  EKet n = gauge_normalize(k).first;
  const double scale = 1.0 / std::sqrt(det_omega(n.omega).c1());
  return make_eket(OmegaPair{scale * n.omega.omega0, scale * n.omega.omega1});
}

DiracSpinor normalize_physical(const DiracSpinor& d) {
  return spinor_from_omega_pair(normalize_physical(make_eket(d)).omega);
}

bool is_probability_value(double value, double value_I, double tol) {
  return std::abs(value_I) <= tol && value >= -tol && value <= 1.0 + tol;
}

TransitionProbability transition_probability(const SphereState& a, const SphereState& b) {
  using namespace basis;
  TransitionProbability p;

  const Multivector A = 0.5 * (one() + J() * a.a_hat);
  const Multivector B = 0.5 * (one() + J() * b.a_hat);
  const Multivector T = A * B * A;
  p.idempotent_path = OmegaRingElement::from_multivector(
      2.0 * (grade_project(T, 0) + grade_project(T, 4)), 1e-9);

  const Multivector diff = a.M - b.M;
  const OmegaRingElement diff_sq = OmegaRingElement::from_multivector(diff * diff, 1e-9);
  p.projective_path = OmegaRingElement(1.0) - diff_sq / (a.M_squared * b.M_squared);

  p.direct = 0.5 * (OmegaRingElement(1.0) +
                    OmegaRingElement::from_multivector(sym_product(a.a_hat, b.a_hat), 1e-9));

  p.residual = std::max({ring_distance(p.idempotent_path, p.projective_path),
                         ring_distance(p.idempotent_path, p.direct),
                         ring_distance(p.projective_path, p.direct)});
  const OmegaRingElement& v = p.projective_path;
  p.is_probability = std::abs(v.ci()) <= kProbabilityTol && std::abs(v.ciI()) <= kProbabilityTol &&
                     is_probability_value(v.c1(), v.cI());
  return p;
}

SphereState family_state(Vec2 x, double phi_x) { return sphere_state(family_spinor(x, phi_x)); }

FamilyProbability family_probability(Vec2 x, double phi_x, Vec2 y, double phi_y) {
  const double x2 = norm_sq(x);
  const double y2 = norm_sq(y);
  const double dphi = phi_x - phi_y;
  const double den = (1.0 + x2) * (1.0 + y2);
  const double wedge = x.x1 * y.x2 - x.x2 * y.x1;  // e3^x^y = wedge I
  FamilyProbability f;
  f.value = 1.0 - (x2 + y2 - 2.0 * std::cosh(dphi) * dot(x, y)) / den;
  f.value_I = 2.0 * std::sinh(dphi) * wedge / den;
  f.is_probability = is_probability_value(f.value, f.value_I);
  return f;
}

}  // namespace sta
