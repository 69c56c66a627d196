#include "sta/spinor_ops.hpp"

#include <cmath>

#include "sta/errors.hpp"
#include "sta/matrix_bridge.hpp"

namespace sta {

DiracSpinor::DiracSpinor(Complex p1, Complex p2, Complex p3, Complex p4)
    : phi{checked_complex(p1.real(), p1.imag()), checked_complex(p2.real(), p2.imag()),
          checked_complex(p3.real(), p3.imag()), checked_complex(p4.real(), p4.imag())} {}

namespace {

// phi with i -> gamma21.
Multivector alpha(Complex phi) {
  return Multivector::scalar(phi.real()) + phi.imag() * basis::gamma(2, 1);
}

Multivector omega_multivector(const OmegaPair& omega) {
  return omega.omega0.to_multivector() + omega.omega1 * basis::e(1);
}

OmegaRingElement sin(const OmegaRingElement& a) {
  return OmegaRingElement::from_split(std::sin(a.plus()), std::sin(a.minus()));
}

}  // namespace

Multivector g_spinor(const DiracSpinor& d) {
  using basis::e;
  const Multivector column = d[0] * basis::one() + d[1] * e(1, 3) + d[2] * e(3) + d[3] * e(1);
  return column * idempotents().u_pp;
}

SpinorOperator SpinorOperator::from_spinor(const DiracSpinor& d) {
  using basis::e;
  Multivector psi = alpha(d[0]) + e(1, 3) * alpha(d[1]) + e(3) * alpha(d[2]) + e(1) * alpha(d[3]);
  return SpinorOperator(std::move(psi), sta::omega_pair(d), d);
}

SpinorOperator SpinorOperator::from_even(const Multivector& g, double tol) {
  if (!is_even(g, tol)) throw DomainError("spinor operator requires an even multivector");
  if (!is_real(g, tol)) throw DomainError("spinor operator requires real coefficients");
  const MatrixRep m = to_matrix(g);
  const DiracSpinor d(m(0, 0), m(1, 0), m(2, 0), m(3, 0));
  SpinorOperator op = from_spinor(d);
  if (!approx_equal(op.psi(), g, tol * std::max(1.0, g.max_abs()))) {
    throw DomainError("multivector is not a spinor operator");
  }
  return op;
}

SpinorOperator spinor_operator(const DiracSpinor& d) { return SpinorOperator::from_spinor(d); }

Multivector spinor_operator_from_omega(const OmegaPair& omega) {
  const Multivector w = omega_multivector(omega);
  const Multivector wbar = complex_conjugate(w);
  return 0.5 * (w + wbar) + 0.5 * (w - wbar) * basis::E3();
}

Multivector odd_operator(const DiracSpinor& d) {
  return spinor_operator(d).psi() * basis::gamma(0);
}

ComplexOperators complex_operators(const DiracSpinor& d) {
  const Multivector psi = spinor_operator(d).psi();
  return {psi * basis::E3(), psi * basis::gamma(0) * basis::E3()};
}

OmegaPair omega_pair(const DiracSpinor& d) {
  return {OmegaRingElement::from_split(d[0] + d[2], d[0] - d[2]),
          OmegaRingElement::from_split(d[3] + d[1], d[3] - d[1])};
}

DiracSpinor spinor_from_omega_pair(const OmegaPair& omega) {
  const Complex p0 = omega.omega0.plus(), m0 = omega.omega0.minus();
  const Complex p1 = omega.omega1.plus(), m1 = omega.omega1.minus();
  return {0.5 * (p0 + m0), 0.5 * (p1 - m1), 0.5 * (p0 - m0), 0.5 * (p1 + m1)};
}

SubstitutionVars substitution_vars(const DiracSpinor& d) {
  SubstitutionVars v;
  v.x[0] = d[0].real();
  v.y[3] = d[0].imag();
  v.y[2] = -d[1].real();
  v.y[1] = d[1].imag();
  v.x[3] = d[2].real();
  v.y[0] = d[2].imag();
  v.x[1] = d[3].real();
  v.x[2] = d[3].imag();
  return v;
}

DiracSpinor from_substitution(const SubstitutionVars& v) {
  return {Complex{v.x[0], v.y[3]}, Complex{-v.y[2], v.y[1]}, Complex{v.x[3], v.y[0]},
          Complex{v.x[1], v.x[2]}};
}

Multivector paravector(const std::array<double, 4>& c) {
  Multivector out = Multivector::scalar(c[0]);
  for (int k = 1; k <= 3; ++k) out += c[k] * basis::e(k);
  return out;
}

Multivector spacetime_vector(const std::array<double, 4>& c) {
  Multivector out;
  for (int mu = 0; mu <= 3; ++mu) out += c[mu] * basis::gamma(mu);
  return out;
}

HermitianSplit hermitian_split(const SpinorOperator& psi) {
  const SubstitutionVars v = substitution_vars(psi.source());
  const SubstitutionVars xs{v.x, {}};
  const SubstitutionVars ys{{}, v.y};
  return {spinor_operator(from_substitution(xs)), spinor_operator(from_substitution(ys)),
          paravector(v.x), paravector(v.y)};
}

SphereState sphere_state(const DiracSpinor& d) {
  const OmegaPair omega = omega_pair(d);
  if (!omega.omega0.is_invertible()) {
    throw ZeroDivisorError("zero divisor: Omega0 is not invertible");
  }
  return sphere_state_from_lambda(inverse(omega.omega0) * omega.omega1);
}

SphereState sphere_state_from_lambda(const OmegaRingElement& lambda) {
  using namespace basis;
  const OmegaRingElement lambda_bar = conj_i(lambda);
  const OmegaRingElement half_diff = 0.5 * (lambda - lambda_bar);
  const OmegaRingElement half_sum = 0.5 * (lambda + lambda_bar);

  SphereState s;
  s.lambda = lambda;
  s.M = half_diff * J() * e(1) - half_sum * pseudoscalar() * e(2) + e(3);
  s.M_squared = OmegaRingElement(1.0) - lambda * lambda_bar;
  if (!s.M_squared.is_invertible()) {
    throw NullStateError("null state: M^2 = 0, M-hat is undefined");
  }
  s.M_hat = s.M * inverse(sqrt(s.M_squared));
  s.a_hat = s.M_hat * e(3) * s.M_hat;
  s.limiting = lambda.max_abs() > kZeroDivisorThreshold &&
               (lambda * lambda_bar).max_abs() < kZeroDivisorThreshold;

  const OmegaRingElement& m2 = s.M_squared;
  if (std::abs(m2.ci()) <= kDefaultTol && std::abs(m2.cI()) <= kDefaultTol &&
      std::abs(m2.ciI()) <= kDefaultTol && m2.c1() > 0.0) {
    s.boost = boost_decompose(s);
  }
  return s;
}

Multivector idempotent_T(const SphereState& state) {
  return (basis::one() + state.lambda * basis::e(1)) * idempotents().E3_plus;
}

Multivector cross(const Multivector& a, const Multivector& b) {
  return -1.0 * basis::pseudoscalar() * antisym_product(a, b);
}

BoostDecomposition boost_decompose(const SphereState& state) {
  constexpr double kTol = 1e-10;
  const OmegaRingElement& m2sq = state.M_squared;
  const double scale = std::max(1.0, m2sq.max_abs());
  if (std::abs(m2sq.ci()) > kTol * scale || std::abs(m2sq.cI()) > kTol * scale ||
      std::abs(m2sq.ciI()) > kTol * scale || m2sq.c1() <= 0.0) {
    throw DomainError("boost decomposition requires real positive M^2");
  }
  const Multivector m_hat = state.M * (1.0 / std::sqrt(m2sq.c1()));

  BoostDecomposition b;
  for (int k = 1; k <= 3; ++k) {
    const Multivector ek = basis::e(k);
    const Multivector c = sym_product(m_hat, ek);
    if (std::abs(c[0].imag()) > kTol || std::abs(c[kPseudoscalarMask].imag()) > kTol) {
      throw DomainError("M-hat is not a real complex vector");
    }
    b.m1 += c[0].real() * ek;
    b.m2 += c[kPseudoscalarMask].real() * ek;
  }
  const double m1_sq = scalar_part(b.m1 * b.m1).real();
  const double m2_sq = scalar_part(b.m2 * b.m2).real();
  const double m1m2 = scalar_part(sym_product(b.m1, b.m2)).real();
  if (std::abs(m1_sq - m2_sq - 1.0) > kTol * std::max(1.0, m1_sq) ||
      std::abs(m1m2) > kTol * std::max(1.0, m1_sq)) {
    throw DomainError("degenerate boost decomposition: |m1|^2 - |m2|^2 != 1 or m1 . m2 != 0");
  }
  const double m1_norm = std::sqrt(m1_sq);
  const double m2_norm = std::sqrt(m2_sq);
  b.m1_hat = b.m1 * (1.0 / m1_norm);
  if (m2_norm > 1e-14) {
    b.m2_hat = b.m2 * (1.0 / m2_norm);
    b.direction = cross(b.m1_hat, b.m2_hat);
  }
  b.phi = std::asinh(m2_norm);
  b.velocity = std::tanh(2.0 * b.phi);
  b.m_ratio = m2_norm / m1_norm;
  return b;
}

CanonicalSE canonical_se(const DiracSpinor& d) {
  using namespace basis;
  const OmegaPair omega = omega_pair(d);
  const OmegaRingElement det = omega.omega0 * conj_i(omega.omega0) - conj_i(omega.omega1) * omega.omega1;
  if (!det.is_invertible()) throw ZeroDivisorError("zero divisor: det[Omega] is singular");
  if (!omega.omega0.is_invertible()) throw ZeroDivisorError("zero divisor: Omega0 is not invertible");

  const Multivector& ep = idempotents().E3_plus;
  const SphereState state = sphere_state(d);
  const OmegaRingElement norm0 = sqrt(omega.omega0 * conj_i(omega.omega0));

  CanonicalSE c;
  c.exp_omega1 = sqrt(det);
  c.exp_J_omega2 = omega.omega0 / norm0;
  c.omega1 = log(c.exp_omega1);
  c.omega2 = OmegaRingElement::unit_J() * log(c.exp_J_omega2);
  c.M_hat = state.M * (norm0 / c.exp_omega1);
  c.a_hat = c.M_hat * e(3) * c.M_hat;
  c.S_E = omega_multivector(omega) * ep;
  c.polar_form = J() * (c.exp_omega1 * c.exp_J_omega2) * c.M_hat * ep;

  const OmegaRingElement unit_I = OmegaRingElement::unit_I();
  auto angle_axis = [&](const Multivector& a, const Multivector& b, OmegaRingElement& z,
                        Multivector& axis) {
    z = acos(OmegaRingElement::from_multivector(sym_product(a, b), 1e-9));
    const OmegaRingElement s = unit_I * sin(z);
    axis = s.is_invertible(1e-9) ? antisym_product(a, b) * inverse(s) : Multivector{};
  };
  angle_axis(c.M_hat, e(3), c.z_e, c.b_e);
  angle_axis(c.a_hat, c.M_hat, c.z_a, c.b_a);

  const Multivector rot_e = exp(unit_I * c.z_e * c.b_e);
  const Multivector rot_a = exp(unit_I * c.z_a * c.b_a);
  c.e3_form = c.exp_omega1 * rot_e * exp(c.omega2 * e(3)) * ep;
  c.a_form = c.exp_omega1 * exp(c.omega2 * c.a_hat) * rot_a * ep;
  return c;
}

Multivector family_M(Vec2 x, double phi_x) {
  using basis::e;
  const Multivector xv = x.x1 * e(1) + x.x2 * e(2);
  const Multivector boost = std::cosh(phi_x) * basis::one() + std::sinh(phi_x) * e(3);
  return boost * xv + e(3);
}

DiracSpinor family_spinor(Vec2 x, double phi_x) {
  const OmegaRingElement J = OmegaRingElement::unit_J();
  const OmegaRingElement z = OmegaRingElement::from_complex({x.x1, x.x2});
  return spinor_from_omega_pair({OmegaRingElement(1.0), J * exp(-phi_x * J) * z});
}

DiracSpinor family_spinor_alt(Vec2 x, double phi_x) {
  const OmegaRingElement J = OmegaRingElement::unit_J();
  const OmegaRingElement z = OmegaRingElement::from_complex({x.x1, x.x2});
  return spinor_from_omega_pair({exp(phi_x * J), J * z});
}

double family_velocity_formula(Vec2 x, double phi_x) {
  const double x2 = norm_sq(x);
  const double sh = std::sinh(phi_x), ch = std::cosh(phi_x);
  return std::sqrt(x2 * sh * sh / (x2 * ch * ch + 1.0));
}

SphereState perp_state(const SphereState& state, Vec2 x, double phi_x) {
  const double x2 = norm_sq(x);
  if (x2 == 0.0) throw DomainError("perp_state: zero vector x");
  const Multivector expected = family_M(x, phi_x);
  if (!approx_equal(state.M, expected, 1e-9 * std::max(1.0, expected.max_abs()))) {
    throw DomainError("perp_state: state is not the family member (x, phi_x)");
  }
  return sphere_state(family_spinor({-x.x1 / x2, -x.x2 / x2}, phi_x));
}

}  // namespace sta
