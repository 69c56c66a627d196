#include "sta/fierz.hpp"

#include <algorithm>
#include <cmath>

#include "sta/errors.hpp"
#include "sta/matrix_bridge.hpp"

namespace sta {

namespace {

IdentityResult compare(std::string name, const Multivector& lhs, const Multivector& rhs,
                       double tol) {
  const double scale = std::max({1.0, lhs.max_abs(), rhs.max_abs()});
  const double r = distance(lhs, rhs) / scale;
  return {std::move(name), r, r < tol};
}

}  // namespace

Observables observables(const Multivector& g) {
  if (!is_even(g)) throw DomainError("observables require an even multivector");
  if (!is_real(g)) throw DomainError("observables require real coefficients");
  using namespace basis;
  const Multivector gs = reverse(g);
  Observables o;
  o.J = g * gamma(0) * gs;
  o.S = g * gamma(1, 2) * gs;
  o.K = g * gamma(3) * gs;
  o.R = OmegaRingElement::from_multivector(g * gs, 1e-9 * std::max(1.0, g.max_abs() * g.max_abs()));
  o.N = g * pauli_dagger(g);
  o.theta = scalar_part(sym_product(o.J, gamma(0))).real();
  o.phi_a = o.J - o.theta * gamma(0);
  return o;
}

Observables observables(const SpinorOperator& psi) { return observables(psi.psi()); }

bool FierzReport::all_stated_passed() const {
  return std::all_of(stated.begin(), stated.end(), [](const auto& r) { return r.passed; });
}

bool FierzReport::consistent() const {
  for (const auto& r : stated) {
    if (!r.passed && r.name != "JS = I R^dag K" && r.name != "JSK = -I |R|^2 R^dag") return false;
  }
  return std::all_of(corrected.begin(), corrected.end(), [](const auto& r) { return r.passed; }) &&
         j2_nonnegative && k2_nonpositive;
}

double FierzReport::max_residual() const {
  double m = 0.0;
  for (const auto& r : stated) m = std::max(m, r.residual);
  for (const auto& r : corrected) m = std::max(m, r.residual);
  return m;
}

FierzReport fierz_check(const Observables& o, double tol) {
  using namespace basis;
  const Multivector I = pseudoscalar();
  const Multivector R = o.R.to_multivector();
  const Multivector R_dag = pauli_dagger(R);
  const double R_norm_sq = o.R1() * o.R1() + o.R2() * o.R2();
  const Multivector J2 = o.J * o.J;
  const Multivector K2 = o.K * o.K;
  const Multivector KJ = o.K * o.J;
  const Multivector JS = o.J * o.S;

  FierzReport rep;
  rep.stated.push_back(compare("J^2 = R1^2 + R2^2", J2, R_norm_sq * one(), tol));
  rep.stated.push_back(compare("S^2 = -R^2", o.S * o.S, -(R * R), tol));
  rep.stated.push_back(compare("K^2 = -J^2", K2, -J2, tol));
  rep.stated.push_back(compare("K.J = 0", sym_product(o.K, o.J), Multivector{}, tol));
  rep.stated.push_back(compare("KJ = I S R^dag", KJ, I * o.S * R_dag, tol));
  rep.stated.push_back(compare("KJ = K^J", KJ, outer_product(o.K, o.J), tol));
  rep.stated.push_back(compare("JS = I R^dag K", JS, I * R_dag * o.K, tol));
  rep.stated.push_back(compare("JSK = -I |R|^2 R^dag", JS * o.K, -R_norm_sq * I * R_dag, tol));

  rep.corrected.push_back(compare("JS = -I R^dag K", JS, -(I * R_dag * o.K), tol));
  rep.corrected.push_back(compare("JSK = I |R|^2 R^dag", JS * o.K, R_norm_sq * I * R_dag, tol));

  const double scale = std::max(1.0, R_norm_sq);
  rep.j2_nonnegative = scalar_part(J2).real() >= -tol * scale;
  rep.k2_nonpositive = scalar_part(K2).real() <= tol * scale;
  return rep;
}

RegularityReport regularity(const SpinorOperator& psi, double tol) {
  RegularityReport r;
  r.det = det_omega(psi);
  r.kind = std::abs(to_complex_I(r.det)) >= tol ? Regularity::Regular : Regularity::Singular;
  const Observables o = observables(psi);
  r.R1_zero = std::abs(o.R1()) < tol;
  r.R2_zero = std::abs(o.R2()) < tol;
  r.J_zero = o.J.max_abs() < tol;
  r.S_zero = o.S.max_abs() < tol;
  r.K_zero = o.K.max_abs() < tol;
  return r;
}

std::string to_string(Regularity r) { return r == Regularity::Regular ? "REGULAR" : "SINGULAR"; }

}  // namespace sta
