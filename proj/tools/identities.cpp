#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <cmath>
#include <ostream>

#include "commands.hpp"
#include "sta/errors.hpp"
#include "sta/fierz.hpp"
#include "sta/matrix_bridge.hpp"
#include "sta/measurement.hpp"
#include "sta/random.hpp"

namespace sta::cli {

namespace {

double rel(const Multivector& a, const Multivector& b) {
  return distance(a, b) / std::max({1.0, a.max_abs(), b.max_abs()});
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

class Tracker {
 public:
  explicit Tracker(std::vector<FamilyResidual>& out, std::string name) : out_(out) {
    out_.push_back({std::move(name), 0.0});
  }
  void add(double r) {
    // NaN counts as a failure
    if (std::isnan(r)) r = INFINITY;
    out_.back().max_residual = std::max(out_.back().max_residual, r);
  }

 private:
  std::vector<FamilyResidual>& out_;
};

void algebra_axioms(SplitMix64& rng, long n, std::vector<FamilyResidual>& out) {
  Tracker t(out, "algebra axioms");
  using namespace basis;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const double eta = mu == nu ? metric(mu) : 0.0;
      t.add(rel(sym_product(gamma(mu), gamma(nu)), eta * one()));
    }
    t.add(rel(pseudoscalar() * gamma(mu), -(gamma(mu) * pseudoscalar())));
  }
  for (long k = 0; k < n; ++k) {
    const Multivector a = random_multivector(rng);
    const Multivector b = random_multivector(rng);
    const Multivector c = random_multivector(rng);
    t.add(rel((a * b) * c, a * (b * c)));
    t.add(rel(a * (b + c), a * b + a * c));
    t.add(rel((a + b) * c, a * c + b * c));
  }
}

void spectral(SplitMix64& rng, long n, std::vector<FamilyResidual>& out) {
  Tracker t(out, "spectral basis round trip");
  for (long k = 0; k < n; ++k) {
    const Multivector a = random_multivector(rng);
    const Multivector b = random_multivector(rng);
    const MatrixRep ma = to_matrix(a);
    const MatrixRep mb = to_matrix(b);
    t.add(rel(from_matrix(ma), a));
    const MatrixRep diff = to_matrix(a * b) - ma * mb;
    t.add(diff.max_abs() / std::max(1.0, (ma * mb).max_abs()));
  }
}

void idempotent_structure(std::vector<FamilyResidual>& out) {
  Tracker t(out, "idempotent partition and shifts");
  using namespace basis;
  const IdempotentSet& u = idempotents();
  const std::array<const Multivector*, 4> set{&u.u_pp, &u.u_pm, &u.u_mp, &u.u_mm};
  t.add(rel(u.u_pp + u.u_pm + u.u_mp + u.u_mm, one()));
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      t.add(rel(*set[a] * *set[b], a == b ? *set[a] : Multivector{}));
    }
  }
  t.add(rel(e(1, 3) * u.u_pp, u.u_pm * e(1, 3)));
  t.add(rel(e(3) * u.u_pp, u.u_mp * e(3)));
  t.add(rel(e(1) * u.u_pp, u.u_mm * e(1)));
}

void determinants(SplitMix64& rng, long n, std::vector<FamilyResidual>& out) {
  Tracker t(out, "determinant laws");
  for (long k = 0; k < n; ++k) {
    const DiracSpinor d = random_spinor(rng);
    const SpinorOperator psi = spinor_operator(d);
    const Complex det_psi = det4(to_matrix(psi.psi()));
    const double scale = std::max(1.0, std::abs(det_psi));

    double r = 0.0;
    for (int j = 0; j < 4; ++j) r += (j < 2 ? 1.0 : -1.0) * std::norm(d[j]);
    const double a = (std::conj(d[0]) * d[2] + std::conj(d[1]) * d[3]).imag();
    t.add(std::abs(det_psi - (r * r + 4.0 * a * a)) / scale);

    const SubstitutionVars v = substitution_vars(d);
    const Multivector x = spacetime_vector(v.x);
    const Multivector y = spacetime_vector(v.y);
    const double x2 = scalar_part(x * x).real();
    const double y2 = scalar_part(y * y).real();
    const double xy = scalar_part(sym_product(x, y)).real();
    t.add(std::abs(det_psi - ((x2 - y2) * (x2 - y2) + 4.0 * xy * xy)) / scale);

    const OmegaRingElement det_o = det_omega(psi);
    t.add(std::abs(det_psi - std::norm(to_complex_I(det_o))) / scale);
    t.add((det_o - OmegaRingElement(x2 - y2, 0.0, 2.0 * xy)).max_abs() / std::max(1.0, det_o.max_abs()));

    t.add(std::abs(det_psi - det4(to_matrix(odd_operator(d)))) / scale);
    const ComplexOperators z = complex_operators(d);
    t.add(std::abs(det_psi - det4(to_matrix(z.z_plus))) / scale);
    t.add(std::abs(det_psi - det4(to_matrix(z.z_minus))) / scale);
  }
}

void inner_products(SplitMix64& rng, long n, std::vector<FamilyResidual>& out) {
  Tracker t(out, "inner product forms");
  for (long k = 0; k < n; ++k) {
    const DiracSpinor a = random_spinor(rng);
    const DiracSpinor b = random_spinor(rng);
    const Complex c = dirac_components(a, b);
    t.add(rel(c, braket(make_ket(a), make_ket(b))));
    t.add(rel(c, dirac_vector_form(a, b)));
    const EKet ea = make_eket(a);
    const EKet eb = make_eket(b);
    t.add(rel(c, dirac_from_e(ea, eb)));
    t.add(rel(e_inner(ea, eb), e_inner_components(a, b)));
  }
}

void triple_idempotent(SplitMix64& rng, long n, std::vector<FamilyResidual>& out) {
  Tracker t(out, "triple idempotent lemma");
  using namespace basis;
  for (long k = 0; k < n; ++k) {
    const SphereState sa = sphere_state(random_regular_spinor(rng));
    const SphereState sb = sphere_state(random_regular_spinor(rng));
    const Multivector A = 0.5 * (one() + J() * sa.a_hat);
    const Multivector B = 0.5 * (one() + J() * sb.a_hat);
    t.add(rel(A * B * A, 0.5 * A * (one() + sym_product(sa.a_hat, sb.a_hat))));
  }
}

void probabilities(SplitMix64& rng, long n, std::vector<FamilyResidual>& out) {
  Tracker t(out, "probability formulas");
  for (long k = 0; k < n; ++k) {
    const SphereState sa = sphere_state(random_regular_spinor(rng));
    const SphereState sb = sphere_state(random_regular_spinor(rng));
    const TransitionProbability p = transition_probability(sa, sb);
    t.add(p.residual / std::max(1.0, p.direct.max_abs()));

    const Vec2 x{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    const Vec2 y{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    const double phi = rng.uniform(-2.0, 2.0);
    const TransitionProbability f = transition_probability(family_state(x, phi), family_state(y, phi));
    const FamilyProbability closed = family_probability(x, phi, y, phi);
    const DiracSpinor na = normalize_physical(family_spinor(x, phi));
    const DiracSpinor nb = normalize_physical(family_spinor(y, phi));
    const double brute = std::norm(dirac_components(nb, na));
    t.add(f.residual);
    t.add(std::abs(f.projective_path.c1() - closed.value));
    t.add(std::abs(f.projective_path.cI() - closed.value_I));
    t.add(std::abs(f.projective_path.c1() - brute));
    t.add(f.is_probability ? 0.0 : 1.0);
  }
}

void fierz(SplitMix64& rng, long n, std::vector<FamilyResidual>& out) {
  Tracker t(out, "fierz identities");
  for (long k = 0; k < n; ++k) {
    const FierzReport rep = fierz_check(observables(random_even_real(rng)));
    for (const auto& r : rep.stated) {
      if (r.name != "JS = I R^dag K" && r.name != "JSK = -I |R|^2 R^dag") t.add(r.residual);
    }
    for (const auto& r : rep.corrected) t.add(r.residual);
    t.add(rep.j2_nonnegative && rep.k2_nonpositive ? 0.0 : 1.0);
  }
}

}  // namespace

std::vector<FamilyResidual> run_identity_suite(std::uint64_t seed, long n) {
  SplitMix64 rng(seed);
  std::vector<FamilyResidual> out;
  algebra_axioms(rng, n, out);
  spectral(rng, n, out);
  idempotent_structure(out);
  determinants(rng, n, out);
  inner_products(rng, n, out);
  triple_idempotent(rng, n, out);
  probabilities(rng, n, out);
  fierz(rng, n, out);
  return out;
}

int cmd_identities(std::uint64_t seed, long n, double tol, std::ostream& out, std::ostream& err) {
  if (n < 1) {
    fmt::print(err, "error: --n must be at least 1\n");
    return kUsage;
  }
  std::vector<FamilyResidual> families;
  try {
    families = run_identity_suite(seed, n);
  } catch (const Error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kEvalError;
  }
  fmt::print(out, "seed={} n={} tol={:g}\n", seed, n, tol);
  const FamilyResidual* first_failure = nullptr;
  for (const auto& f : families) {
    const bool ok = f.max_residual < tol;
    if (!ok && first_failure == nullptr) first_failure = &f;
    fmt::print(out, "  {:<32} max residual {:.3e}  {}\n", f.name, f.max_residual, ok ? "PASS" : "FAIL");
  }
  fmt::print(out, "  note: JS and JSK are checked with sign -I R^dag K and +I |R|^2 R^dag\n");
  if (first_failure != nullptr) {
    fmt::print(out, "FAILED: {}\n", first_failure->name);
    return kIdentityFailure;
  }
  fmt::print(out, "all identities passed\n");
  return kOk;
}

}  // namespace sta::cli
