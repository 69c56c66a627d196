#pragma once

#include <string>
#include <vector>

#include "sta/multivector.hpp"
#include "sta/omega_ring.hpp"
#include "sta/spinor_ops.hpp"

namespace sta {

// Bilinears of an even g, with g* = reverse(g) and g-dagger = g0 reverse(g) g0.
struct Observables {
  Multivector J;       // g g0 g*
  Multivector S;       // g g12 g* = -I g e3 g*
  Multivector K;       // g g3 g*
  OmegaRingElement R;  // g g* = R1 + I R2
  Multivector N;       // g g-dagger, a paravector
  double theta = 0.0;  // J o g0
  Multivector phi_a;   // J - theta g0

  double R1() const { return R.c1(); }
  double R2() const { return R.cI(); }
};

// Throws DomainError for an odd or complex input.
Observables observables(const Multivector& g);
Observables observables(const SpinorOperator& psi);

struct IdentityResult {
  std::string name;
  double residual = 0.0;  // relative to max(1, |lhs|, |rhs|)
  bool passed = false;
};

struct FierzReport {
  // The quadratic relations with the usual signs.
  std::vector<IdentityResult> stated;
  // JS and JSK with the sign that actually holds for every even g.
  std::vector<IdentityResult> corrected;
  bool j2_nonnegative = false;
  bool k2_nonpositive = false;

  bool all_stated_passed() const;
  // Stated relations with JS and JSK replaced by their corrected forms.
  bool consistent() const;
  double max_residual() const;
};

inline constexpr double kFierzTol = 1e-9;

FierzReport fierz_check(const Observables& obs, double tol = kFierzTol);

enum class Regularity { Regular, Singular };

struct RegularityReport {
  Regularity kind = Regularity::Regular;
  OmegaRingElement det;
  bool R1_zero = false;
  bool R2_zero = false;
  bool J_zero = false;
  bool S_zero = false;
  bool K_zero = false;
};

RegularityReport regularity(const SpinorOperator& psi, double tol = kFierzTol);
std::string to_string(Regularity r);

}  // namespace sta
