#include "sta/matrix_bridge.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "sta/errors.hpp"
#include "sta/spinor_ops.hpp"

namespace sta {

MatrixRep MatrixRep::identity() {
  MatrixRep m;
  for (int k = 0; k < 4; ++k) m(k, k) = 1.0;
  return m;
}

double MatrixRep::max_abs() const {
  double out = 0.0;
  for (const auto& row : entries)
    for (const auto& v : row) out = std::max(out, std::abs(v));
  return out;
}

MatrixRep operator*(const MatrixRep& a, const MatrixRep& b) {
  MatrixRep out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      Complex sum{};
      for (int k = 0; k < 4; ++k) sum += a(r, k) * b(k, c);
      out(r, c) = sum;
    }
  return out;
}

MatrixRep operator+(const MatrixRep& a, const MatrixRep& b) {
  MatrixRep out = a;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) += b(r, c);
  return out;
}

MatrixRep operator-(const MatrixRep& a, const MatrixRep& b) {
  MatrixRep out = a;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) -= b(r, c);
  return out;
}

bool approx_equal(const MatrixRep& a, const MatrixRep& b, double tol) {
  return (a - b).max_abs() <= tol;
}

namespace {

IdempotentSet make_idempotents() {
  using namespace basis;
  const Multivector i = imag();
  const Multivector g0 = gamma(0);
  const Multivector g12 = gamma(1, 2);
  const Multivector one = basis::one();
  IdempotentSet s;
  s.u_pp = 0.25 * (one + g0) * (one + i * g12);
  s.u_pm = 0.25 * (one + g0) * (one - i * g12);
  s.u_mp = 0.25 * (one - g0) * (one + i * g12);
  s.u_mm = 0.25 * (one - g0) * (one - i * g12);
  s.gamma0_plus = 0.5 * (one + g0);
  s.gamma0_minus = 0.5 * (one - g0);
  s.E3_plus = 0.5 * (one + E3());
  s.E3_minus = 0.5 * (one - E3());
  return s;
}

struct SpectralTables {
  std::array<Multivector, 4> rows;
  std::array<Multivector, 4> cols;
  SpectralBasis units;
  // Matrix image of every basis blade; to_matrix is linear.
  std::array<MatrixRep, kBladeCount> blade_images;
};

SpectralTables make_tables() {
  using basis::e;
  SpectralTables t;
  const Multivector e13 = e(1, 3);
  t.rows = {basis::one(), e13, e(3), e(1)};
  t.cols = {basis::one(), -e13, e(3), e(1)};
  const Multivector& u = idempotents().u_pp;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t.units[a][b] = t.rows[a] * u * t.cols[b];

  // u_++ carries scalar part 1/4, so lambda u_++ has scalar part lambda / 4.
  for (unsigned mask = 0; mask < kBladeCount; ++mask) {
    const Multivector g = Multivector::blade(mask);
    MatrixRep m;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) m(a, b) = 4.0 * scalar_part(u * t.cols[a] * g * t.rows[b] * u);
    t.blade_images[mask] = m;
  }
  return t;
}

const SpectralTables& tables() {
  static const SpectralTables t = make_tables();
  return t;
}

// In-place LU with partial pivoting. Returns the permutation sign, or 0 when
// a pivot falls below the threshold.
int lu_decompose(MatrixRep& a, std::array<int, 4>& perm) {
  constexpr double kPivotThreshold = 1e-14;
  int sign = 1;
  for (int k = 0; k < 4; ++k) perm[k] = k;
  for (int k = 0; k < 4; ++k) {
    int p = k;
    for (int r = k + 1; r < 4; ++r)
      if (std::abs(a(r, k)) > std::abs(a(p, k))) p = r;
    if (std::abs(a(p, k)) < kPivotThreshold) return 0;
    if (p != k) {
      std::swap(a.entries[p], a.entries[k]);
      std::swap(perm[p], perm[k]);
      sign = -sign;
    }
    for (int r = k + 1; r < 4; ++r) {
      a(r, k) /= a(k, k);
      for (int c = k + 1; c < 4; ++c) a(r, c) -= a(r, k) * a(k, c);
    }
  }
  return sign;
}

}  // namespace

const IdempotentSet& idempotents() {
  static const IdempotentSet s = make_idempotents();
  return s;
}

const std::array<Multivector, 4>& spectral_row_factors() { return tables().rows; }
const std::array<Multivector, 4>& spectral_column_factors() { return tables().cols; }
const SpectralBasis& spectral_basis() { return tables().units; }

MatrixRep to_matrix(const Multivector& g) {
  const auto& images = tables().blade_images;
  MatrixRep out;
  for (unsigned mask = 0; mask < kBladeCount; ++mask) {
    const Complex c = g[mask];
    if (c == Complex{}) continue;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) out(a, b) += c * images[mask](a, b);
  }
  return out;
}

Multivector from_matrix(const MatrixRep& m) {
  const auto& units = spectral_basis();
  Multivector g;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (m(a, b) != Complex{}) g += m(a, b) * units[a][b];
  return g;
}

Complex det4(const MatrixRep& m) {
  MatrixRep lu = m;
  std::array<int, 4> perm{};
  const int sign = lu_decompose(lu, perm);
  if (sign == 0) return 0.0;
  Complex det = static_cast<double>(sign);
  for (int k = 0; k < 4; ++k) det *= lu(k, k);
  return det;
}

MatrixRep inverse4(const MatrixRep& m) {
  constexpr double kSingular = 1e-12;
  if (std::abs(det4(m)) < kSingular) {
    throw ZeroDivisorError("zero divisor: matrix representation is singular");
  }
  MatrixRep lu = m;
  std::array<int, 4> perm{};
  lu_decompose(lu, perm);
  MatrixRep inv;
  for (int col = 0; col < 4; ++col) {
    std::array<Complex, 4> x{};
    for (int r = 0; r < 4; ++r) x[r] = perm[r] == col ? 1.0 : 0.0;
    for (int r = 0; r < 4; ++r)
      for (int k = 0; k < r; ++k) x[r] -= lu(r, k) * x[k];
    for (int r = 3; r >= 0; --r) {
      for (int k = r + 1; k < 4; ++k) x[r] -= lu(r, k) * x[k];
      x[r] /= lu(r, r);
    }
    for (int r = 0; r < 4; ++r) inv(r, col) = x[r];
  }
  return inv;
}

Multivector inverse(const Multivector& g) { return from_matrix(inverse4(to_matrix(g))); }

OmegaRingElement OmegaMatrix::entry(int r, int c) const {
  if (r == 0) return c == 0 ? omega0_ : conj_i(omega1_);
  return c == 0 ? omega1_ : conj_i(omega0_);
}

OmegaRingElement OmegaMatrix::det() const {
  return omega0_ * conj_i(omega0_) - conj_i(omega1_) * omega1_;
}

Multivector OmegaMatrix::to_multivector() const {
  const std::array<Multivector, 2> border = {basis::one(), basis::e(1)};
  const Multivector& ep = idempotents().E3_plus;
  Multivector out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out += border[r] * ep * entry(r, c) * border[c];
  return out;
}

std::array<std::array<Complex, 2>, 2> OmegaMatrix::pauli_entries() const {
  return {{{entry(0, 0).plus(), entry(0, 1).plus()}, {entry(1, 0).plus(), entry(1, 1).plus()}}};
}

OmegaMatrix operator*(const OmegaMatrix& a, const OmegaMatrix& b) {
  // The constrained form is closed under products, so only the first column
  // of the result needs computing.
  return {a.entry(0, 0) * b.entry(0, 0) + a.entry(0, 1) * b.entry(1, 0),
          a.entry(1, 0) * b.entry(0, 0) + a.entry(1, 1) * b.entry(1, 0)};
}

bool approx_equal(const OmegaMatrix& a, const OmegaMatrix& b, double tol) {
  return approx_equal(a.omega0(), b.omega0(), tol) && approx_equal(a.omega1(), b.omega1(), tol);
}

std::array<OmegaMatrix, 4> e_matrices() {
  const OmegaRingElement zero;
  const OmegaRingElement one(1.0);
  return {OmegaMatrix(one, zero), OmegaMatrix(zero, one),
          OmegaMatrix(zero, OmegaRingElement::unit_i()),
          OmegaMatrix(OmegaRingElement::unit_J(), zero)};
}

OmegaMatrix omega_matrix(const SpinorOperator& psi) { return {psi.omega0(), psi.omega1()}; }

OmegaRingElement det_omega(const SpinorOperator& psi) { return omega_matrix(psi).det(); }

}  // namespace sta
