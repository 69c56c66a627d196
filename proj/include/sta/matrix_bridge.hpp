#pragma once

#include <array>

#include "sta/multivector.hpp"
#include "sta/omega_ring.hpp"

namespace sta {

class SpinorOperator;

// Dense 4x4 complex matrix: the image [g] of a multivector under the
// spectral-basis isomorphism Cl(1,3) (x) C ~ Mat_C(4).
struct MatrixRep {
  std::array<std::array<Complex, 4>, 4> entries{};

  Complex& operator()(int r, int c) { return entries[r][c]; }
  Complex operator()(int r, int c) const { return entries[r][c]; }

  static MatrixRep identity();
  double max_abs() const;

  friend MatrixRep operator*(const MatrixRep& a, const MatrixRep& b);
  friend MatrixRep operator+(const MatrixRep& a, const MatrixRep& b);
  friend MatrixRep operator-(const MatrixRep& a, const MatrixRep& b);
};

bool approx_equal(const MatrixRep& a, const MatrixRep& b, double tol = kDefaultTol);

struct IdempotentSet {
  Multivector u_pp;  // (1 + g0)(1 + i g12)/4
  Multivector u_pm;  // (1 + g0)(1 - i g12)/4
  Multivector u_mp;  // (1 - g0)(1 + i g12)/4
  Multivector u_mm;  // (1 - g0)(1 - i g12)/4
  Multivector gamma0_plus;
  Multivector gamma0_minus;
  Multivector E3_plus;  // (1 + J e3)/2
  Multivector E3_minus;
};

const IdempotentSet& idempotents();

// Left factors (1, e13, e3, e1) and right factors (1, -e13, e3, e1) that
// border u_++ in the spectral basis.
const std::array<Multivector, 4>& spectral_row_factors();
const std::array<Multivector, 4>& spectral_column_factors();

using SpectralBasis = std::array<std::array<Multivector, 4>, 4>;

// Entry (a, b) is row_factor[a] u_++ column_factor[b]; these are matrix units.
const SpectralBasis& spectral_basis();

// [g]_ab is the complex number lambda with u_++ col[a] g row[b] u_++ = lambda u_++.
MatrixRep to_matrix(const Multivector& g);
Multivector from_matrix(const MatrixRep& m);

// LU with partial pivoting; a pivot below 1e-14 makes the determinant 0.
Complex det4(const MatrixRep& m);
// Throws ZeroDivisorError when |det| < 1e-12.
MatrixRep inverse4(const MatrixRep& m);

// 2x2 matrix [[Omega0, conj_i(Omega1)], [Omega1, conj_i(Omega0)]] over the
// ring span{1, i, I, iI}. Only the Omega-pair is stored; the conjugate entries
// are derived.
class OmegaMatrix {
 public:
  OmegaMatrix(OmegaRingElement omega0, OmegaRingElement omega1)
      : omega0_(omega0), omega1_(omega1) {}

  const OmegaRingElement& omega0() const { return omega0_; }
  const OmegaRingElement& omega1() const { return omega1_; }
  OmegaRingElement entry(int r, int c) const;

  // Omega0 conj(Omega0) - conj(Omega1) Omega1; lies in span{1, I}.
  OmegaRingElement det() const;

  // The even element (1, e1) E3+ [Omega] (1, e1)^T.
  Multivector to_multivector() const;

  // Entries with J -> 1 (the P+ component), read with i standing for I:
  // the ordinary Pauli-algebra matrix of the same element.
  std::array<std::array<Complex, 2>, 2> pauli_entries() const;

  friend OmegaMatrix operator*(const OmegaMatrix& a, const OmegaMatrix& b);

 private:
  OmegaRingElement omega0_;
  OmegaRingElement omega1_;
};

bool approx_equal(const OmegaMatrix& a, const OmegaMatrix& b, double tol = kDefaultTol);

// [1], [e1], [e2], [e3] in the Omega representation.
std::array<OmegaMatrix, 4> e_matrices();

OmegaMatrix omega_matrix(const SpinorOperator& psi);
OmegaRingElement det_omega(const SpinorOperator& psi);

}  // namespace sta
