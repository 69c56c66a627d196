#pragma once

#include <array>
#include <complex>
#include <initializer_list>

#include "sta/blade.hpp"

namespace sta {

using Complex = std::complex<double>;

// Default absolute tolerance for coefficient-wise comparisons.
inline constexpr double kDefaultTol = 1e-10;

// Throws DomainError when either part is NaN or infinite.
Complex checked_complex(double re, double im = 0.0);

// Element of the complexified spacetime algebra Cl(1,3) (x) C. Dense: one
// complex coefficient per basis blade, indexed by BladeIndex::mask. The
// imaginary unit i of the coefficients commutes with every blade.
class Multivector {
 public:
  using Coeffs = std::array<Complex, kBladeCount>;

  Multivector() = default;
  explicit Multivector(const Coeffs& coeffs) : c_(coeffs) {}

  static Multivector scalar(Complex value);
  static Multivector blade(unsigned mask, Complex value = 1.0);

  Complex operator[](unsigned mask) const { return c_[mask & 0xFu]; }
  Complex coeff(BladeIndex b) const { return c_[b.mask]; }
  const Coeffs& coeffs() const { return c_; }

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(Complex s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) { return a *= -1.0; }
  friend Multivector operator*(Multivector a, Complex s) { return a *= s; }
  friend Multivector operator*(Complex s, Multivector a) { return a *= s; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator/(Multivector a, Complex s) { return a *= 1.0 / s; }

  // Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b);

  // Largest coefficient magnitude.
  double max_abs() const;
  bool is_zero(double tol = kDefaultTol) const { return max_abs() <= tol; }

 private:
  Coeffs c_{};
};

Multivector geometric_product(const Multivector& a, const Multivector& b);

bool approx_equal(const Multivector& a, const Multivector& b, double tol = kDefaultTol);
double distance(const Multivector& a, const Multivector& b);

// --- grade structure ------------------------------------------------------

// Grade-k part; zero when k is outside 0..4.
Multivector grade_project(const Multivector& g, int k);
Multivector even_part(const Multivector& g);
Multivector odd_part(const Multivector& g);
Complex scalar_part(const Multivector& g);
// Coefficient of I = g0123.
Complex pseudoscalar_part(const Multivector& g);
bool is_even(const Multivector& g, double tol = kDefaultTol);
// All coefficients real.
bool is_real(const Multivector& g, double tol = kDefaultTol);

// --- conjugations ---------------------------------------------------------

// Reversion: sign (-1)^{k(k-1)/2} on grade k.
Multivector reverse(const Multivector& g);
// Parity (#): gamma_mu -> -gamma_mu, i.e. odd grades negated.
Multivector grade_involute(const Multivector& g);
// i -> -i on every coefficient.
Multivector complex_conjugate(const Multivector& g);
// grade_involute o complex_conjugate.
Multivector star(const Multivector& g);

// --- products ---------------------------------------------------------------

// a o b = (ab + ba)/2
Multivector sym_product(const Multivector& a, const Multivector& b);
// a (x) b = (ab - ba)/2
Multivector antisym_product(const Multivector& a, const Multivector& b);
// Outer product: sum over r,s of <<a>_r <b>_s>_{r+s}.
Multivector outer_product(const Multivector& a, const Multivector& b);
// Inner product: sum over r,s of <<a>_r <b>_s>_{|r-s|} (scalars included).
Multivector inner_product(const Multivector& a, const Multivector& b);

// Integer power; negative exponents go through inverse().
Multivector power(const Multivector& g, int n);

// Exponential by scaling and squaring of the power series. Throws
// OverflowError if an intermediate coefficient exceeds 1e300.
Multivector exp(const Multivector& g);

// Inverse through the 4x4 matrix representation. Throws ZeroDivisorError
// when |det| of that representation is below 1e-12.
Multivector inverse(const Multivector& g);

// --- named elements ---------------------------------------------------------

namespace basis {

Multivector one();
// Imaginary unit of the coefficient field.
Multivector imag();
// gamma_mu, mu in 0..3.
Multivector gamma(int mu);
// gamma_mu gamma_nu.
Multivector gamma(int mu, int nu);
// Rest-frame vector e_k = gamma_k gamma_0, k in 1..3.
Multivector e(int k);
// e_j e_k.
Multivector e(int j, int k);
// I = gamma_0123 = e1 e2 e3.
Multivector pseudoscalar();
// J = -i I; J^2 = 1 and J is central in the even subalgebra.
Multivector J();
// E3 = J e3.
Multivector E3();

}  // namespace basis

// --- embedded Pauli algebra G3 = Cl(1,3)^+ ------------------------------------

// e_k = gamma_k gamma_0.
Multivector pauli_embed(int k);

struct PauliConjugates {
  Multivector minus;   // g^- = gamma0 g gamma0 (inversion)
  Multivector dagger;  // g^dagger = gamma0 ~g gamma0 (reversion in G3)
  Multivector star;    // g^* = (g^-)^dagger
};

PauliConjugates pauli_conjugations(const Multivector& g);
Multivector pauli_minus(const Multivector& g);
Multivector pauli_dagger(const Multivector& g);
Multivector pauli_star(const Multivector& g);

}  // namespace sta
