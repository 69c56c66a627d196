#pragma once

#include <complex>

#include "sta/multivector.hpp"

namespace sta {

// Projections below this magnitude make a ring element a zero divisor.
inline constexpr double kZeroDivisorThreshold = 1e-12;

// Element c1 + ci i + cI I + ciI iI of the commutative ring span{1, i, I, iI}.
//
// With J = -iI (J^2 = 1) the projectors P+- = (1 +- J)/2 split the ring into
// C (+) C: on P+ the pseudoscalar I acts as +i, on P- as -i. Multiplication,
// inversion and the elementary functions are computed componentwise in that
// splitting.
class OmegaRingElement {
 public:
  OmegaRingElement() = default;
  OmegaRingElement(double c1, double ci = 0.0, double cI = 0.0, double ciI = 0.0);

  static OmegaRingElement from_split(Complex plus, Complex minus);
  // a + b i
  static OmegaRingElement from_complex(Complex z) { return {z.real(), z.imag(), 0.0, 0.0}; }
  // a + b I
  static OmegaRingElement from_complex_I(Complex z) { return {z.real(), 0.0, z.imag(), 0.0}; }
  static OmegaRingElement unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
  static OmegaRingElement unit_I() { return {0.0, 0.0, 1.0, 0.0}; }
  static OmegaRingElement unit_J() { return {0.0, 0.0, 0.0, -1.0}; }
  // Throws DomainError if g has components outside span{1, I} with complex
  // coefficients.
  static OmegaRingElement from_multivector(const Multivector& g, double tol = kDefaultTol);

  double c1() const { return c1_; }
  double ci() const { return ci_; }
  double cI() const { return cI_; }
  double ciI() const { return ciI_; }

  // Components in the C (+) C splitting.
  Complex plus() const { return {c1_ - ciI_, ci_ + cI_}; }
  Complex minus() const { return {c1_ + ciI_, ci_ - cI_}; }

  Multivector to_multivector() const;

  OmegaRingElement& operator+=(const OmegaRingElement& o);
  OmegaRingElement& operator-=(const OmegaRingElement& o);
  OmegaRingElement& operator*=(double s);

  friend OmegaRingElement operator+(OmegaRingElement a, const OmegaRingElement& b) { return a += b; }
  friend OmegaRingElement operator-(OmegaRingElement a, const OmegaRingElement& b) { return a -= b; }
  friend OmegaRingElement operator-(OmegaRingElement a) { return a *= -1.0; }
  friend OmegaRingElement operator*(OmegaRingElement a, double s) { return a *= s; }
  friend OmegaRingElement operator*(double s, OmegaRingElement a) { return a *= s; }
  friend OmegaRingElement operator*(const OmegaRingElement& a, const OmegaRingElement& b) {
    return from_split(a.plus() * b.plus(), a.minus() * b.minus());
  }

  double max_abs() const;
  // Both split components have magnitude >= threshold.
  bool is_invertible(double threshold = kZeroDivisorThreshold) const;

 private:
  double c1_ = 0.0;
  double ci_ = 0.0;
  double cI_ = 0.0;
  double ciI_ = 0.0;
};

bool approx_equal(const OmegaRingElement& a, const OmegaRingElement& b, double tol = kDefaultTol);

// i -> -i (written as an overbar).
OmegaRingElement conj_i(const OmegaRingElement& a);
// I -> -I (the Pauli reversion restricted to the ring).
OmegaRingElement conj_I(const OmegaRingElement& a);

// Throw ZeroDivisorError when a projection vanishes.
OmegaRingElement inverse(const OmegaRingElement& a);
OmegaRingElement operator/(const OmegaRingElement& a, const OmegaRingElement& b);
// Principal complex branch in each split component; sqrt(a)^2 = a.
OmegaRingElement sqrt(const OmegaRingElement& a);
OmegaRingElement exp(const OmegaRingElement& a);
OmegaRingElement log(const OmegaRingElement& a);
OmegaRingElement acos(const OmegaRingElement& a);

// Element lies in span{1, I} (no i or iI part).
bool in_span_1_I(const OmegaRingElement& a, double tol = kDefaultTol);
// c1 + cI * i, the span{1, I} part read as an ordinary complex number.
Complex to_complex_I(const OmegaRingElement& a);

// Ring element times a multivector; the ring is central in the even subalgebra.
Multivector operator*(const OmegaRingElement& a, const Multivector& g);
Multivector operator*(const Multivector& g, const OmegaRingElement& a);

}  // namespace sta
