#include "sta/omega_ring.hpp"

#include <algorithm>
#include <cmath>

#include "sta/errors.hpp"

namespace sta {

OmegaRingElement::OmegaRingElement(double c1, double ci, double cI, double ciI)
    : c1_(c1), ci_(ci), cI_(cI), ciI_(ciI) {
  if (!std::isfinite(c1) || !std::isfinite(ci) || !std::isfinite(cI) || !std::isfinite(ciI)) {
    throw DomainError("non-finite ring coordinate");
  }
}

OmegaRingElement OmegaRingElement::from_split(Complex plus, Complex minus) {
  return {0.5 * (plus.real() + minus.real()), 0.5 * (plus.imag() + minus.imag()),
          0.5 * (plus.imag() - minus.imag()), 0.5 * (minus.real() - plus.real())};
}

OmegaRingElement OmegaRingElement::from_multivector(const Multivector& g, double tol) {
  Multivector rest = g;
  const Complex s = g[0];
  const Complex p = g[kPseudoscalarMask];
  rest -= Multivector::scalar(s);
  rest -= Multivector::blade(kPseudoscalarMask, p);
  if (!rest.is_zero(tol)) throw DomainError("multivector is not in span{1, i, I, iI}");
  return {s.real(), s.imag(), p.real(), p.imag()};
}

Multivector OmegaRingElement::to_multivector() const {
  return Multivector::scalar({c1_, ci_}) + Multivector::blade(kPseudoscalarMask, {cI_, ciI_});
}

OmegaRingElement& OmegaRingElement::operator+=(const OmegaRingElement& o) {
  c1_ += o.c1_;
  ci_ += o.ci_;
  cI_ += o.cI_;
  ciI_ += o.ciI_;
  return *this;
}

OmegaRingElement& OmegaRingElement::operator-=(const OmegaRingElement& o) {
  c1_ -= o.c1_;
  ci_ -= o.ci_;
  cI_ -= o.cI_;
  ciI_ -= o.ciI_;
  return *this;
}

OmegaRingElement& OmegaRingElement::operator*=(double s) {
  c1_ *= s;
  ci_ *= s;
  cI_ *= s;
  ciI_ *= s;
  return *this;
}

double OmegaRingElement::max_abs() const {
  return std::max({std::abs(c1_), std::abs(ci_), std::abs(cI_), std::abs(ciI_)});
}

bool OmegaRingElement::is_invertible(double threshold) const {
  return std::abs(plus()) >= threshold && std::abs(minus()) >= threshold;
}

bool approx_equal(const OmegaRingElement& a, const OmegaRingElement& b, double tol) {
  return (a - b).max_abs() <= tol;
}

OmegaRingElement conj_i(const OmegaRingElement& a) { return {a.c1(), -a.ci(), a.cI(), -a.ciI()}; }

OmegaRingElement conj_I(const OmegaRingElement& a) { return {a.c1(), a.ci(), -a.cI(), -a.ciI()}; }

namespace {

void require_invertible(const OmegaRingElement& a, const char* what) {
  if (!a.is_invertible()) {
    throw ZeroDivisorError(std::string("zero divisor in ring ") + what);
  }
}

template <typename Fn>
OmegaRingElement componentwise(const OmegaRingElement& a, Fn fn) {
  return OmegaRingElement::from_split(fn(a.plus()), fn(a.minus()));
}

}  // namespace

OmegaRingElement inverse(const OmegaRingElement& a) {
  require_invertible(a, "inverse");
  return componentwise(a, [](Complex z) { return 1.0 / z; });
}

OmegaRingElement operator/(const OmegaRingElement& a, const OmegaRingElement& b) {
  return a * inverse(b);
}

OmegaRingElement sqrt(const OmegaRingElement& a) {
  require_invertible(a, "sqrt");
  return componentwise(a, [](Complex z) { return std::sqrt(z); });
}

OmegaRingElement exp(const OmegaRingElement& a) {
  return componentwise(a, [](Complex z) { return std::exp(z); });
}

OmegaRingElement log(const OmegaRingElement& a) {
  require_invertible(a, "log");
  return componentwise(a, [](Complex z) { return std::log(z); });
}

OmegaRingElement acos(const OmegaRingElement& a) {
  return componentwise(a, [](Complex z) { return std::acos(z); });
}

bool in_span_1_I(const OmegaRingElement& a, double tol) {
  return std::abs(a.ci()) <= tol && std::abs(a.ciI()) <= tol;
}

Complex to_complex_I(const OmegaRingElement& a) { return {a.c1(), a.cI()}; }

Multivector operator*(const OmegaRingElement& a, const Multivector& g) {
  return a.to_multivector() * g;
}

Multivector operator*(const Multivector& g, const OmegaRingElement& a) {
  return g * a.to_multivector();
}

}  // namespace sta
