#include "sta/multivector.hpp"

#include <algorithm>
#include <cmath>

#include "sta/errors.hpp"

namespace sta {

std::string blade_name(unsigned mask) {
  mask &= 0xFu;
  if (mask == 0) return "1";
  std::string name = "g";
  for (int mu = 0; mu < 4; ++mu) {
    if (mask & (1u << mu)) name += static_cast<char>('0' + mu);
  }
  return name;
}

Complex checked_complex(double re, double im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw DomainError("non-finite complex scalar");
  }
  return {re, im};
}

Multivector Multivector::scalar(Complex value) { return blade(0, value); }

Multivector Multivector::blade(unsigned mask, Complex value) {
  Multivector m;
  m.c_[mask & 0xFu] = checked_complex(value.real(), value.imag());
  return m;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  for (int k = 0; k < kBladeCount; ++k) c_[k] += o.c_[k];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  for (int k = 0; k < kBladeCount; ++k) c_[k] -= o.c_[k];
  return *this;
}

Multivector& Multivector::operator*=(Complex s) {
  for (auto& v : c_) v *= s;
  return *this;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  Multivector::Coeffs out{};
  for (unsigned i = 0; i < kBladeCount; ++i) {
    if (a.c_[i] == Complex{}) continue;
    for (unsigned j = 0; j < kBladeCount; ++j) {
      if (b.c_[j] == Complex{}) continue;
      out[i ^ j] += static_cast<double>(blade_product_sign(i, j)) * a.c_[i] * b.c_[j];
    }
  }
  return Multivector(out);
}

double Multivector::max_abs() const {
  double m = 0.0;
  for (const auto& v : c_) m = std::max(m, std::abs(v));
  return m;
}

Multivector geometric_product(const Multivector& a, const Multivector& b) { return a * b; }

double distance(const Multivector& a, const Multivector& b) { return (a - b).max_abs(); }

bool approx_equal(const Multivector& a, const Multivector& b, double tol) {
  return distance(a, b) <= tol;
}

namespace {

template <typename SignFn>
Multivector map_blades(const Multivector& g, SignFn sign) {
  Multivector::Coeffs out = g.coeffs();
  for (unsigned m = 0; m < kBladeCount; ++m) out[m] *= sign(m);
  return Multivector(out);
}

int grade_of(unsigned mask) { return BladeIndex(mask).grade(); }

}  // namespace

Multivector grade_project(const Multivector& g, int k) {
  return map_blades(g, [k](unsigned m) { return grade_of(m) == k ? 1.0 : 0.0; });
}

Multivector even_part(const Multivector& g) {
  return map_blades(g, [](unsigned m) { return grade_of(m) % 2 == 0 ? 1.0 : 0.0; });
}

Multivector odd_part(const Multivector& g) {
  return map_blades(g, [](unsigned m) { return grade_of(m) % 2 == 1 ? 1.0 : 0.0; });
}

Complex scalar_part(const Multivector& g) { return g[0]; }
Complex pseudoscalar_part(const Multivector& g) { return g[kPseudoscalarMask]; }

bool is_even(const Multivector& g, double tol) { return odd_part(g).max_abs() <= tol; }

bool is_real(const Multivector& g, double tol) {
  return std::all_of(g.coeffs().begin(), g.coeffs().end(),
                     [tol](const Complex& c) { return std::abs(c.imag()) <= tol; });
}

Multivector reverse(const Multivector& g) {
  return map_blades(g, [](unsigned m) {
    const int k = grade_of(m);
    return (k * (k - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
  });
}

Multivector grade_involute(const Multivector& g) {
  return map_blades(g, [](unsigned m) { return grade_of(m) % 2 == 0 ? 1.0 : -1.0; });
}

Multivector complex_conjugate(const Multivector& g) {
  Multivector::Coeffs out = g.coeffs();
  for (auto& v : out) v = std::conj(v);
  return Multivector(out);
}

Multivector star(const Multivector& g) { return grade_involute(complex_conjugate(g)); }

Multivector sym_product(const Multivector& a, const Multivector& b) {
  return 0.5 * (a * b + b * a);
}

Multivector antisym_product(const Multivector& a, const Multivector& b) {
  return 0.5 * (a * b - b * a);
}

namespace {

template <typename GradeSelect>
Multivector graded_product(const Multivector& a, const Multivector& b, GradeSelect select) {
  Multivector out;
  for (int r = 0; r <= 4; ++r) {
    const Multivector ar = grade_project(a, r);
    if (ar.is_zero(0.0)) continue;
    for (int s = 0; s <= 4; ++s) {
      const Multivector bs = grade_project(b, s);
      if (bs.is_zero(0.0)) continue;
      out += grade_project(ar * bs, select(r, s));
    }
  }
  return out;
}

}  // namespace

Multivector outer_product(const Multivector& a, const Multivector& b) {
  return graded_product(a, b, [](int r, int s) { return r + s; });
}

Multivector inner_product(const Multivector& a, const Multivector& b) {
  return graded_product(a, b, [](int r, int s) { return std::abs(r - s); });
}

Multivector power(const Multivector& g, int n) {
  Multivector base = n < 0 ? inverse(g) : g;
  unsigned e = static_cast<unsigned>(n < 0 ? -static_cast<long>(n) : n);
  Multivector result = basis::one();
  while (e != 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Multivector exp(const Multivector& g) {
  constexpr double kScaleThreshold = 0.5;
  constexpr double kTermCutoff = 1e-16;
  constexpr double kOverflow = 1e300;
  constexpr int kMaxTerms = 200;

  const double norm = g.max_abs();
  if (!std::isfinite(norm)) throw OverflowError("exp: non-finite input");
  int squarings = 0;
  if (norm > kScaleThreshold) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kScaleThreshold)));
  }
  const Multivector a = g * std::ldexp(1.0, -squarings);

  Multivector sum = basis::one();
  Multivector term = basis::one();
  for (int n = 1; n <= kMaxTerms; ++n) {
    term = term * a * (1.0 / n);
    sum += term;
    if (term.max_abs() < kTermCutoff * std::max(1.0, sum.max_abs())) break;
  }
  for (int s = 0; s < squarings; ++s) {
    sum = sum * sum;
    if (!(sum.max_abs() <= kOverflow)) throw OverflowError("exp: coefficient overflow");
  }
  return sum;
}

namespace basis {

Multivector one() { return Multivector::scalar(1.0); }
Multivector imag() { return Multivector::scalar(Complex{0.0, 1.0}); }

Multivector gamma(int mu) {
  if (mu < 0 || mu > 3) throw DomainError("gamma index out of range");
  return Multivector::blade(1u << mu);
}

Multivector gamma(int mu, int nu) { return gamma(mu) * gamma(nu); }

Multivector e(int k) {
  if (k < 1 || k > 3) throw DomainError("rest-frame index out of range");
  return gamma(k) * gamma(0);
}

Multivector e(int j, int k) { return e(j) * e(k); }

Multivector pseudoscalar() { return Multivector::blade(kPseudoscalarMask); }

Multivector J() { return Complex{0.0, -1.0} * pseudoscalar(); }

Multivector E3() { return J() * e(3); }

}  // namespace basis

Multivector pauli_embed(int k) { return basis::e(k); }

Multivector pauli_minus(const Multivector& g) {
  const Multivector g0 = basis::gamma(0);
  return g0 * g * g0;
}

Multivector pauli_dagger(const Multivector& g) {
  const Multivector g0 = basis::gamma(0);
  return g0 * reverse(g) * g0;
}

Multivector pauli_star(const Multivector& g) { return pauli_dagger(pauli_minus(g)); }

PauliConjugates pauli_conjugations(const Multivector& g) {
  return {pauli_minus(g), pauli_dagger(g), pauli_star(g)};
}

}  // namespace sta
