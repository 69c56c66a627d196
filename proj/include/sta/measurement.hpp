#pragma once

#include <utility>

#include "sta/multivector.hpp"
#include "sta/omega_ring.hpp"
#include "sta/spinor_ops.hpp"

namespace sta {

// |Omega> = 2 (Omega0 + Omega1 e1) u_++
struct Ket {
  Multivector ideal_element;
  OmegaPair omega;
};

// |Omega>_E = sqrt(2) (Omega0 + Omega1 e1) E3+
struct EKet {
  Multivector ideal_element;
  OmegaPair omega;
};

// alpha = I theta + J phi
struct GaugeParams {
  double theta = 0.0;
  double phi = 0.0;
};

Ket make_ket(const DiracSpinor& d);
Ket make_ket(const OmegaPair& omega);
EKet make_eket(const DiracSpinor& d);
EKet make_eket(const OmegaPair& omega);

// Reverse of the complex conjugate.
Multivector bra(const Ket& k);
Multivector bra(const EKet& k);

// <Phi|Omega>: complex part of <Phi| |Omega> = 4 u_++ <Phi|Omega>.
Complex braket(const Ket& phi, const Ket& omega);
// conj(phi1) psi1 + conj(phi2) psi2 - conj(phi3) psi3 - conj(phi4) psi4
Complex dirac_components(const DiracSpinor& phi, const DiracSpinor& psi);
// The same product written in the substituted variables (r, s) and (x, y).
Complex dirac_vector_form(const DiracSpinor& phi, const DiracSpinor& psi);

// <Phi|_E |Omega>_E
Multivector e_inner(const EKet& phi, const EKet& omega);
// 2 e^{conj(omega') + omega} E3+ (M' o M + J (M' x M) o e3) from the canonical forms.
Multivector e_inner_polar(const DiracSpinor& phi, const DiracSpinor& omega);
// 2 E3+ (D + C I) with D the Dirac product and
// C = i(conj(phi3) psi1 - conj(phi1) psi3 + conj(phi4) psi2 - conj(phi2) psi4).
Multivector e_inner_components(const DiracSpinor& phi, const DiracSpinor& psi);
// |Omega>_E <Omega|_E
Multivector e_outer(const EKet& omega);
// 2 e^{2 omega1} M-hat E3+ M-hat. Throws NullStateError when M-hat is undefined.
Multivector e_outer_polar(const DiracSpinor& omega);

// Scalar part of the average over {identity, -, dagger, *} in the gamma0 frame.
Complex complex_projection(const Multivector& g);
Complex dirac_from_e(const EKet& phi, const EKet& omega);
// M'oM is dagger-invariant and (M' x M) o e3 is dagger-odd. False when either
// M-hat is undefined.
bool special_condition(const DiracSpinor& phi, const DiracSpinor& omega);
// Scalar part of (P + P^dagger)/2.
Complex dirac_from_e_simplified(const EKet& phi, const EKet& omega);
// Simplified form when the special condition holds, full average otherwise.
Complex dirac_inner(const DiracSpinor& phi, const DiracSpinor& omega);

OmegaRingElement gauge_factor(const GaugeParams& g);
EKet gauge_transform(const EKet& k, const GaugeParams& g);
OmegaRingElement det_omega(const OmegaPair& omega);
// Chooses theta, phi so that det[Omega'] is real and positive and
// Omega0' / sqrt(Omega0' conj(Omega0')) is a pure i-phase. Throws
// ZeroDivisorError when det[Omega] or Omega0 is singular.
std::pair<EKet, GaugeParams> gauge_normalize(const EKet& k);
// gauge_normalize followed by a real rescale to det[Omega] = 1.
EKet normalize_physical(const EKet& k);
DiracSpinor normalize_physical(const DiracSpinor& d);

struct TransitionProbability {
  OmegaRingElement idempotent_path;  // 2 (<T>_0 + <T>_4 I), T = A+ B+ A+
  OmegaRingElement projective_path;  // 1 - (M_a - M_b)^2 / (M_a^2 M_b^2)
  OmegaRingElement direct;           // (1 + a o b) / 2
  double residual = 0.0;             // largest disagreement between the three
  bool is_probability = false;
};

// Value in span{1, I}. Not clamped: cross-frame pairs may leave [0, 1] or
// carry an I part, and are flagged.
TransitionProbability transition_probability(const SphereState& a, const SphereState& b);

SphereState family_state(Vec2 x, double phi_x);

struct FamilyProbability {
  double value = 0.0;
  double value_I = 0.0;
  bool is_probability = false;
};

// 1 - (x^2 + y^2 - 2(cosh(dphi) x.y + sinh(dphi) e3^x^y)) / ((1 + x^2)(1 + y^2))
FamilyProbability family_probability(Vec2 x, double phi_x, Vec2 y, double phi_y);

inline constexpr double kProbabilityTol = 1e-10;
bool is_probability_value(double value, double value_I, double tol = kProbabilityTol);

}  // namespace sta
