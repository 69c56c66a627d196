#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>

namespace sta {

// Basis blade of Cl(1,3): bit mu set <=> gamma_mu is a factor. Factors are
// kept in ascending order gamma_0 gamma_1 gamma_2 gamma_3.
struct BladeIndex {
  std::uint8_t mask = 0;

  constexpr BladeIndex() = default;
  constexpr explicit BladeIndex(unsigned m) : mask(static_cast<std::uint8_t>(m & 0xFu)) {}

  constexpr int grade() const { return std::popcount(static_cast<unsigned>(mask)); }
  constexpr bool operator==(const BladeIndex&) const = default;
};

inline constexpr int kBladeCount = 16;
inline constexpr unsigned kPseudoscalarMask = 0xF;

// Signature (+,-,-,-).
constexpr int metric(int mu) { return mu == 0 ? 1 : -1; }

// Sign of gamma_A gamma_B = sign * gamma_{A xor B}: reorder factors into
// ascending order, then contract repeated generators with the metric.
constexpr int blade_product_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned t = a >> 1; t != 0; t >>= 1) {
    swaps += std::popcount(t & b);
  }
  int sign = (swaps & 1) ? -1 : 1;
  for (unsigned common = a & b; common != 0; common &= common - 1) {
    sign *= metric(std::countr_zero(common));
  }
  return sign;
}

// Blades ordered by grade, then lexicographically by index list:
// 1, g0..g3, g01, g02, g03, g12, g13, g23, g012, g013, g023, g123, g0123.
inline constexpr std::array<unsigned, kBladeCount> kCanonicalOrder = {
    0x0, 0x1, 0x2, 0x4, 0x8, 0x3, 0x5, 0x9, 0x6, 0xA, 0xC, 0x7, 0xB, 0xD, 0xE, 0xF};

// "1" for the scalar blade, otherwise "g" followed by the indices, e.g. "g012".
std::string blade_name(unsigned mask);

}  // namespace sta
