#pragma once

#include <cstdint>
#include <span>

#include "persym/gf2poly.hpp"

namespace persym {

/// Element of the valuation ideal of GF(2)((1/T)) kept to finitely many
/// coefficients: bit i-1 holds alpha_i, the coefficient of T^{-i}, for
/// 1 <= i <= depth. A value of depth m stands for a whole coset of the
/// sub-ideal P_m (everything of valuation > m); every function here only
/// ever reads the retained coefficients, which is what makes the finite
/// coset sums below exact.
class TruncatedLaurent {
 public:
  constexpr TruncatedLaurent() = default;
  TruncatedLaurent(std::uint64_t coeff_bits, int depth);

  static TruncatedLaurent zero(int depth) { return TruncatedLaurent(0, depth); }
  /// T^{-i}, retained to `depth` coefficients. Requires 1 <= i <= depth.
  static TruncatedLaurent monomial(int i, int depth);

  int depth() const { return depth_; }
  std::uint64_t coeff_bits() const { return bits_; }

  /// alpha_i, 1 <= i <= depth.
  bool coeff(int i) const;

  /// Membership in the sub-ideal P_j (valuation > j): alpha_1..alpha_j all
  /// zero. Requires 0 <= j <= depth.
  bool in_subideal(int j) const;

  friend bool operator==(TruncatedLaurent, TruncatedLaurent) = default;

 private:
  int depth_ = 0;
  std::uint64_t bits_ = 0;
};

/// The additive character E: +1 when the T^{-1} coefficient is 0, -1 when
/// it is 1. Requires depth >= 1.
int char_E(const TruncatedLaurent& t);

/// E(t * y * u) for polynomials y, u: the T^{-1} coefficient of the product
/// is the GF(2) pairing of the product's coefficients c_d with alpha_{d+1}.
/// Requires deg(y*u) + 1 <= t.depth().
int char_E_product(const TruncatedLaurent& t, const Gf2Poly& y, const Gf2Poly& u);

/// The product character on tuples: +1 iff the T^{-1} coefficients sum to
/// zero over GF(2). Requires every component depth >= 1.
int char_psi(std::span<const TruncatedLaurent> ts);

}  // namespace persym
