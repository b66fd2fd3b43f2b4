#pragma once

#include <bit>
#include <cstdint>
#include <optional>

namespace persym {

/// Carry-less product of two coefficient words. The caller is responsible
/// for the degree window; bits shifted past 63 are lost.
inline std::uint64_t clmul64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (a != 0) {
    r ^= b << std::countr_zero(a);
    a &= a - 1;
  }
  return r;
}

/// Polynomial over GF(2) packed into one word: bit d = coefficient of T^d.
/// The coefficient window is fixed at degrees 0..62; the zero polynomial has
/// no degree (degree() returns nullopt rather than a -1 sentinel, so
/// degree-bound predicates stay total).
class Gf2Poly {
 public:
  static constexpr int max_degree = 62;

  constexpr Gf2Poly() = default;
  explicit Gf2Poly(std::uint64_t coeff_bits);

  static Gf2Poly one() { return Gf2Poly(1); }
  /// T^d.
  static Gf2Poly t_power(int d);

  std::uint64_t coeff_bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  bool coeff(int d) const;

  std::optional<int> degree() const {
    if (bits_ == 0) return std::nullopt;
    return std::bit_width(bits_) - 1;
  }

  /// True for the zero polynomial at every bound.
  bool degree_at_most(int bound) const {
    return bits_ == 0 || static_cast<int>(std::bit_width(bits_)) - 1 <= bound;
  }

  friend Gf2Poly operator+(Gf2Poly a, Gf2Poly b) {
    Gf2Poly r;
    r.bits_ = a.bits_ ^ b.bits_;
    return r;
  }

  /// Carry-less product. Throws std::overflow_error when the product would
  /// leave the degree window.
  friend Gf2Poly operator*(Gf2Poly a, Gf2Poly b);

  friend bool operator==(Gf2Poly, Gf2Poly) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace persym
