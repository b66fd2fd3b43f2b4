#include "persym/gf2poly.hpp"

#include <stdexcept>

namespace persym {

Gf2Poly::Gf2Poly(std::uint64_t coeff_bits) : bits_(coeff_bits) {
  if (coeff_bits >> (max_degree + 1) != 0) {
    throw std::invalid_argument("Gf2Poly: coefficients beyond degree 62");
  }
}

Gf2Poly Gf2Poly::t_power(int d) {
  if (d < 0 || d > max_degree) throw std::invalid_argument("Gf2Poly: bad T power");
  return Gf2Poly(std::uint64_t{1} << d);
}

bool Gf2Poly::coeff(int d) const {
  if (d < 0 || d > max_degree) throw std::out_of_range("Gf2Poly: bad degree");
  return (bits_ >> d) & 1;
}

Gf2Poly operator*(Gf2Poly a, Gf2Poly b) {
  if (!a.is_zero() && !b.is_zero() &&
      *a.degree() + *b.degree() > Gf2Poly::max_degree) {
    throw std::overflow_error("Gf2Poly: product leaves the degree window");
  }
  Gf2Poly r;
  r.bits_ = clmul64(a.bits_, b.bits_);
  return r;
}

}  // namespace persym
