#include "persym/laurent.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace persym {

TruncatedLaurent::TruncatedLaurent(std::uint64_t coeff_bits, int depth)
    : depth_(depth), bits_(coeff_bits) {
  if (depth < 0 || depth > 63) {
    throw std::invalid_argument("TruncatedLaurent: depth must be in [0, 63]");
  }
  if ((coeff_bits >> depth) != 0) {
    throw std::invalid_argument("TruncatedLaurent: coefficients beyond depth");
  }
}

TruncatedLaurent TruncatedLaurent::monomial(int i, int depth) {
  if (i < 1 || i > depth) {
    throw std::invalid_argument("TruncatedLaurent: monomial index outside depth");
  }
  return TruncatedLaurent(std::uint64_t{1} << (i - 1), depth);
}

bool TruncatedLaurent::coeff(int i) const {
  if (i < 1 || i > depth_) {
    throw std::out_of_range("TruncatedLaurent: coefficient " + std::to_string(i) +
                            " of depth " + std::to_string(depth_));
  }
  return (bits_ >> (i - 1)) & 1;
}

bool TruncatedLaurent::in_subideal(int j) const {
  if (j < 0 || j > depth_) {
    throw std::out_of_range("TruncatedLaurent: sub-ideal index outside depth");
  }
  return (bits_ & ((std::uint64_t{1} << j) - 1)) == 0;
}

int char_E(const TruncatedLaurent& t) {
  if (t.depth() < 1) {
    throw std::invalid_argument("char_E: needs the T^-1 coefficient");
  }
  return (t.coeff_bits() & 1) ? -1 : +1;
}

int char_E_product(const TruncatedLaurent& t, const Gf2Poly& y, const Gf2Poly& u) {
  const Gf2Poly prod = y * u;
  if (!prod.degree_at_most(t.depth() - 1)) {
    throw std::invalid_argument("char_E_product: truncation too shallow for deg(y*u)");
  }
  // Coefficient d of the product pairs with alpha_{d+1}, i.e. bit d of t.
  const int parity = std::popcount(t.coeff_bits() & prod.coeff_bits()) & 1;
  return parity ? -1 : +1;
}

int char_psi(std::span<const TruncatedLaurent> ts) {
  int sign = +1;
  for (const TruncatedLaurent& t : ts) sign *= char_E(t);
  return sign;
}

}  // namespace persym
