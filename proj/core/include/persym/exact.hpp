#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace persym {

/// Arbitrary-precision integer. Census counts fit in 64 bits, but the
/// closed-form counts and R_q values they are compared against do not,
/// so everything is carried at full precision.
using ExactInt = mpz_class;

/// Exact rational. Formula evaluation goes through rationals throughout:
/// intermediate terms like (2^{i-1}-1)*2^{(i-2)n+1} have negative powers
/// of two at small i and only cancel exactly.
using ExactScalar = mpq_class;

/// 2^e as an integer, e >= 0.
ExactInt pow2(unsigned long e);

/// 2^e as a rational; e may be negative.
ExactScalar pow2_scalar(long e);

/// Asserts the value is an integer (denominator one) and returns it.
/// Throws std::logic_error otherwise: a non-integral result from one of
/// the count formulas means the formula was applied outside its domain.
ExactInt require_integer(const ExactScalar& v);

/// require_integer plus a non-negativity check, for values reported as counts.
ExactInt require_count(const ExactScalar& v);

/// Parses a non-negative integer written either as a decimal ("1048576")
/// or as a power of two ("2^20"). Throws std::invalid_argument on junk.
std::uint64_t parse_capacity(const std::string& text);

/// A requested enumeration does not fit the configured state cap. Carries
/// the cap that would be required, so callers can report it.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, ExactInt required);

  const ExactInt& required_cap() const { return required_; }

 private:
  ExactInt required_;
};

}  // namespace persym
