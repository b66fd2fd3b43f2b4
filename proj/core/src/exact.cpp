#include "persym/exact.hpp"

#include <cctype>
#include <limits>

namespace persym {

ExactInt pow2(unsigned long e) {
  ExactInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

ExactScalar pow2_scalar(long e) {
  if (e >= 0) return ExactScalar(pow2(static_cast<unsigned long>(e)));
  ExactScalar r(1, pow2(static_cast<unsigned long>(-e)));
  r.canonicalize();
  return r;
}

ExactInt require_integer(const ExactScalar& v) {
  if (v.get_den() != 1) {
    throw std::logic_error("expected an integral value, got " + v.get_str());
  }
  return v.get_num();
}

ExactInt require_count(const ExactScalar& v) {
  ExactInt n = require_integer(v);
  if (n < 0) {
    throw std::logic_error("expected a non-negative count, got " + n.get_str());
  }
  return n;
}

std::uint64_t parse_capacity(const std::string& text) {
  const auto parse_u64 = [](const std::string& s) -> std::uint64_t {
    if (s.empty()) throw std::invalid_argument("empty number in capacity");
    std::uint64_t v = 0;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("bad capacity: " + s);
      }
      const std::uint64_t d = static_cast<std::uint64_t>(c - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) {
        throw std::invalid_argument("capacity out of range: " + s);
      }
      v = v * 10 + d;
    }
    return v;
  };

  const auto caret = text.find('^');
  if (caret == std::string::npos) return parse_u64(text);
  if (text.substr(0, caret) != "2") {
    throw std::invalid_argument("capacity must be decimal or 2^N: " + text);
  }
  const std::uint64_t e = parse_u64(text.substr(caret + 1));
  if (e > 63) throw std::invalid_argument("capacity exponent too large: " + text);
  return std::uint64_t{1} << e;
}

CapacityError::CapacityError(const std::string& what, ExactInt required)
    : std::runtime_error(what + " (required cap: " + required.get_str() + ")"),
      required_(std::move(required)) {}

}  // namespace persym
