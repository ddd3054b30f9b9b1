#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace oddmp {

/// Arbitrary-precision nonnegative integer. All arithmetic in this library is
/// exact; nothing ever wraps.
using Natural = mpz_class;

/// Raised when an input violates an operation's precondition. `hypothesis()`
/// names the failed condition so callers (and the CLI) can report it.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(std::string hypothesis, const std::string& message)
      : std::invalid_argument(message), hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// Raised when a closed form disagrees with its direct computation. Seeing
/// one means the implementation is wrong, not the mathematics.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool condition, std::string hypothesis, const std::string& message) {
  if (!condition) throw PreconditionError(std::move(hypothesis), message);
}

inline std::string to_string(const Natural& n) { return n.get_str(10); }

inline bool fits_u64(const Natural& n) {
  return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Natural& n);
Natural from_u64(std::uint64_t v);

/// Parses a plain decimal integer (no sign, digits only).
Natural parse_decimal(std::string_view text);

/// Parses a product of powers such as "41^13*5^4" or "30029". Whitespace is
/// ignored. Bases and exponents are decimal.
Natural parse_expression(std::string_view text);

}  // namespace oddmp
