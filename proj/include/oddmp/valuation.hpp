#pragma once

#include <cstdint>
#include <optional>

#include "oddmp/natural.hpp"

namespace oddmp {

/// Closed-form 2-adic valuations of sigma(p^e) and sigma(p^e) - 1.
///
/// For odd p and odd e:  nu2(sigma(p^e)) = nu2(p+1) + nu2((e+1)/2), and
/// nu2(sigma(p^e) - 1) = 0.
/// For odd p and even e: nu2(sigma(p^e)) = 0 and
/// nu2(sigma(p^e) - 1) = nu2(p+1) + nu2(e/2).
/// For p = 2:            nu2(sigma(2^e)) = 0 and nu2(sigma(2^e) - 1) = 1.
///
/// Every report also carries the value computed directly from sigma, unless
/// the caller opts out with OracleMode::skip.
struct ValuationQuery {
  Natural p;
  std::uint64_t e = 1;

  /// Validates p prime and e >= 1.
  static ValuationQuery make(Natural p, std::uint64_t e);
};

enum class ValuationBranch { odd_p_odd_e, otherwise_zero, even_e_case, p_equals_2 };

const char* to_string(ValuationBranch b);

enum class OracleMode { check, skip };

struct ValuationReport {
  std::uint64_t value = 0;
  ValuationBranch branch = ValuationBranch::otherwise_zero;
  /// nu2((e+1)/2) on the odd/odd branch, nu2(e/2) on the even-e branch.
  std::optional<std::uint64_t> r;
  std::optional<std::uint64_t> oracle_value;

  friend bool operator==(const ValuationReport&, const ValuationReport&) = default;
};

ValuationReport nu2_sigma(const ValuationQuery& q, OracleMode mode = OracleMode::check);
ValuationReport nu2_sigma_minus_one(const ValuationQuery& q, OracleMode mode = OracleMode::check);

/// 2^j || sigma(p^e)  <=>  2^(j+1) || (p+1)(e+1), for odd prime p and odd e.
struct BroughanZhouResult {
  std::uint64_t j = 0;
  std::uint64_t nu2_product = 0;  ///< nu2((p+1)(e+1))
  bool holds = false;

  friend bool operator==(const BroughanZhouResult&, const BroughanZhouResult&) = default;
};

/// Throws InvariantViolation if the equivalence fails; rejects p = 2 and even e.
BroughanZhouResult broughan_zhou_equiv(const Natural& p, std::uint64_t e);

}  // namespace oddmp
