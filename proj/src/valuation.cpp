#include "oddmp/valuation.hpp"

#include "oddmp/arith.hpp"

namespace oddmp {

namespace {

void reconcile(ValuationReport& report, const Natural& direct, const char* what) {
  report.oracle_value = nu2(direct);
  if (*report.oracle_value != report.value)
    throw InvariantViolation(std::string(what) + ": closed form " + std::to_string(report.value) +
                             " != direct " + std::to_string(*report.oracle_value));
}

}  // namespace

ValuationQuery ValuationQuery::make(Natural p, std::uint64_t e) {
  require(e >= 1, "positive_exponent", "exponent e must be >= 1");
  require(is_prime(p), "prime_p", to_string(p) + " is not prime");
  return ValuationQuery{std::move(p), e};
}

const char* to_string(ValuationBranch b) {
  switch (b) {
    case ValuationBranch::odd_p_odd_e: return "odd_p_odd_e";
    case ValuationBranch::otherwise_zero: return "otherwise_zero";
    case ValuationBranch::even_e_case: return "even_e_case";
    case ValuationBranch::p_equals_2: return "p_equals_2";
  }
  return "unknown";
}

ValuationReport nu2_sigma(const ValuationQuery& q, OracleMode mode) {
  ValuationReport report;
  if (q.p != 2 && q.e % 2 == 1) {
    const std::uint64_t r = nu2_u64((q.e + 1) / 2);
    report.branch = ValuationBranch::odd_p_odd_e;
    report.r = r;
    report.value = nu2(q.p + 1) + r;
  } else {
    report.branch = ValuationBranch::otherwise_zero;
    report.value = 0;
  }
  if (mode == OracleMode::check) reconcile(report, sigma_prime_power(q.p, q.e), "nu2(sigma(p^e))");
  return report;
}

ValuationReport nu2_sigma_minus_one(const ValuationQuery& q, OracleMode mode) {
  ValuationReport report;
  if (q.p == 2) {
    report.branch = ValuationBranch::p_equals_2;
    report.value = 1;
  } else if (q.e % 2 == 1) {
    report.branch = ValuationBranch::odd_p_odd_e;
    report.value = 0;
  } else {
    const std::uint64_t r = nu2_u64(q.e / 2);
    report.branch = ValuationBranch::even_e_case;
    report.r = r;
    report.value = nu2(q.p + 1) + r;
  }
  if (mode == OracleMode::check)
    reconcile(report, sigma_prime_power(q.p, q.e) - 1, "nu2(sigma(p^e) - 1)");
  return report;
}

BroughanZhouResult broughan_zhou_equiv(const Natural& p, std::uint64_t e) {
  require(p != 2, "odd_prime_p", "the equivalence concerns odd primes p");
  require(e % 2 == 1, "odd_exponent", "the equivalence concerns odd exponents e");
  const auto query = ValuationQuery::make(p, e);
  BroughanZhouResult out;
  out.j = nu2(sigma_prime_power(query.p, query.e));
  out.nu2_product = nu2((query.p + 1) * Natural(from_u64(e + 1)));
  out.holds = out.nu2_product == out.j + 1;
  if (!out.holds)
    throw InvariantViolation("2-adic equivalence fails for p=" + to_string(p) +
                             ", e=" + std::to_string(e));
  return out;
}

}  // namespace oddmp
