#include <doctest.h>

#include "brute.hpp"
#include "oddmp/valuation.hpp"

using namespace oddmp;

namespace {

std::uint64_t v1(unsigned long p, std::uint64_t e) {
  return nu2_sigma(ValuationQuery::make(p, e)).value;
}
std::uint64_t v2(unsigned long p, std::uint64_t e) {
  return nu2_sigma_minus_one(ValuationQuery::make(p, e)).value;
}

}  // namespace

TEST_CASE("nu2_sigma examples") {
  CHECK(v1(3, 1) == 2);
  CHECK(v1(7, 3) == 4);
  CHECK(v1(5, 2) == 0);
  CHECK(v1(2, 9) == 0);
  const auto r = nu2_sigma(ValuationQuery::make(7, 3));
  CHECK(r.branch == ValuationBranch::odd_p_odd_e);
  CHECK(r.r == 1);
  CHECK(r.oracle_value == 4);
  CHECK(nu2_sigma(ValuationQuery::make(7, 3), OracleMode::skip).oracle_value == std::nullopt);
}

TEST_CASE("nu2_sigma_minus_one examples") {
  CHECK(v2(3, 2) == 2);
  CHECK(v2(2, 5) == 1);
  CHECK(v2(5, 4) == 2);
  CHECK(v2(3, 1) == 0);
  CHECK(nu2_sigma_minus_one(ValuationQuery::make(5, 4)).branch == ValuationBranch::even_e_case);
  CHECK(nu2_sigma_minus_one(ValuationQuery::make(2, 5)).branch == ValuationBranch::p_equals_2);
}

TEST_CASE("valuation preconditions") {
  CHECK_THROWS_AS(ValuationQuery::make(9, 3), PreconditionError);
  CHECK_THROWS_AS(ValuationQuery::make(3, 0), PreconditionError);
  try {
    ValuationQuery::make(3, 0);
  } catch (const PreconditionError& e) {
    CHECK(e.hypothesis() == "positive_exponent");
  }
}

TEST_CASE("closed forms agree with direct summation on a small grid") {
  for (auto p : brute::primes_below(60))
    for (std::uint64_t e = 1; e <= 30; ++e) {
      const auto s = brute::geometric_sum(p, e);
      CHECK(v1(p, e) == brute::nu2(s));
      CHECK(v2(p, e) == brute::nu2(mpz_class(s - 1)));
    }
}

TEST_CASE("Broughan-Zhou examples") {
  CHECK(broughan_zhou_equiv(7, 3) == BroughanZhouResult{4, 5, true});
  CHECK(broughan_zhou_equiv(3, 1) == BroughanZhouResult{2, 3, true});
  // sigma(5^5) = 3906 = 2 * 1953 and 6 * 6 = 36 = 2^2 * 9.
  CHECK(broughan_zhou_equiv(5, 5) == BroughanZhouResult{1, 2, true});
  CHECK_THROWS_AS(broughan_zhou_equiv(2, 3), PreconditionError);
  CHECK_THROWS_AS(broughan_zhou_equiv(3, 2), PreconditionError);
}

TEST_CASE("large prime valuation uses the closed form") {
  const Natural p("340282366920938463463374607431768211507");  // = 3 mod 4
  const auto r = nu2_sigma(ValuationQuery::make(p, 3));
  Natural s = 1 + p + p * p + p * p * p;
  CHECK(r.value == brute::nu2(s));
}
