#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "brute.hpp"
#include "oddmp/euler_part.hpp"

using namespace oddmp;

namespace {

Factorization F(std::vector<std::pair<unsigned long, std::uint64_t>> v) {
  std::vector<PrimePower> out;
  for (auto [p, e] : v) out.push_back({Natural(p), e});
  return Factorization::from_factors(std::move(out));
}

Natural N(std::uint64_t v) { return Natural(static_cast<unsigned long>(v)); }

using Pairs = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// Brute-force mod-16 table: pi, alpha = 1 mod 4 with pi(pi+1) = c(alpha+1) mod 16.
Pairs brute_mod16(std::uint32_t c) {
  Pairs out;
  for (std::uint32_t pi = 1; pi < 16; pi += 4)
    for (std::uint32_t a = 1; a < 16; a += 4)
      if ((pi * (pi + 1)) % 16 == (c * (a + 1)) % 16) out.emplace_back(pi, a);
  return out;
}

std::uint64_t sigma_mod(std::uint64_t p, std::uint64_t e, std::uint64_t m) {
  return mpz_class(brute::geometric_sum(p, e) % m).get_ui();
}

}  // namespace

TEST_CASE("sigma_coprime_to_q examples") {
  CHECK(sigma_coprime_to_q(13, 1, 5));
  CHECK_FALSE(sigma_coprime_to_q(11, 2, 5));
  // sigma(9) = 13, so 13 divides it: ord_13(3) = 3 and 2*1+1 = 3 = 0 mod 3.
  CHECK_FALSE(sigma_coprime_to_q(3, 1, 13));
  const auto b = sigma_coprime_branch(13, 1, 5);
  CHECK_FALSE(b.p_congruent_one);
  CHECK(b.modulus == 4);
  CHECK(b.residue == 3);
  const auto c = sigma_coprime_branch(11, 2, 5);
  CHECK(c.p_congruent_one);
  CHECK(c.modulus == 5);
  CHECK(c.residue == 0);
  CHECK_THROWS_AS(sigma_coprime_to_q(5, 1, 5), PreconditionError);
  CHECK_THROWS_AS(sigma_coprime_to_q(9, 1, 5), PreconditionError);
  CHECK_THROWS_AS(sigma_coprime_to_q(3, 0, 5), PreconditionError);
}

TEST_CASE("coprimality predicate matches gcd for small grid") {
  const auto primes = brute::odd_primes_below(30);
  for (auto p : primes)
    for (auto q : primes) {
      if (p == q) continue;
      for (std::uint64_t beta = 1; beta <= 6; ++beta)
        CHECK(sigma_coprime_to_q(N(p), beta, N(q)) == (sigma_mod(p, 2 * beta, q) != 0));
    }
}

TEST_CASE("euler_divisibility examples") {
  CHECK(euler_divisibility(SquarePartSpec::make(5, 1, {{13, 1}})).divides);
  CHECK_FALSE(euler_divisibility(SquarePartSpec::make(5, 1, {{11, 2}})).divides);
  const auto empty = euler_divisibility(SquarePartSpec::make(5, 1, {}));
  CHECK(empty.divides);
  CHECK(empty.reasons.empty());
  CHECK_THROWS_AS(SquarePartSpec::make(5, 1, {{13, 1}, {13, 2}}), PreconditionError);
}

TEST_CASE("Fermat criterion examples") {
  CHECK(fermat_index(3) == 0u);
  CHECK(fermat_index(5) == 1u);
  CHECK(fermat_index(17) == 2u);
  CHECK(fermat_index(257) == 3u);
  CHECK(fermat_index(65537) == 4u);
  CHECK_FALSE(fermat_index(7).has_value());
  CHECK_FALSE(fermat_index(9).has_value());

  const auto a = fermat_criterion(5, {1, 3});
  CHECK(a.certified);
  CHECK(a.product_mod_q == 1);
  CHECK_FALSE(a.justification.empty());
  CHECK_FALSE(fermat_criterion(5, {2}).certified);
  const auto c = fermat_criterion(3, {});
  CHECK(c.certified);
  CHECK(c.t == 0);
  CHECK_THROWS_AS(fermat_criterion(7, {1}), PreconditionError);
}

TEST_CASE("Fermat criterion soundness") {
  for (std::uint64_t q : {3, 5, 17, 257})
    for (auto p : brute::odd_primes_below(200)) {
      if (p == q) continue;
      for (std::uint64_t beta = 1; beta <= 8; ++beta)
        if ((2 * beta + 1) % q != 0) {
          CHECK(fermat_criterion(N(q), {beta}).certified);
          CHECK(sigma_mod(p, 2 * beta, q) != 0);
        }
    }
}

TEST_CASE("half_sigma_mod8 examples") {
  CHECK(half_sigma_mod8(5, 5) == 1);
  CHECK(half_sigma_mod8(13, 1) == 7);
  CHECK(half_sigma_mod8(5, 1) == 3);
  CHECK_THROWS_AS(half_sigma_mod8(7, 1), PreconditionError);
  CHECK_THROWS_AS(half_sigma_mod8(5, 3), PreconditionError);
  CHECK_THROWS_AS(half_sigma_mod8(9, 1), PreconditionError);
}

TEST_CASE("mod16 tables") {
  CHECK(mod16_solutions(1) == Pairs{{1, 1}, {5, 13}, {9, 9}, {13, 5}});
  CHECK(mod16_solutions(5) == Pairs{{1, 9}, {5, 5}, {9, 1}, {13, 13}});
  CHECK(mod16_solutions(3) == Pairs{{1, 5}, {5, 9}, {9, 13}, {13, 1}});
  CHECK(mod16_solutions(7) == Pairs{{1, 13}, {5, 1}, {9, 5}, {13, 9}});
  for (std::uint32_t c : {1u, 3u, 5u, 7u}) CHECK(mod16_solutions(c) == brute_mod16(c));
  CHECK_THROWS_AS(mod16_solutions(2), PreconditionError);
  CHECK_THROWS_AS(mod16_solutions(9), PreconditionError);
}

TEST_CASE("mod8_classify examples") {
  auto q = [](std::uint64_t m2) {
    return EulerFactorQuery::make(5, 1, factor(N(m2)));
  };
  CHECK(mod8_classify(q(9)).implied == Mod8Relation::same_mod8);
  CHECK(mod8_classify(q(9)).sigma_m2_mod4 == 1);
  CHECK(mod8_classify(EulerFactorQuery::make(13, 1, factor(25))).implied ==
        Mod8Relation::shifted_by_4);
  CHECK(mod8_classify(q(1)).implied == Mod8Relation::same_mod8);
  CHECK_FALSE(mod8_classify(q(9)).observed.has_value());

  const auto asserted = mod8_classify(q(9), Mod8Mode::assert_two_perfect);
  REQUIRE(asserted.observed.has_value());
  CHECK(*asserted.observed == Mod8Relation::shifted_by_4);  // 5 - 1 = 4 mod 8
  CHECK(*asserted.consistent == false);

  CHECK_THROWS_AS(mod8_classify(EulerFactorQuery::make(5, 1, std::nullopt)), PreconditionError);
  CHECK_THROWS_AS(EulerFactorQuery::make(5, 1, factor(25)), PreconditionError);
  CHECK_THROWS_AS(EulerFactorQuery::make(5, 1, factor(27)), PreconditionError);
}

TEST_CASE("remark_parity examples") {
  CHECK(remark_parity(F({{5, 2}})).count == 1);
  CHECK(remark_parity(F({{5, 2}})).predicts_shift);
  CHECK(remark_parity(F({{3, 2}})).count == 0);
  CHECK_FALSE(remark_parity(F({{3, 2}})).predicts_shift);
  CHECK(remark_parity(F({{5, 2}, {13, 2}})).count == 2);
  CHECK_FALSE(remark_parity(F({{5, 2}, {13, 2}})).predicts_shift);
  CHECK(remark_parity(F({{5, 4}})).count == 0);
}

TEST_CASE("remark parity agrees with sigma(M^2) mod 4 on random squares") {
  const auto primes = brute::odd_primes_below(100);
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 2000; ++i) {
    std::set<std::uint64_t> chosen;
    const std::size_t count = rng() % 4;
    while (chosen.size() < count) chosen.insert(primes[rng() % primes.size()]);
    std::vector<std::pair<unsigned long, std::uint64_t>> parts;
    std::uint64_t s_mod4 = 1;
    for (auto p : chosen) {
      const std::uint64_t e = 2 * (1 + rng() % 4);
      parts.emplace_back(p, e);
      s_mod4 = s_mod4 * sigma_mod(p, e, 4) % 4;
    }
    const auto m2 = F(parts);
    CHECK(remark_parity(m2).predicts_shift == (s_mod4 == 3));
  }
}

TEST_CASE("omega_obstruction examples") {
  const auto a = omega_obstruction(F({{30029, 1}}), 1);
  CHECK(a.sigma_pi == 30030);
  CHECK(a.odd_part == 15015);
  CHECK(a.omega == 5);
  CHECK_FALSE(a.parity_ok);
  const auto b = omega_obstruction(F({{5, 1}}), 1);
  CHECK(b.sigma_pi == 6);
  CHECK(b.odd_part == 3);
  CHECK(b.omega == 1);
  CHECK_FALSE(b.parity_ok);
  const auto c = omega_obstruction(F({{13, 1}}), 1);
  CHECK(c.odd_part == 7);
  CHECK(c.omega == 1);
  CHECK_FALSE(c.parity_ok);
  // sigma(5^5)/2 = 1953 = 3^2 * 7 * 31.
  const auto d = omega_obstruction(F({{5, 5}}), 1);
  CHECK(d.omega == 4);
  CHECK(d.parity_ok);
}

TEST_CASE("omega_obstruction named preconditions") {
  auto hyp = [](auto&& fn) {
    try {
      fn();
    } catch (const PreconditionError& e) {
      return e.hypothesis();
    }
    return std::string("none");
  };
  CHECK(hyp([] { omega_obstruction(F({{5, 1}}), 0); }) == "k_exponent_positive");
  CHECK(hyp([] { omega_obstruction(F({{2, 1}}), 1); }) == "euler_part_odd");
  CHECK(hyp([] { omega_obstruction(F({{5, 2}}), 1); }) == "euler_part_exponents_odd");
  CHECK(hyp([] { omega_obstruction(F({{3, 1}}), 2); }) == "even_count_3_mod_4");
  CHECK(hyp([] { omega_obstruction(F({{5, 1}}), 2); }) == "nu2_sigma_equals_k");
}
