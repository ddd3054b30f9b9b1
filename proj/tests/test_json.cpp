#include <doctest.h>

#include "oddmp/euler_part.hpp"
#include "oddmp/json_io.hpp"
#include "oddmp/structure.hpp"
#include "oddmp/valuation.hpp"

using namespace oddmp;

namespace {

template <class T>
void round_trip(const T& x) {
  const json j = x;
  const T back = json::parse(j.dump()).get<T>();
  CHECK(back == x);
  CHECK(json(back).dump() == j.dump());
}

}  // namespace

TEST_CASE("integers beyond 64 bits are strings") {
  const Natural big("340282366920938463463374607431768211507");
  CHECK(json(big).is_string());
  CHECK(json(Natural(12)).is_number_unsigned());
  CHECK(json(Natural("18446744073709551615")).is_number_unsigned());
  CHECK(json(Natural("18446744073709551616")).is_string());
  CHECK(json::parse("\"18446744073709551616\"").get<Natural>() == Natural("18446744073709551616"));
  CHECK_THROWS_AS(json::parse("-3").get<Natural>(), PreconditionError);
  CHECK_THROWS_AS(json::parse("1.5").get<Natural>(), PreconditionError);
}

TEST_CASE("every result type round-trips") {
  const Natural big("340282366920938463463374607431768211507");
  round_trip(factor(Natural(30030)));
  round_trip(Factorization::from_factors({{Natural(3), 1}, {big, 3}}));
  round_trip(Factorization{});
  round_trip(nu2_sigma(ValuationQuery::make(7, 3)));
  round_trip(nu2_sigma_minus_one(ValuationQuery::make(5, 4), OracleMode::skip));
  round_trip(broughan_zhou_equiv(5, 5));
  round_trip(CongruenceClass{7, 16});
  for (const auto& s : enumerate_shapes(48)) round_trip(s);
  round_trip(split_euler_part(factor(Natural(6615))));
  round_trip(valuation_identity_check(factor(Natural(675))));
  round_trip(sigma_coprime_branch(13, 1, 5));
  round_trip(euler_divisibility(SquarePartSpec::make(5, 1, {{13, 1}, {11, 2}})));
  round_trip(fermat_criterion(17, {1, 2, 3}));
  round_trip(mod8_classify(EulerFactorQuery::make(5, 1, factor(Natural(9))), Mod8Mode::assert_two_perfect));
  round_trip(mod8_classify(EulerFactorQuery::make(13, 5, factor(Natural(25)))));
  round_trip(remark_parity(factor(Natural(25 * 169))));
  round_trip(omega_obstruction(factor(Natural(30029)), 1));
}

TEST_CASE("shape JSON layout") {
  const json j = enumerate_shapes(2).front();
  CHECK(j.at("k") == 2);
  CHECK(j.at("s") == 1);
  CHECK(j.at("prime_classes") == json::parse(R"([{"residue":1,"modulus":4}])"));
  CHECK(j.at("exponent_classes") == json::parse(R"([{"residue":1,"modulus":4}])"));
}
