#include "oddmp/oracle.hpp"

#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "oddmp/arith.hpp"
#include "oddmp/euler_part.hpp"
#include "oddmp/search.hpp"
#include "oddmp/structure.hpp"
#include "oddmp/valuation.hpp"

namespace oddmp {

namespace {

using Params = std::map<std::string, std::uint64_t>;

class Tally {
 public:
  /// Records one instance; keeps the first failure.
  template <class Describe>
  void check(bool ok, Describe&& describe) {
    ++instances;
    if (!ok && !counterexample) counterexample = describe();
  }

  std::uint64_t instances = 0;
  std::optional<std::string> counterexample;
};

// 1 + p + ... + p^e by repeated multiplication, no closed form.
Natural power_sum(const Natural& p, std::uint64_t e) {
  Natural total = 1, power = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    power *= p;
    total += power;
  }
  return total;
}

std::vector<std::uint64_t> primes_below(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint32_t p : small_primes()) {
    if (p >= limit) break;
    out.push_back(p);
  }
  return out;
}

template <class... Args>
std::string fmt(Args&&... args) {
  std::ostringstream os;
  ((os << args), ...);
  return os.str();
}

// --- families --------------------------------------------------------------

void nu2_sigma_family(const Params& prm, Tally& t) {
  for (auto p : primes_below(prm.at("p_max")))
    for (std::uint64_t e = 1; e <= prm.at("e_max"); ++e) {
      const auto report = nu2_sigma(ValuationQuery{from_u64(p), e}, OracleMode::skip);
      const auto direct = nu2(power_sum(from_u64(p), e));
      t.check(report.value == direct, [&] { return fmt("p=", p, " e=", e, " formula=", report.value, " direct=", direct); });
    }
}

void nu2_sigma_minus_one_family(const Params& prm, Tally& t) {
  for (auto p : primes_below(prm.at("p_max")))
    for (std::uint64_t e = 1; e <= prm.at("e_max"); ++e) {
      const auto report = nu2_sigma_minus_one(ValuationQuery{from_u64(p), e}, OracleMode::skip);
      const auto direct = nu2(power_sum(from_u64(p), e) - 1);
      t.check(report.value == direct, [&] { return fmt("p=", p, " e=", e, " formula=", report.value, " direct=", direct); });
    }
}

void recurrence_family(const Params& prm, Tally& t) {
  for (auto p : primes_below(prm.at("p_max")))
    for (std::uint64_t e = 2; e <= prm.at("e_max"); ++e) {
      const Natural pn = from_u64(p);
      const auto lhs = nu2(power_sum(pn, e) - 1);
      const auto rhs = nu2(pn) + nu2(power_sum(pn, e - 1));
      t.check(lhs == rhs, [&] { return fmt("p=", p, " e=", e, " lhs=", lhs, " rhs=", rhs); });
    }
}

void broughan_zhou_family(const Params& prm, Tally& t) {
  for (auto p : primes_below(prm.at("p_max"))) {
    if (p == 2) continue;
    for (std::uint64_t e = 1; e <= prm.at("e_max"); e += 2) {
      bool ok;
      try {
        ok = broughan_zhou_equiv(from_u64(p), e).holds;
      } catch (const InvariantViolation&) {
        ok = false;
      }
      t.check(ok, [&] { return fmt("p=", p, " e=", e); });
    }
  }
}

void shape_identity_family(const Params& prm, Tally& t) {
  for (std::uint64_t n = 1; n <= prm.at("n_max"); n += 2) {
    const auto f = factor(from_u64(n));
    const auto c = valuation_identity_check(f);
    const auto direct = nu2_u64(sigma_by_divisors(n));
    t.check(c.holds && c.lhs == direct, [&] { return fmt("n=", n, " lhs=", c.lhs, " rhs=", c.rhs, " direct=", direct); });
  }
}

void coprime_predicate_family(const Params& prm, Tally& t) {
  const auto primes = primes_below(prm.at("prime_max"));
  for (auto p : primes) {
    if (p == 2) continue;
    for (auto q : primes) {
      if (q == 2 || q == p) continue;
      for (std::uint64_t beta = 1; beta <= prm.at("beta_max"); ++beta) {
        const bool predicate = sigma_coprime_to_q(from_u64(p), beta, from_u64(q));
        const bool direct = gcd(from_u64(q), power_sum(from_u64(p), 2 * beta)) == 1;
        t.check(predicate == direct, [&] { return fmt("p=", p, " beta=", beta, " q=", q); });
      }
    }
  }
}

void fermat_family(const Params& prm, Tally& t) {
  for (std::uint64_t q : {3u, 5u, 17u, 257u}) {
    for (auto p : primes_below(prm.at("p_max"))) {
      if (p == 2 || p == q) continue;
      for (std::uint64_t beta = 1; beta <= prm.at("beta_max"); ++beta) {
        const bool certified = fermat_criterion(from_u64(q), {beta}).certified;
        if (!certified) continue;
        const bool direct = power_sum(from_u64(p), 2 * beta) % from_u64(q) != 0;
        t.check(direct, [&] { return fmt("q=", q, " p=", p, " beta=", beta); });
      }
    }
  }
}

void half_sigma_family(const Params& prm, Tally& t) {
  for (auto pi : primes_below(prm.at("pi_max"))) {
    if (pi % 4 != 1) continue;
    for (std::uint64_t alpha = 1; alpha <= prm.at("alpha_max"); alpha += 4) {
      const auto formula = half_sigma_mod8(from_u64(pi), alpha);
      const Natural half = power_sum(from_u64(pi), alpha) / 2;
      const auto direct = mpz_fdiv_ui(half.get_mpz_t(), 8);
      t.check(formula == direct, [&] { return fmt("pi=", pi, " alpha=", alpha, " formula=", formula, " direct=", direct); });
    }
  }
}

void mod16_family(const Params&, Tally& t) {
  for (std::uint32_t c : {1u, 3u, 5u, 7u}) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> brute;
    for (std::uint32_t pi = 0; pi < 16; ++pi)
      for (std::uint32_t alpha = 0; alpha < 16; ++alpha)
        if (pi % 4 == 1 && alpha % 4 == 1 && (pi * (pi + 1)) % 16 == (c * (alpha + 1)) % 16)
          brute.emplace_back(pi, alpha);
    t.check(mod16_solutions(c) == brute, [&] { return fmt("c=", c); });
  }
}

void remark_parity_family(const Params& prm, Tally& t) {
  std::mt19937_64 rng(prm.at("seed"));
  std::vector<std::uint64_t> odd_primes;
  for (auto p : primes_below(prm.at("prime_max")))
    if (p != 2) odd_primes.push_back(p);
  std::uniform_int_distribution<std::size_t> pick(0, odd_primes.size() - 1);
  std::uniform_int_distribution<int> count(0, 4), half_exp(1, 4);
  for (std::uint64_t i = 0; i < prm.at("samples"); ++i) {
    std::map<std::uint64_t, std::uint64_t> m;
    for (int j = count(rng); j > 0; --j) m[odd_primes[pick(rng)]] = 2 * half_exp(rng);
    std::vector<PrimePower> powers;
    for (const auto& [p, e] : m) powers.push_back({from_u64(p), e});
    const auto sq = Factorization::trusted(std::move(powers));
    const auto parity = remark_parity(sq);
    // sigma(M^2) = 3 (mod 4) is exactly the shifted class.
    const bool shifted = mpz_fdiv_ui(sigma(sq).get_mpz_t(), 4) == 3;
    t.check(parity.predicts_shift == shifted, [&] { return fmt("M^2=", sq.to_string()); });
  }
}

void multiplicative_family(const Params& prm, Tally& t) {
  const std::uint64_t a_max = prm.at("a_max"), b_max = prm.at("b_max");
  std::vector<std::uint64_t> table(std::max(a_max, b_max) + 1);
  for (std::uint64_t n = 1; n < table.size(); ++n) table[n] = sigma_by_divisors(n);
  for (std::uint64_t a = 1; a <= a_max; ++a)
    for (std::uint64_t b = 1; b <= b_max; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto s = sigma_u64(a * b);
      t.check(s == table[a] * table[b], [&] { return fmt("a=", a, " b=", b); });
    }
}

void factor_roundtrip_family(const Params& prm, Tally& t) {
  for (std::uint64_t n = 1; n <= prm.at("n_max"); ++n) {
    const auto f = factor(from_u64(n));
    bool ok = f.value() == from_u64(n);
    for (std::size_t i = 0; ok && i < f.size(); ++i)
      ok = f.factors()[i].exponent > 0 && is_prime(f.factors()[i].prime) &&
           (i == 0 || f.factors()[i - 1].prime < f.factors()[i].prime);
    t.check(ok, [&] { return fmt("n=", n); });
  }
}

void ord_family(const Params& prm, Tally& t) {
  for (auto q : primes_below(prm.at("q_max")))
    for (std::uint64_t m = 1; m < q; ++m) {
      const auto d = to_u64(ord(from_u64(q), from_u64(m)));
      std::uint64_t brute = 1, x = m % q;
      while (x != 1) {
        x = x * m % q;
        ++brute;
      }
      t.check(d == brute && (q - 1) % d == 0, [&] { return fmt("q=", q, " m=", m, " ord=", d, " brute=", brute); });
    }
}

void big_omega_family(const Params& prm, Tally& t) {
  std::mt19937_64 rng(prm.at("seed"));
  std::uniform_int_distribution<std::uint64_t> pick(1, prm.at("n_max"));
  for (std::uint64_t i = 0; i < prm.at("samples"); ++i) {
    const auto a = pick(rng), b = pick(rng);
    const auto lhs = big_omega(from_u64(a) * from_u64(b));
    const auto rhs = big_omega(from_u64(a)) + big_omega(from_u64(b));
    t.check(lhs == rhs, [&] { return fmt("a=", a, " b=", b); });
  }
}

void sigma_enumeration_family(const Params& prm, Tally& t) {
  for (std::uint64_t n = 1; n <= prm.at("n_max"); ++n) {
    const auto formula = sigma(factor(from_u64(n)));
    const auto direct = sigma_by_divisors(n);
    t.check(formula == from_u64(direct), [&] { return fmt("n=", n); });
  }
}

struct Family {
  const char* name;
  const char* description;
  Params defaults;
  std::function<void(const Params&, Tally&)> run;
};

const std::vector<Family>& families() {
  static const std::vector<Family> all = {
      {"nu2-sigma", "closed form of nu2(sigma(p^e)) vs direct, primes p < p_max, 1 <= e <= e_max",
       {{"p_max", 500}, {"e_max", 100}}, nu2_sigma_family},
      {"nu2-sigma-minus-one", "closed form of nu2(sigma(p^e) - 1) vs direct",
       {{"p_max", 500}, {"e_max", 100}}, nu2_sigma_minus_one_family},
      {"nu2-recurrence", "nu2(sigma(p^e) - 1) = nu2(p) + nu2(sigma(p^(e-1))), 2 <= e <= e_max",
       {{"p_max", 100}, {"e_max", 50}}, recurrence_family},
      {"broughan-zhou", "2^j || sigma(p^e) iff 2^(j+1) || (p+1)(e+1), odd p, odd e",
       {{"p_max", 500}, {"e_max", 99}}, broughan_zhou_family},
      {"shape-identity", "nu2(sigma(n)) = s + sum over the Euler part, every odd n <= n_max",
       {{"n_max", 100000}}, shape_identity_family},
      {"coprime-predicate", "order-based coprimality of q and sigma(p^(2 beta)) vs gcd",
       {{"prime_max", 60}, {"beta_max", 10}}, coprime_predicate_family},
      {"fermat-criterion", "Fermat prime q never divides sigma(p^(2 beta)) when 2 beta + 1 is prime to q",
       {{"p_max", 200}, {"beta_max", 8}}, fermat_family},
      {"half-sigma-mod8", "(sigma(pi^alpha)/2) mod 8 closed form vs direct, pi = alpha = 1 (mod 4)",
       {{"pi_max", 1000}, {"alpha_max", 17}}, half_sigma_family},
      {"mod16-tables", "(pi, alpha) mod 16 tables vs brute force of pi(pi+1) = c(alpha+1)", {},
       mod16_family},
      {"remark-parity", "parity count of p = 1 (mod 4), e = 2 (mod 4) vs sigma(M^2) mod 4",
       {{"samples", 10000}, {"prime_max", 100}, {"seed", 20100101}}, remark_parity_family},
      {"sigma-multiplicative", "sigma(ab) = sigma(a) sigma(b) for coprime a <= a_max, b <= b_max",
       {{"a_max", 2000}, {"b_max", 2000}}, multiplicative_family},
      {"factor-roundtrip", "factor(n) multiplies back with sorted distinct primes, n <= n_max",
       {{"n_max", 1000000}}, factor_roundtrip_family},
      {"ord-divides", "ord_q(m) equals the brute-force order and divides q - 1",
       {{"q_max", 100}}, ord_family},
      {"big-omega-additive", "Omega(ab) = Omega(a) + Omega(b) on random pairs",
       {{"n_max", 1000000}, {"samples", 10000}, {"seed", 7}}, big_omega_family},
      {"sigma-enumeration", "factored sigma vs divisor enumeration, n <= n_max",
       {{"n_max", 100000}}, sigma_enumeration_family},
  };
  return all;
}

const Family& find_family(const std::string& name) {
  for (const auto& f : families())
    if (name == f.name) return f;
  throw PreconditionError("oracle_family", "unknown oracle family '" + name + "'");
}

}  // namespace

std::vector<std::pair<std::string, std::string>> oracle_families() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& f : families()) out.emplace_back(f.name, f.description);
  return out;
}

std::map<std::string, std::uint64_t> oracle_defaults(const std::string& family) {
  return find_family(family).defaults;
}

OracleReport oracle_suite(const OracleScope& scope) {
  const Family& family = find_family(scope.family);
  Params params = family.defaults;
  for (const auto& [key, value] : scope.params) {
    require(params.count(key) == 1, "oracle_parameter",
            "family '" + scope.family + "' has no parameter '" + key + "'");
    params[key] = value;
  }
  const auto start = std::chrono::steady_clock::now();
  Tally tally;
  family.run(params, tally);
  OracleReport report;
  report.family = scope.family;
  report.params = std::move(params);
  report.instances = tally.instances;
  report.counterexample = std::move(tally.counterexample);
  report.passed = !report.counterexample.has_value();
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace oddmp
