// Acceptance suite: one line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "brute.hpp"
#include "corpus.hpp"
#include "oddmp/certificate.hpp"
#include "oddmp/cli.hpp"
#include "oddmp/euler_part.hpp"
#include "oddmp/json_io.hpp"
#include "oddmp/structure.hpp"
#include "oddmp/valuation.hpp"

using namespace oddmp;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

Natural N(std::uint64_t v) { return Natural(static_cast<unsigned long>(v)); }

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli_call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

json cls(std::uint64_t r, std::uint64_t m) { return {{"residue", r}, {"modulus", m}}; }

Outcome nu2_grid(bool minus_one) {
  std::uint64_t checked = 0, mismatches = 0;
  std::string first;
  const auto primes = brute::odd_primes_below(500);
  for (auto p : primes) {
    mpz_class sum = 1, term = 1;
    for (std::uint64_t e = 1; e <= 100; ++e) {
      term *= p;
      sum += term;  // sum = 1 + p + ... + p^e
      const auto q = ValuationQuery::make(N(p), e);
      const std::uint64_t formula = minus_one ? nu2_sigma_minus_one(q, OracleMode::skip).value
                                              : nu2_sigma(q, OracleMode::skip).value;
      const std::uint64_t direct = minus_one ? brute::nu2(mpz_class(sum - 1)) : brute::nu2(sum);
      ++checked;
      if (formula != direct && mismatches++ == 0)
        first = " first (p, e) = (" + std::to_string(p) + ", " + std::to_string(e) + ")";
    }
  }
  return {mismatches == 0 && checked == primes.size() * 100,
          std::to_string(checked) + " pairs, " + std::to_string(mismatches) + " mismatches" + first};
}

Outcome criterion1() {
  const auto t0 = Clock::now();
  auto r = nu2_grid(false);
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, ", %.2f s (limit 30 s)", secs);
  r.detail += buf;
  r.pass = r.pass && secs < 30.0;
  return r;
}

Outcome criterion2() { return nu2_grid(true); }

Outcome criterion3() {
  std::uint64_t checked = 0, failures = 0;
  for (auto p : brute::odd_primes_below(500))
    for (std::uint64_t e = 1; e <= 99; e += 2) {
      const auto r = broughan_zhou_equiv(N(p), e);
      const std::uint64_t j = brute::nu2(brute::geometric_sum(p, e));
      const std::uint64_t prod = brute::nu2((p + 1) * (e + 1));
      ++checked;
      if (!r.holds || r.j != j || r.nu2_product != prod || prod != j + 1) ++failures;
    }
  return {failures == 0, std::to_string(checked) + " (p, e) pairs, " + std::to_string(failures) + " failures"};
}

Outcome criterion4() {
  Outcome o;
  const auto k2 = cli_call({"shapes", "--k", "2"});
  const auto s2 = json_lines(k2.out);
  const bool ok2 = k2.code == 0 && s2.size() == 1 && s2[0].at("s") == 1 &&
                   s2[0].at("prime_classes") == json::array({cls(1, 4)}) &&
                   s2[0].at("exponent_classes") == json::array({cls(1, 4)});
  const auto k4 = cli_call({"shapes", "--k", "4"});
  const auto s4 = json_lines(k4.out);
  bool ok4 = k4.code == 0 && s4.size() == 3;
  if (ok4) {
    // p = 1 (mod 4), e = 3 (mod 8); p = 3 (mod 8), e = 1 (mod 4); s = 2 all 1 (mod 4).
    ok4 = s4[0].at("s") == 1 && s4[0].at("prime_classes") == json::array({cls(1, 4)}) &&
          s4[0].at("exponent_classes") == json::array({cls(3, 8)}) && s4[1].at("s") == 1 &&
          s4[1].at("prime_classes") == json::array({cls(3, 8)}) &&
          s4[1].at("exponent_classes") == json::array({cls(1, 4)}) && s4[2].at("s") == 2 &&
          s4[2].at("prime_classes") == json::array({cls(1, 4), cls(1, 4)}) &&
          s4[2].at("exponent_classes") == json::array({cls(1, 4), cls(1, 4)});
  }
  o.pass = ok2 && ok4;
  o.detail = "k=2: " + std::to_string(s2.size()) + " shape(s) " + (ok2 ? "match" : "DIFFER") +
             "; k=4: " + std::to_string(s4.size()) + " shapes " + (ok4 ? "match" : "DIFFER");
  return o;
}

Outcome criterion5() {
  const std::uint32_t limit = 100'000;
  const brute::Sieve sieve(limit);
  std::uint64_t checked = 0, failures = 0;
  for (std::uint32_t n = 1; n <= limit; n += 2) {
    std::vector<PrimePower> pps;
    mpz_class direct_sigma = 1;
    std::uint64_t s = 0, rhs = 0;
    for (auto [p, e] : sieve.factor(n)) {
      pps.push_back({N(p), e});
      direct_sigma *= brute::geometric_sum(p, e);
      if (e % 2 == 1) {
        ++s;
        rhs += brute::nu2((p + 1) / 2) + brute::nu2((e + 1) / 2);
      }
    }
    rhs += s;
    const auto check = valuation_identity_check(Factorization::from_factors(std::move(pps)));
    ++checked;
    if (!check.holds || check.lhs != brute::nu2(direct_sigma) || check.rhs != rhs) ++failures;
  }
  return {failures == 0 && checked == 50'000,
          std::to_string(checked) + " odd n, " + std::to_string(failures) + " failures"};
}

Outcome criterion6() {
  std::uint64_t checked = 0, mismatches = 0;
  const auto primes = brute::odd_primes_below(60);
  for (auto p : primes)
    for (auto q : primes) {
      if (p == q) continue;
      for (std::uint64_t beta = 1; beta <= 10; ++beta) {
        const mpz_class s = brute::geometric_sum(p, 2 * beta);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), s.get_mpz_t(), mpz_class(static_cast<unsigned long>(q)).get_mpz_t());
        ++checked;
        if (sigma_coprime_to_q(N(p), beta, N(q)) != (g == 1)) ++mismatches;
      }
    }
  return {mismatches == 0, std::to_string(checked) + " triples, " + std::to_string(mismatches) + " mismatches"};
}

Outcome criterion7() {
  using Pairs = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
  const std::vector<std::pair<std::uint32_t, Pairs>> tables = {
      {1, {{1, 1}, {5, 13}, {9, 9}, {13, 5}}},
      {5, {{1, 9}, {5, 5}, {9, 1}, {13, 13}}},
      {3, {{1, 5}, {5, 9}, {9, 13}, {13, 1}}},
      {7, {{1, 13}, {5, 1}, {9, 5}, {13, 9}}},
  };
  int ok = 0;
  for (const auto& [c, expected] : tables) {
    Pairs brute_force;
    for (std::uint32_t pi = 1; pi < 16; pi += 4)
      for (std::uint32_t a = 1; a < 16; a += 4)
        if ((pi * (pi + 1)) % 16 == (c * (a + 1)) % 16) brute_force.emplace_back(pi, a);
    const auto got = mod16_solutions(c);
    if (got == expected && got == brute_force) ++ok;
  }
  return {ok == 4, std::to_string(ok) + "/4 tables match the stated tables and brute force over 16 pairs"};
}

Outcome criterion8() {
  std::uint64_t checked = 0, mismatches = 0;
  for (auto pi : brute::primes_below(1000)) {
    if (pi % 4 != 1) continue;
    for (std::uint64_t alpha : {1, 5, 9, 13, 17}) {
      const mpz_class half = brute::geometric_sum(pi, alpha) / 2;
      const std::uint64_t direct = mpz_class(half % 8).get_ui();
      ++checked;
      if (half_sigma_mod8(N(pi), alpha) != direct) ++mismatches;
    }
  }
  return {mismatches == 0 && checked == 400,
          std::to_string(checked) + " (pi, alpha) pairs, " + std::to_string(mismatches) + " mismatches"};
}

const Witness* find_witness(const json& cert, const std::string& name, Certificate& holder) {
  holder = cert.get<Certificate>();
  return holder.find(name);
}

Outcome criterion9() {
  Outcome o;
  std::vector<std::string> notes;

  const auto a = cli_call({"certify", "--pi", "30029", "--m-constraint", "all-3-mod-4"});
  Certificate ca;
  bool ok_a = a.code == 2;
  if (ok_a) {
    const json j = json::parse(a.out);
    const Witness* w = find_witness(j, "omega", ca);
    ok_a = j.at("kind") == "omega_parity" && w && w->value == 5;
  }
  notes.push_back(std::string("30029 omega_parity Omega=5 exit 2 ") + (ok_a ? "ok" : "FAILED"));

  const auto b = cli_call({"certify", "--pi", "41", "--alpha", "13", "--q", "5"});
  Certificate cb;
  bool ok_b = b.code == 2;
  if (ok_b) {
    const json j = json::parse(b.out);
    const Witness* w = find_witness(j, "sigma_euler_part_mod_q", cb);
    const Witness* excl = cb.find("beta_excluded_residue");
    ok_b = j.at("kind") == "fermat_divisibility_contradiction" && w && w->value == 4 && excl &&
           excl->value == 2;
  }
  notes.push_back(std::string("41^13 5^(2 beta) Fermat sigma=4 mod 5 ") + (ok_b ? "ok" : "FAILED"));

  const auto c = cli_call({"certify", "--pi", "209", "--m-constraint", "all-3-mod-4"});
  const bool ok_c = c.code == 1 && c.err.find("composite") != std::string::npos &&
                    c.err.find("209 = 11*19") != std::string::npos;
  notes.push_back(std::string("209 rejected as composite ") + (ok_c ? "ok" : "FAILED"));

  o.pass = ok_a && ok_b && ok_c;
  for (std::size_t i = 0; i < notes.size(); ++i) o.detail += (i ? "; " : "") + notes[i];
  return o;
}

Outcome criterion10() {
  struct Case {
    std::vector<std::string> args;
    json expected;
  };
  const std::vector<Case> cases = {
      {{"search", "--k", "2", "--bound", "10000", "--workers", "4"}, json::parse("[6,28,496,8128]")},
      {{"search", "--k", "3", "--bound", "600000", "--workers", "4"}, json::parse("[120,672,523776]")},
      {{"search", "--k", "2", "--bound", "1000000", "--odd", "--workers", "4"}, json::array()},
  };
  Outcome o;
  for (const auto& c : cases) {
    const auto t0 = Clock::now();
    const auto r = cli_call(c.args);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool ok = r.code == 0 && json::parse(r.out).at("hits") == c.expected && secs < 60.0;
    o.pass = o.pass && ok;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s%s %.2f s", o.detail.empty() ? "" : "; ", ok ? "ok" : "FAILED", secs);
    o.detail += buf;
  }
  return o;
}

Outcome criterion11() {
  std::uint64_t built = 0, valid = 0;
  auto check = [&](const CandidateFamily& fam) {
    std::optional<Certificate> cert;
    try {
      cert = build_certificate(fam);
    } catch (const PreconditionError&) {
      return;
    }
    if (!cert) return;
    ++built;
    const auto reparsed = json::parse(json(*cert).dump()).get<Certificate>();
    if (check_certificate(reparsed).valid) ++valid;
  };
  for (const auto& fam : corpus::candidate_families()) check(fam);
  check(corpus::family_30029());
  check(corpus::family_41_13());
  check(corpus::family_class_1_20());
  return {built > 0 && valid == built,
          std::to_string(valid) + "/" + std::to_string(built) + " certificates pass the checker"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"nu2(sigma(p^e)) closed form, odd p < 500, e <= 100", criterion1},
      {"nu2(sigma(p^e) - 1) closed form, same grid", criterion2},
      {"Broughan-Zhou equivalence, odd p < 500, odd e <= 99", criterion3},
      {"shapes for k = 2 and k = 4", criterion4},
      {"valuation identity for every odd n <= 10^5", criterion5},
      {"coprimality predicate vs gcd, p != q < 60, beta <= 10", criterion6},
      {"mod 16 tables", criterion7},
      {"half_sigma_mod8 for pi = 1 (mod 4) < 1000", criterion8},
      {"certify: 30029, 41^13 family, 209 rejection", criterion9},
      {"search: perfect, 3-perfect and odd perfect ranges", criterion10},
      {"certificate corpus passes the independent checker", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << (i + 1 < 10 ? " " : "") << i + 1 << "] "
              << criteria[i].first << " -- " << o.detail << '\n';
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
