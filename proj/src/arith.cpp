#include "oddmp/arith.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>

namespace oddmp {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::vector<std::uint32_t> sieve(std::uint32_t limit) {
  std::vector<bool> composite(limit, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = static_cast<u64>(i) * i; j < limit; j += i) composite[j] = true;
  }
  return primes;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned r) {
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < r; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// Pollard rho with Brent cycle detection on 64-bit operands. Returns a
// nontrivial divisor of the odd composite n.
u64 brent_u64(u64 n) {
  constexpr u64 kBatch = 128;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, ys = 2, g = 1, q = 1;
    u64 r = 1;
    auto f = [&](u64 v) { return static_cast<u64>((static_cast<u128>(v) * v + c) % n); };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_u64_into(u64 n, std::map<u64, std::uint32_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[n];
    return;
  }
  const u64 d = brent_u64(n);
  factor_u64_into(d, out);
  factor_u64_into(n / d, out);
}

Natural brent_mpz(const Natural& n) {
  constexpr unsigned long kBatch = 128;
  Natural x, y, ys, q, g, diff;
  for (unsigned long c = 1;; ++c) {
    y = 2;
    q = 1;
    g = 1;
    unsigned long r = 1;
    auto step = [&](Natural& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(kBatch, r - k); ++i) {
          step(y);
          diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_large_into(const Natural& n, std::map<Natural, std::uint64_t>& out,
                       PrimalityPolicy policy) {
  if (n == 1) return;
  if (fits_u64(n)) {
    std::map<u64, std::uint32_t> small;
    factor_u64_into(to_u64(n), small);
    for (const auto& [p, e] : small) out[from_u64(p)] += e;
    return;
  }
  if (is_prime(n, policy)) {
    ++out[n];
    return;
  }
  const Natural d = brent_mpz(n);
  factor_large_into(d, out, policy);
  factor_large_into(n / d, out, policy);
}

std::vector<PrimePower> to_prime_powers(const std::map<Natural, std::uint64_t>& m) {
  std::vector<PrimePower> out;
  out.reserve(m.size());
  for (const auto& [p, e] : m) out.push_back({p, e});
  return out;
}

// Lucas: n is prime iff some a has order exactly n-1 modulo n.
bool lucas_prove(const Natural& n) {
  const Natural n1 = n - 1;
  const Factorization fac = factor(n1, PrimalityPolicy::proof);
  Natural t;
  for (unsigned long a = 2; a < 100000; ++a) {
    const Natural base = a;
    mpz_powm(t.get_mpz_t(), base.get_mpz_t(), n1.get_mpz_t(), n.get_mpz_t());
    if (t != 1) return false;
    bool generator = true;
    for (const auto& pp : fac.factors()) {
      const Natural e = n1 / pp.prime;
      mpz_powm(t.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), n.get_mpz_t());
      if (t == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return true;
  }
  throw std::runtime_error("Lucas primality proof found no generator for " + to_string(n));
}

}  // namespace

// ---------------------------------------------------------------------------

std::span<const std::uint32_t> small_primes() {
  static const std::vector<std::uint32_t> primes = sieve(kTrialDivisionLimit);
  return primes;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u64 d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : kBases)
    if (miller_rabin_witness(n, a, d, r)) return false;
  return true;
}

PrimalityVerdict classify_primality(const Natural& n, PrimalityPolicy policy) {
  if (n < 2) return {false, PrimalityLayer::small};
  if (fits_u64(n)) return {is_prime_u64(to_u64(n)), PrimalityLayer::deterministic_mr64};
  for (std::uint32_t p : small_primes().first(168))
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return {false, PrimalityLayer::small};
  const int probable = mpz_probab_prime_p(n.get_mpz_t(), kExtraRounds);
  if (probable == 0) return {false, PrimalityLayer::probable_bpsw};
  if (policy == PrimalityPolicy::probable) return {true, PrimalityLayer::probable_bpsw};
  return {lucas_prove(n), PrimalityLayer::lucas_proof};
}

bool is_prime(const Natural& n, PrimalityPolicy policy) {
  return classify_primality(n, policy).prime;
}

const char* to_string(PrimalityLayer layer) {
  switch (layer) {
    case PrimalityLayer::small: return "small";
    case PrimalityLayer::deterministic_mr64: return "deterministic_mr64";
    case PrimalityLayer::probable_bpsw: return "probable_bpsw";
    case PrimalityLayer::lucas_proof: return "lucas_proof";
  }
  return "unknown";
}

const char* to_string(PrimalityPolicy policy) {
  return policy == PrimalityPolicy::proof ? "proof" : "probable";
}

// ---------------------------------------------------------------------------

Factorization Factorization::from_factors(std::vector<PrimePower> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    require(f.exponent > 0, "factorization_exponent",
            "zero exponent for prime " + oddmp::to_string(f.prime));
    require(is_prime(f.prime), "factorization_prime",
            oddmp::to_string(f.prime) + " is not prime");
    if (i > 0)
      require(factors[i - 1].prime < f.prime, "factorization_sorted",
              "primes must be distinct and increasing");
  }
  return Factorization(std::move(factors));
}

Factorization Factorization::trusted(std::vector<PrimePower> factors) {
  return Factorization(std::move(factors));
}

Natural Factorization::value() const {
  Natural out = 1, power;
  for (const auto& f : factors_) {
    mpz_pow_ui(power.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
    out *= power;
  }
  return out;
}

bool Factorization::is_odd() const { return factors_.empty() || factors_.front().prime != 2; }

bool Factorization::contains(const Natural& prime) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [&](const PrimePower& f) { return f.prime == prime; });
}

std::string Factorization::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << '*';
    os << oddmp::to_string(factors_[i].prime);
    if (factors_[i].exponent != 1) os << '^' << factors_[i].exponent;
  }
  return os.str();
}

Factorization operator*(const Factorization& a, const Factorization& b) {
  std::map<Natural, std::uint64_t> merged;
  for (const auto& f : a.factors_) merged[f.prime] += f.exponent;
  for (const auto& f : b.factors_) merged[f.prime] += f.exponent;
  return Factorization(to_prime_powers(merged));
}

Factorization factor(const Natural& n, PrimalityPolicy policy) {
  require(n >= 1, "positive_integer", "factor requires n >= 1");
  if (fits_u64(n)) {
    std::vector<PrimePower> out;
    for (const auto& [p, e] : factor_u64(to_u64(n))) out.push_back({from_u64(p), e});
    return Factorization::trusted(std::move(out));
  }
  std::map<Natural, std::uint64_t> found;
  Natural rest = n;
  for (std::uint32_t p : small_primes()) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      const Natural prime = p;
      found[prime] = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t());
    }
    if (Natural(static_cast<unsigned long>(p)) * p > rest) break;
  }
  if (rest > 1) {
    const Natural limit = kTrialDivisionLimit;
    if (rest < limit * limit)
      ++found[rest];
    else
      factor_large_into(rest, found, policy);
  }
  return Factorization::trusted(to_prime_powers(found));
}

Factorization factor_expression(std::string_view text) {
  std::string cleaned;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
  require(!cleaned.empty(), "integer_expression", "empty integer expression");
  Factorization out;
  std::size_t start = 0;
  while (start <= cleaned.size()) {
    std::size_t star = cleaned.find('*', start);
    if (star == std::string::npos) star = cleaned.size();
    const std::string_view term(cleaned.data() + start, star - start);
    require(!term.empty(), "integer_expression", "malformed expression '" + cleaned + "'");
    const std::size_t caret = term.find('^');
    const Natural base = parse_decimal(term.substr(0, caret));
    require(base >= 1, "positive_integer", "factor base must be positive");
    std::uint64_t exponent = 1;
    if (caret != std::string_view::npos) exponent = to_u64(parse_decimal(term.substr(caret + 1)));
    if (exponent > 0) {
      std::vector<PrimePower> scaled;
      const auto base_factors = factor(base);
      for (const auto& f : base_factors.factors()) scaled.push_back({f.prime, f.exponent * exponent});
      out = out * Factorization::trusted(std::move(scaled));
    }
    start = star + 1;
  }
  return out;
}

std::vector<std::pair<u64, std::uint32_t>> factor_u64(u64 n) {
  std::vector<std::pair<u64, std::uint32_t>> out;
  if (n <= 1) return out;
  for (std::uint32_t p : small_primes()) {
    if (static_cast<u64>(p) * p > n) break;
    if (n % p == 0) {
      std::uint32_t e = 0;
      do {
        n /= p;
        ++e;
      } while (n % p == 0);
      out.emplace_back(p, e);
    }
  }
  if (n > 1) {
    std::map<u64, std::uint32_t> rest;
    factor_u64_into(n, rest);
    for (const auto& kv : rest) out.emplace_back(kv);
  }
  return out;
}

// ---------------------------------------------------------------------------

Natural sigma_prime_power(const Natural& p, std::uint64_t e) {
  require(p >= 2, "prime_base", "sigma_prime_power requires p >= 2");
  require(e < (1ull << 32), "exponent_bound", "exponent too large");
  Natural power;
  mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e + 1));
  power -= 1;
  const Natural denom = p - 1;
  Natural out;
  mpz_divexact(out.get_mpz_t(), power.get_mpz_t(), denom.get_mpz_t());
  return out;
}

Natural sigma(const Factorization& f) {
  Natural out = 1;
  for (const auto& pp : f.factors()) out *= sigma_prime_power(pp.prime, pp.exponent);
  return out;
}

std::uint64_t nu(const Natural& p, const Natural& n) {
  require(sgn(n) > 0, "nonzero_argument", "valuation of 0 is infinite");
  require(is_prime(p), "prime_base", to_string(p) + " is not prime");
  if (p == 2) return mpz_scan1(n.get_mpz_t(), 0);
  Natural rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

std::uint64_t nu2(const Natural& n) {
  require(sgn(n) > 0, "nonzero_argument", "valuation of 0 is infinite");
  return mpz_scan1(n.get_mpz_t(), 0);
}

std::uint64_t nu2_u64(u64 n) {
  require(n != 0, "nonzero_argument", "valuation of 0 is infinite");
  return static_cast<std::uint64_t>(__builtin_ctzll(n));
}

Natural ord(const Natural& q, const Natural& m) {
  require(is_prime(q), "prime_modulus", to_string(q) + " is not prime");
  Natural base;
  mpz_mod(base.get_mpz_t(), m.get_mpz_t(), q.get_mpz_t());
  require(base != 0, "coprime_to_modulus",
          to_string(q) + " divides " + to_string(m) + "; order undefined");
  Natural order = q - 1;
  const Factorization group = factor(order);
  Natural t;
  for (const auto& pp : group.factors()) {
    for (std::uint64_t i = 0; i < pp.exponent; ++i) {
      const Natural candidate = order / pp.prime;
      mpz_powm(t.get_mpz_t(), base.get_mpz_t(), candidate.get_mpz_t(), q.get_mpz_t());
      if (t != 1) break;
      order = candidate;
    }
  }
  return order;
}

std::uint64_t big_omega(const Factorization& f) {
  std::uint64_t total = 0;
  for (const auto& pp : f.factors()) total += pp.exponent;
  return total;
}

std::uint64_t big_omega(const Natural& n) {
  require(n >= 1, "positive_integer", "big_omega requires n >= 1");
  return big_omega(factor(n));
}

}  // namespace oddmp
