// Naive reference computations used as oracles by the tests. Deliberately
// independent of the library: no factorization, no closed forms.
#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace brute {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> primes_below(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p < bound; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

inline std::vector<std::uint64_t> odd_primes_below(std::uint64_t bound) {
  auto v = primes_below(bound);
  if (!v.empty() && v.front() == 2) v.erase(v.begin());
  return v;
}

// 1 + p + ... + p^e by repeated summation.
inline mpz_class geometric_sum(std::uint64_t p, std::uint64_t e) {
  mpz_class sum = 0, term = 1;
  for (std::uint64_t i = 0; i <= e; ++i) {
    sum += term;
    term *= p;
  }
  return sum;
}

inline std::uint64_t nu2(mpz_class n) {
  std::uint64_t v = 0;
  while (n != 0 && n % 2 == 0) {
    n /= 2;
    ++v;
  }
  return v;
}

inline std::uint64_t nu2(std::uint64_t n) { return nu2(mpz_class(static_cast<unsigned long>(n))); }

// Sum of divisors by testing every d <= n.
inline std::uint64_t sigma_naive(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) s += d;
  return s;
}

// Smallest prime factor sieve, for fast exhaustive oracles over a range.
struct Sieve {
  std::vector<std::uint32_t> spf;
  explicit Sieve(std::uint32_t n) : spf(n + 1, 0) {
    for (std::uint32_t i = 2; i <= n; ++i)
      if (spf[i] == 0)
        for (std::uint64_t j = i; j <= n; j += i)
          if (spf[j] == 0) spf[j] = i;
  }
  // (prime, exponent) pairs of m.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> factor(std::uint32_t m) const {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    while (m > 1) {
      const std::uint32_t p = spf[m];
      std::uint64_t e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
    return out;
  }
};

inline std::uint64_t big_omega_naive(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      n /= d;
      ++count;
    }
  return count + (n > 1 ? 1 : 0);
}

// Smallest t >= 1 with base^t = 1 (mod q), by iteration.
inline std::uint64_t order(std::uint64_t q, std::uint64_t base) {
  std::uint64_t x = base % q;
  for (std::uint64_t t = 1; t <= q; ++t) {
    if (x == 1) return t;
    x = x * (base % q) % q;
  }
  return 0;
}

}  // namespace brute
