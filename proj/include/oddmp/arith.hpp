#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oddmp/natural.hpp"

namespace oddmp {

// ---------------------------------------------------------------------------
// Primality
// ---------------------------------------------------------------------------

/// How hard is_prime works above 2^64. Below 2^64 every policy is exact.
enum class PrimalityPolicy {
  probable,  ///< BPSW plus extra Miller-Rabin rounds; error < 4^-kExtraRounds
  proof,     ///< Lucas n-1 proof, recursively proving the factors of n-1
};

/// Which layer decided a primality verdict. Certificates record this.
enum class PrimalityLayer {
  small,              ///< n < 2 or found by trial division
  deterministic_mr64, ///< Miller-Rabin with a witness set exact below 3.3e24
  probable_bpsw,      ///< strong probable prime above 2^64
  lucas_proof,        ///< proven prime above 2^64 via the n-1 method
};

struct PrimalityVerdict {
  bool prime = false;
  PrimalityLayer layer = PrimalityLayer::small;
};

inline constexpr int kExtraRounds = 24;

PrimalityVerdict classify_primality(const Natural& n,
                                    PrimalityPolicy policy = PrimalityPolicy::probable);

bool is_prime(const Natural& n, PrimalityPolicy policy = PrimalityPolicy::probable);
bool is_prime_u64(std::uint64_t n);

const char* to_string(PrimalityLayer layer);
const char* to_string(PrimalityPolicy policy);

// ---------------------------------------------------------------------------
// Factorization
// ---------------------------------------------------------------------------

struct PrimePower {
  Natural prime;
  std::uint64_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Exact factorization of a positive integer: distinct primes in strictly
/// increasing order, each with a positive exponent. The empty list is 1.
class Factorization {
 public:
  Factorization() = default;

  /// Validates the invariants (primality, order, nonzero exponents).
  static Factorization from_factors(std::vector<PrimePower> factors);

  /// Skips validation; for callers that built the list from factor().
  static Factorization trusted(std::vector<PrimePower> factors);

  std::span<const PrimePower> factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  bool empty() const noexcept { return factors_.empty(); }
  bool is_one() const noexcept { return factors_.empty(); }

  Natural value() const;
  bool is_odd() const;
  bool contains(const Natural& prime) const;

  /// "3^3*5^2", or "1" for the empty product.
  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

  /// Product of two factorizations (exponents add).
  friend Factorization operator*(const Factorization& a, const Factorization& b);

 private:
  explicit Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {}
  std::vector<PrimePower> factors_;
};

/// Trial division below 10^6, then Pollard rho with Brent's cycle detection.
/// Rejects n = 0; factor(1) is the empty factorization.
Factorization factor(const Natural& n, PrimalityPolicy policy = PrimalityPolicy::probable);

/// Parses "41^13*5^4"-style text directly into a factorization; bases are
/// factored so composite bases are allowed.
Factorization factor_expression(std::string_view text);

/// Small-integer factorization by trial division; pairs are (prime, exponent).
std::vector<std::pair<std::uint64_t, std::uint32_t>> factor_u64(std::uint64_t n);

// ---------------------------------------------------------------------------
// Arithmetic functions
// ---------------------------------------------------------------------------

/// (p^(e+1) - 1) / (p - 1), by exact division.
Natural sigma_prime_power(const Natural& p, std::uint64_t e);

Natural sigma(const Factorization& f);

/// Exponent of the prime p in n. Rejects n = 0 and non-prime p.
std::uint64_t nu(const Natural& p, const Natural& n);

/// 2-adic valuation; rejects 0.
std::uint64_t nu2(const Natural& n);
std::uint64_t nu2_u64(std::uint64_t n);

/// Multiplicative order of m modulo the prime q. Rejects q | m.
Natural ord(const Natural& q, const Natural& m);

/// Number of prime factors counted with multiplicity. Rejects 0.
std::uint64_t big_omega(const Natural& n);
std::uint64_t big_omega(const Factorization& f);

/// Primes below `limit`, ascending.
std::span<const std::uint32_t> small_primes();
inline constexpr std::uint32_t kTrialDivisionLimit = 1'000'000;

}  // namespace oddmp
