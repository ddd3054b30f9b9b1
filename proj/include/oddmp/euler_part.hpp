#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "oddmp/arith.hpp"

namespace oddmp {

// ---------------------------------------------------------------------------
// Divisibility of sigma(Euler part) by q^(2 beta)
// ---------------------------------------------------------------------------

/// n = Pi * q^(2 beta) * prod p_i^(2 beta_i), q and p_i distinct odd primes.
struct SquarePartSpec {
  Natural q;
  std::uint64_t beta = 1;
  std::vector<std::pair<Natural, std::uint64_t>> others;

  static SquarePartSpec make(Natural q, std::uint64_t beta,
                             std::vector<std::pair<Natural, std::uint64_t>> others);
};

/// How the coprimality of q and sigma(p^(2 beta)) was decided for one p.
struct CoprimeBranch {
  Natural p;
  std::uint64_t beta = 0;
  bool p_congruent_one = false;  ///< p = 1 (mod q)
  Natural modulus;               ///< q when p = 1 (mod q), else ord_q(p)
  Natural residue;               ///< (2 beta + 1) mod modulus
  bool coprime = false;          ///< residue != 0
  friend bool operator==(const CoprimeBranch&, const CoprimeBranch&) = default;
};

CoprimeBranch sigma_coprime_branch(const Natural& p, std::uint64_t beta, const Natural& q);

/// gcd(q, sigma(p^(2 beta))) = 1, decided through ord_q(p) without computing
/// sigma. Rejects p = q.
bool sigma_coprime_to_q(const Natural& p, std::uint64_t beta, const Natural& q);

struct DivisibilityReport {
  bool divides = false;
  std::vector<CoprimeBranch> reasons;
  friend bool operator==(const DivisibilityReport&, const DivisibilityReport&) = default;
};

/// q^(2 beta) | sigma(Pi) iff q is coprime to every sigma(p_i^(2 beta_i)).
DivisibilityReport euler_divisibility(const SquarePartSpec& spec);

// ---------------------------------------------------------------------------
// Fermat primes
// ---------------------------------------------------------------------------

/// t with q = 2^(2^t) + 1 prime, or nullopt.
std::optional<std::uint32_t> fermat_index(const Natural& q);

struct FermatVerdict {
  bool certified = false;   ///< prod(2 beta_i + 1) != 0 (mod q)
  std::uint32_t t = 0;      ///< q = 2^(2^t) + 1
  Natural product_mod_q;    ///< prod(2 beta_i + 1) mod q
  std::string justification;
  friend bool operator==(const FermatVerdict&, const FermatVerdict&) = default;
};

/// Rejects q that is not a Fermat prime.
FermatVerdict fermat_criterion(const Natural& q, const std::vector<std::uint64_t>& betas);

// ---------------------------------------------------------------------------
// Euler factor pi^alpha of an odd perfect number, modulo 8 and 16
// ---------------------------------------------------------------------------

/// ((1+pi)/2)((1+alpha)/2) mod 8, equal to (sigma(pi^alpha)/2) mod 8 when
/// pi = alpha = 1 (mod 4).
std::uint32_t half_sigma_mod8(const Natural& pi, std::uint64_t alpha);

/// The (pi, alpha) residue pairs mod 16, pi = alpha = 1 (mod 4), compatible
/// with sigma(M^2) = c (mod 8). Sorted by pi then alpha. Rejects even c.
std::vector<std::pair<std::uint32_t, std::uint32_t>> mod16_solutions(std::uint32_t c);

enum class Mod8Relation { same_mod8, shifted_by_4 };
const char* to_string(Mod8Relation r);

enum class Mod8Mode {
  standalone,  ///< report sigma(M^2) mod 4 and the relation it implies
  assert_two_perfect,  ///< also compare against the observed pi - alpha mod 8
};

struct EulerFactorQuery {
  Natural pi;
  std::uint64_t alpha = 1;
  std::optional<Factorization> m_square;

  /// Validates pi prime, pi = alpha = 1 (mod 4), and M^2 an odd square
  /// coprime to pi when present.
  static EulerFactorQuery make(Natural pi, std::uint64_t alpha,
                               std::optional<Factorization> m_square);
};

struct Mod8Report {
  std::uint32_t sigma_m2_mod4 = 1;
  Mod8Relation implied = Mod8Relation::same_mod8;
  std::optional<Mod8Relation> observed;  ///< set in assert_two_perfect mode
  std::optional<bool> consistent;        ///< observed == implied
  friend bool operator==(const Mod8Report&, const Mod8Report&) = default;
};

/// Relation between pi and alpha mod 8 implied by sigma(M^2) mod 4, for a
/// posited 2-perfect pi^alpha M^2. Rejects a query without M^2.
Mod8Report mod8_classify(const EulerFactorQuery& query, Mod8Mode mode = Mod8Mode::standalone);

/// The relation pi^alpha actually exhibits: same_mod8 iff pi = alpha (mod 8).
Mod8Relation observed_relation(const Natural& pi, std::uint64_t alpha);

struct ParityReport {
  std::uint64_t count = 0;   ///< p^e || M^2 with p = 1 (mod 4), e = 2 (mod 4)
  bool predicts_shift = false;
  friend bool operator==(const ParityReport&, const ParityReport&) = default;
};

/// Rejects inputs that are not odd squares.
ParityReport remark_parity(const Factorization& m_square);

// ---------------------------------------------------------------------------
// Omega parity
// ---------------------------------------------------------------------------

struct OmegaReport {
  Natural sigma_pi;            ///< sigma(Pi)
  Natural odd_part;            ///< sigma(Pi) / 2^k
  Factorization odd_part_factors;
  std::uint64_t omega = 0;
  bool parity_ok = false;      ///< omega even
  friend bool operator==(const OmegaReport&, const OmegaReport&) = default;
};

/// Omega(sigma(Pi)/2^k) must be even when every prime of M is 3 (mod 4).
/// Checks the hypotheses (odd exponents, an even number of primes 3 mod 4 in
/// Pi, gcd(sigma(Pi), prod of Pi's primes 1 mod 4) = 1, nu2(sigma(Pi)) = k)
/// and names the first failing one.
OmegaReport omega_obstruction(const Factorization& euler_part, std::uint64_t k_exponent);

}  // namespace oddmp
