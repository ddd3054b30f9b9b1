#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddmp/json_io.hpp"
#include "oddmp/structure.hpp"

namespace oddmp {

enum class CertificateKind {
  shape_violation,
  fermat_divisibility_contradiction,
  omega_parity,
  mod8_mismatch,
};

const char* to_string(CertificateKind k);
CertificateKind certificate_kind_from_string(const std::string& s);

/// Constraint on the primes of the square part M.
enum class MConstraint { unconstrained, all_3_mod_4 };

const char* to_string(MConstraint c);
MConstraint m_constraint_from_string(const std::string& s);

/// Square part containing q^(2 beta) * prod p_i^(2 beta) for a Fermat prime q.
/// Without a concrete beta the family is every beta with gcd(2 beta + 1, q) = 1.
struct FermatSquareFamily {
  Natural q;
  std::optional<std::uint64_t> beta;
};

/// A family of candidate odd 2^k-perfect numbers n = Pi * M^2. The Euler part
/// is given as exactly one of: a concrete prime power pi^alpha, a general
/// factored Pi, or congruence classes for pi (and alpha).
struct CandidateFamily {
  std::optional<Natural> pi;
  std::optional<std::uint64_t> alpha;
  std::optional<Factorization> euler_part;
  std::optional<CongruenceClass> pi_class;
  std::optional<CongruenceClass> alpha_class;
  std::uint64_t k_exponent = 1;
  MConstraint m_constraint = MConstraint::unconstrained;
  std::optional<FermatSquareFamily> fermat_square;
  PrimalityPolicy primality = PrimalityPolicy::probable;
};

struct Witness {
  std::string name;
  Natural value;
  std::optional<Factorization> factorization;

  friend bool operator==(const Witness&, const Witness&) = default;
};

inline constexpr int kCertificateSchemaVersion = 1;

/// Self-contained record of a nonexistence deduction. check_certificate
/// re-derives the contradiction from these fields alone.
struct Certificate {
  CertificateKind kind = CertificateKind::omega_parity;
  json hypothesis;
  std::vector<Witness> witnesses;
  std::string theorem;
  std::string conclusion;
  int schema_version = kCertificateSchemaVersion;

  const Witness* find(std::string_view name) const;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

void to_json(json& j, const Witness& w);
void from_json(const json& j, Witness& w);
void to_json(json& j, const Certificate& c);
void from_json(const json& j, Certificate& c);

/// Runs the obstructions in a fixed order (shape, Fermat divisibility, Omega
/// parity, mod 8) and returns the first that fires. Rejects candidates that
/// are underspecified or whose Euler factor is not prime.
std::optional<Certificate> build_certificate(const CandidateFamily& candidate);

struct CheckResult {
  bool valid = true;
  std::vector<std::string> failures;
};

/// Re-evaluates the stored witnesses with direct arithmetic, independent of
/// the generator's code paths.
CheckResult check_certificate(const Certificate& cert);

}  // namespace oddmp
