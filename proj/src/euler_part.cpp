#include "oddmp/euler_part.hpp"

#include <algorithm>
#include <set>

namespace oddmp {

namespace {

void require_odd_prime(const Natural& p, const char* name) {
  require(p != 2 && is_prime(p), std::string(name) + "_odd_prime",
          std::string(name) + " = " + to_string(p) + " must be an odd prime");
}

std::uint32_t mod_small(const Natural& x, unsigned long m) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(x.get_mpz_t(), m));
}

}  // namespace

SquarePartSpec SquarePartSpec::make(Natural q, std::uint64_t beta,
                                    std::vector<std::pair<Natural, std::uint64_t>> others) {
  require_odd_prime(q, "q");
  require(beta >= 1, "beta_positive", "beta must be >= 1");
  std::set<Natural> seen{q};
  for (const auto& [p, b] : others) {
    require_odd_prime(p, "p_i");
    require(b >= 1, "beta_positive", "beta_i must be >= 1");
    require(seen.insert(p).second, "distinct_primes",
            "q and the p_i must be distinct; " + to_string(p) + " repeats");
  }
  return SquarePartSpec{std::move(q), beta, std::move(others)};
}

CoprimeBranch sigma_coprime_branch(const Natural& p, std::uint64_t beta, const Natural& q) {
  require(p != q, "p_ne_q", "p and q must be distinct primes");
  require_odd_prime(p, "p");
  require_odd_prime(q, "q");
  require(beta >= 1, "beta_positive", "beta must be >= 1");
  CoprimeBranch out;
  out.p = p;
  out.beta = beta;
  const Natural two_beta_plus_one = from_u64(2 * beta + 1);
  Natural p_mod_q;
  mpz_fdiv_r(p_mod_q.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  out.p_congruent_one = p_mod_q == 1;
  out.modulus = out.p_congruent_one ? q : ord(q, p);
  mpz_fdiv_r(out.residue.get_mpz_t(), two_beta_plus_one.get_mpz_t(), out.modulus.get_mpz_t());
  out.coprime = out.residue != 0;
  return out;
}

bool sigma_coprime_to_q(const Natural& p, std::uint64_t beta, const Natural& q) {
  return sigma_coprime_branch(p, beta, q).coprime;
}

DivisibilityReport euler_divisibility(const SquarePartSpec& spec) {
  DivisibilityReport out;
  out.divides = true;
  for (const auto& [p, b] : spec.others) {
    out.reasons.push_back(sigma_coprime_branch(p, b, spec.q));
    out.divides = out.divides && out.reasons.back().coprime;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::optional<std::uint32_t> fermat_index(const Natural& q) {
  if (q < 3) return std::nullopt;
  const Natural m = q - 1;
  if (mpz_popcount(m.get_mpz_t()) != 1) return std::nullopt;
  const auto log_m = mpz_scan1(m.get_mpz_t(), 0);
  if ((log_m & (log_m - 1)) != 0) return std::nullopt;
  if (!is_prime(q)) return std::nullopt;
  return static_cast<std::uint32_t>(__builtin_ctzll(log_m));
}

FermatVerdict fermat_criterion(const Natural& q, const std::vector<std::uint64_t>& betas) {
  const auto t = fermat_index(q);
  require(t.has_value(), "q_fermat_prime", to_string(q) + " is not a Fermat prime 2^(2^t)+1");
  FermatVerdict out;
  out.t = *t;
  Natural product = 1;
  for (auto b : betas) {
    require(b >= 1, "beta_positive", "beta_i must be >= 1");
    product = product * from_u64(2 * b + 1);
    mpz_fdiv_r(product.get_mpz_t(), product.get_mpz_t(), q.get_mpz_t());
  }
  out.product_mod_q = product;
  out.certified = product != 0;
  if (out.certified)
    out.justification =
        "q - 1 = 2^(2^" + std::to_string(out.t) +
        "), so ord_q(p_i) is a power of 2 and never divides the odd 2*beta_i+1 unless it is 1; "
        "for p_i = 1 (mod q) the test is 2*beta_i+1 != 0 (mod q), implied by the product being "
        "nonzero mod q. Hence every sigma(p_i^(2 beta_i)) is coprime to q and q^(2 beta) "
        "divides sigma(Pi).";
  else
    out.justification = "prod(2*beta_i+1) = 0 (mod q); the criterion does not apply.";
  return out;
}

// ---------------------------------------------------------------------------

std::uint32_t half_sigma_mod8(const Natural& pi, std::uint64_t alpha) {
  require(is_prime(pi), "pi_prime", to_string(pi) + " is not prime");
  require(mod_small(pi, 4) == 1, "pi_1_mod_4", "pi must be 1 (mod 4)");
  require(alpha % 4 == 1, "alpha_1_mod_4", "alpha must be 1 (mod 4)");
  const std::uint64_t half_pi = mod_small((pi + 1) / 2, 8);
  const std::uint64_t half_alpha = ((alpha % 16) + 1) / 2;
  return static_cast<std::uint32_t>(half_pi * half_alpha % 8);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> mod16_solutions(std::uint32_t c) {
  require(c % 2 == 1 && c < 8, "odd_residue_mod_8", "sigma(M^2) mod 8 must be one of 1,3,5,7");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  // pi = (sigma(pi^alpha)/2) * sigma(M^2) (mod 8), with the half-sigma closed form.
  for (std::uint32_t pi = 1; pi < 16; pi += 4)
    for (std::uint32_t alpha = 1; alpha < 16; alpha += 4) {
      const std::uint32_t half_sigma = ((pi + 1) / 2) * ((alpha + 1) / 2) % 8;
      if (pi % 8 == half_sigma * c % 8) out.emplace_back(pi, alpha);
    }
  return out;
}

const char* to_string(Mod8Relation r) {
  return r == Mod8Relation::same_mod8 ? "same_mod8" : "shifted_by_4";
}

EulerFactorQuery EulerFactorQuery::make(Natural pi, std::uint64_t alpha,
                                        std::optional<Factorization> m_square) {
  require(is_prime(pi), "pi_prime", to_string(pi) + " is not prime");
  require(mod_small(pi, 4) == 1, "pi_1_mod_4", "pi must be 1 (mod 4)");
  require(alpha % 4 == 1, "alpha_1_mod_4", "alpha must be 1 (mod 4)");
  if (m_square) {
    require(m_square->is_odd(), "m_odd", "M^2 must be odd");
    for (const auto& pp : m_square->factors())
      require(pp.exponent % 2 == 0, "m_square", "M^2 must be a perfect square");
    require(!m_square->contains(pi), "pi_coprime_m", "gcd(pi, M) must be 1");
  }
  return EulerFactorQuery{std::move(pi), alpha, std::move(m_square)};
}

Mod8Relation observed_relation(const Natural& pi, std::uint64_t alpha) {
  const std::uint32_t diff = (mod_small(pi, 8) + 8 - static_cast<std::uint32_t>(alpha % 8)) % 8;
  return diff == 0 ? Mod8Relation::same_mod8 : Mod8Relation::shifted_by_4;
}

Mod8Report mod8_classify(const EulerFactorQuery& query, Mod8Mode mode) {
  require(query.m_square.has_value(), "m_square_present", "mod8_classify needs M^2");
  Mod8Report out;
  out.sigma_m2_mod4 = mod_small(sigma(*query.m_square), 4);
  out.implied = out.sigma_m2_mod4 == 1 ? Mod8Relation::same_mod8 : Mod8Relation::shifted_by_4;
  if (mode == Mod8Mode::assert_two_perfect) {
    out.observed = observed_relation(query.pi, query.alpha);
    out.consistent = *out.observed == out.implied;
  }
  return out;
}

ParityReport remark_parity(const Factorization& m_square) {
  require(m_square.is_odd(), "m_odd", "M^2 must be odd");
  ParityReport out;
  for (const auto& pp : m_square.factors()) {
    require(pp.exponent % 2 == 0, "m_square", "M^2 must be a perfect square");
    if (mod_small(pp.prime, 4) == 1 && pp.exponent % 4 == 2) ++out.count;
  }
  out.predicts_shift = out.count % 2 == 1;
  return out;
}

// ---------------------------------------------------------------------------

OmegaReport omega_obstruction(const Factorization& euler_part, std::uint64_t k_exponent) {
  require(k_exponent >= 1, "k_exponent_positive", "k must be >= 1 (2^k-perfect)");
  require(euler_part.is_odd(), "euler_part_odd", "the Euler part must be odd");
  std::size_t three_mod_four = 0;
  Natural one_mod_four_product = 1;
  for (const auto& pp : euler_part.factors()) {
    require(pp.exponent % 2 == 1, "euler_part_exponents_odd",
            "every exponent of the Euler part must be odd; " + to_string(pp.prime) + "^" +
                std::to_string(pp.exponent) + " is not");
    if (mod_small(pp.prime, 4) == 3)
      ++three_mod_four;
    else
      one_mod_four_product *= pp.prime;
  }
  require(three_mod_four % 2 == 0, "even_count_3_mod_4",
          "the Euler part must contain an even number of primes = 3 (mod 4), found " +
              std::to_string(three_mod_four));
  OmegaReport out;
  out.sigma_pi = sigma(euler_part);
  require(gcd(out.sigma_pi, one_mod_four_product) == 1, "sigma_coprime_to_1_mod_4_primes",
          "sigma(Pi) = " + to_string(out.sigma_pi) +
              " shares a factor with the Euler-part primes = 1 (mod 4)");
  const std::uint64_t v = nu2(out.sigma_pi);
  require(v == k_exponent, "nu2_sigma_equals_k",
          "nu2(sigma(Pi)) = " + std::to_string(v) + " but k = " + std::to_string(k_exponent));
  mpz_tdiv_q_2exp(out.odd_part.get_mpz_t(), out.sigma_pi.get_mpz_t(), k_exponent);
  out.odd_part_factors = factor(out.odd_part);
  out.omega = big_omega(out.odd_part_factors);
  out.parity_ok = out.omega % 2 == 0;
  return out;
}

}  // namespace oddmp
