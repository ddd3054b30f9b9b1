#include "oddmp/certificate.hpp"

#include <algorithm>
#include <sstream>

#include "oddmp/euler_part.hpp"

namespace oddmp {

namespace {

constexpr const char* kShapeTag = "odd-multiperfect-shape";
constexpr const char* kFermatTag = "fermat-prime-divisibility";
constexpr const char* kOmegaTag = "omega-parity-obstruction";
constexpr const char* kMod8Tag = "euler-factor-mod8-classification";

std::uint64_t mod_u64(const Natural& x, std::uint64_t m) {
  return mpz_fdiv_ui(x.get_mpz_t(), m);
}

Natural mod_nat(const Natural& x, const Natural& m) {
  Natural r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Witness witness(std::string name, Natural value, std::optional<Factorization> f = std::nullopt) {
  return Witness{std::move(name), std::move(value), std::move(f)};
}

std::string describe_family(const CandidateFamily& c, const std::optional<Factorization>& euler) {
  std::ostringstream os;
  os << "odd 2^" << c.k_exponent << "-perfect n = ";
  if (euler)
    os << euler->to_string();
  else
    os << "pi^alpha";
  if (c.fermat_square) {
    os << " * " << to_string(c.fermat_square->q) << "^(2 beta) * prod p_i^(2 beta)";
  } else {
    os << " * M^2";
  }
  return os.str();
}

struct Resolved {
  std::optional<Factorization> euler;  // concrete Euler part
  std::optional<std::uint64_t> alpha;
  json hypothesis;
};

Resolved resolve(const CandidateFamily& c) {
  const int sources = int(c.pi.has_value()) + int(c.euler_part.has_value()) + int(c.pi_class.has_value());
  require(sources == 1, "candidate_euler_factor",
          "give exactly one of pi, an explicit Euler part, or a congruence class for pi");
  require(c.k_exponent >= 1, "k_exponent_positive", "k must be >= 1 (2^k-perfect)");
  require(!c.pi_class || c.m_constraint != MConstraint::unconstrained || c.fermat_square.has_value(),
          "candidate_constraint",
          "a congruence-class family needs a constraint on M (prime residues or a Fermat-prime square)");

  Resolved out;
  json& h = out.hypothesis;
  h["k_exponent"] = c.k_exponent;
  h["m_constraint"] = to_string(c.m_constraint);
  json primality = {{"policy", to_string(c.primality)}, {"layers", json::array()}};

  if (c.pi) {
    const auto verdict = classify_primality(*c.pi, c.primality);
    if (!verdict.prime) {
      std::string detail;
      if (*c.pi > 1) detail = " (" + to_string(*c.pi) + " = " + factor(*c.pi).to_string() + ")";
      throw PreconditionError("pi_prime", "pi = " + to_string(*c.pi) + " is composite" + detail +
                                              "; the Euler factor pi^alpha needs a prime pi");
    }
    require(*c.pi != 2, "pi_odd", "pi must be odd");
    const std::uint64_t alpha = c.alpha.value_or(1);
    require(alpha % 2 == 1, "alpha_odd", "alpha must be odd");
    out.alpha = alpha;
    out.euler = Factorization::trusted({{*c.pi, alpha}});
    h["pi"] = *c.pi;
    h["alpha"] = alpha;
    primality["layers"].push_back({{"p", *c.pi}, {"layer", to_string(verdict.layer)}});
  } else if (c.euler_part) {
    require(!c.euler_part->is_one(), "euler_part_nontrivial", "the Euler part must be > 1");
    require(c.euler_part->is_odd(), "euler_part_odd", "the Euler part must be odd");
    for (const auto& pp : c.euler_part->factors()) {
      require(pp.exponent % 2 == 1, "euler_part_exponents_odd",
              "every exponent of the Euler part must be odd");
      primality["layers"].push_back(
          {{"p", pp.prime}, {"layer", to_string(classify_primality(pp.prime, c.primality).layer)}});
    }
    out.euler = *c.euler_part;
    if (c.euler_part->size() == 1) out.alpha = c.euler_part->factors()[0].exponent;
  } else {
    require(c.pi_class->modulus > 0 && c.pi_class->residue < c.pi_class->modulus,
            "congruence_class", "pi class needs 0 <= residue < modulus");
    require(c.alpha.has_value() || c.alpha_class.has_value(), "candidate_alpha",
            "a congruence class for pi needs alpha or a class for alpha");
    h["pi_class"] = *c.pi_class;
    if (c.alpha) {
      require(*c.alpha % 2 == 1, "alpha_odd", "alpha must be odd");
      out.alpha = c.alpha;
      h["alpha"] = *c.alpha;
    }
  }
  if (c.alpha_class) {
    require(c.alpha_class->modulus > 0 && c.alpha_class->residue < c.alpha_class->modulus,
            "congruence_class", "alpha class needs 0 <= residue < modulus");
    h["alpha_class"] = *c.alpha_class;
  }
  if (out.euler) h["euler_part"] = *out.euler;

  if (c.fermat_square) {
    const auto& fs = *c.fermat_square;
    require(fermat_index(fs.q).has_value(), "q_fermat_prime",
            "q = " + to_string(fs.q) + " is not a Fermat prime 2^(2^t)+1");
    if (out.euler)
      require(!out.euler->contains(fs.q), "q_coprime_euler_part", "q must not divide the Euler part");
    if (c.pi_class && fits_u64(fs.q) && c.pi_class->modulus % to_u64(fs.q) == 0)
      require(c.pi_class->residue % to_u64(fs.q) != 0, "q_coprime_euler_part",
              "the class of pi is divisible by q");
    if (fs.beta) require(*fs.beta >= 1, "beta_positive", "beta must be >= 1");
    h["square_part"] = {{"form", "q^(2 beta) * prod p_i^(2 beta)"},
                        {"q", fs.q},
                        {"beta", fs.beta ? json(*fs.beta) : json(nullptr)}};
  }
  h["primality"] = primality;
  h["family"] = describe_family(c, out.euler);
  return out;
}

// --- obstructions ----------------------------------------------------------

std::optional<Certificate> shape_obstruction(const CandidateFamily& c, const Resolved& r) {
  if (!r.euler) return std::nullopt;
  const auto split = split_euler_part(*r.euler);
  std::uint64_t total = split.s;
  for (const auto& pp : split.euler_part.factors())
    total += nu2((pp.prime + 1) / 2) + nu2_u64((pp.exponent + 1) / 2);

  bool violated;
  if (c.k_exponent <= kMaxShapeValuation) {
    Natural k;
    mpz_ui_pow_ui(k.get_mpz_t(), 2, c.k_exponent);
    violated = !matches_any_shape(split, enumerate_shapes(k));
  } else {
    violated = total != c.k_exponent;
  }
  if (!violated) return std::nullopt;

  Certificate cert;
  cert.kind = CertificateKind::shape_violation;
  cert.hypothesis = r.hypothesis;
  cert.theorem = kShapeTag;
  cert.witnesses = {witness("s", split.s), witness("k_exponent", from_u64(c.k_exponent)),
                    witness("shape_valuation_sum", from_u64(total)),
                    witness("nu2_sigma_euler_part", from_u64(nu2(sigma(*r.euler))))};
  cert.conclusion = "Euler part " + r.euler->to_string() +
                    " fits no admissible shape: nu2(sigma(Pi)) = " + std::to_string(total) +
                    " but an odd 2^" + std::to_string(c.k_exponent) + "-perfect number needs " +
                    std::to_string(c.k_exponent) + ". No " + r.hypothesis["family"].get<std::string>() +
                    " exists.";
  return cert;
}

std::optional<Certificate> fermat_obstruction(const CandidateFamily& c, const Resolved& r) {
  if (!c.fermat_square) return std::nullopt;
  const auto& fs = *c.fermat_square;
  const Natural& q = fs.q;
  const std::uint32_t t = *fermat_index(q);

  Certificate cert;
  cert.kind = CertificateKind::fermat_divisibility_contradiction;
  cert.hypothesis = r.hypothesis;
  cert.theorem = kFermatTag;
  cert.witnesses.push_back(witness("q", q));
  cert.witnesses.push_back(witness("fermat_t", t));

  std::string beta_text;
  if (fs.beta) {
    const auto verdict = fermat_criterion(q, {*fs.beta});
    if (!verdict.certified) return std::nullopt;
    cert.witnesses.push_back(witness("beta", from_u64(*fs.beta)));
    cert.witnesses.push_back(witness("two_beta_plus_one_mod_q", verdict.product_mod_q));
    beta_text = "beta = " + std::to_string(*fs.beta);
  } else {
    const Natural excluded = (q - 1) / 2;
    cert.witnesses.push_back(witness("beta_excluded_residue", excluded));
    beta_text = "every beta != " + to_string(excluded) + " (mod " + to_string(q) + ")";
  }

  Natural sigma_mod_q;
  if (r.euler) {
    cert.hypothesis["route"] = "direct";
    sigma_mod_q = mod_nat(sigma(*r.euler), q);
    if (c.pi) {
      cert.witnesses.push_back(witness("pi_mod_q", mod_nat(*c.pi, q)));
      cert.witnesses.push_back(witness("alpha_mod_q", mod_nat(from_u64(*r.alpha), q)));
    }
  } else {
    // pi = 1 (mod q) gives sigma(pi^alpha) = alpha + 1 (mod q).
    if (!fits_u64(q)) return std::nullopt;
    const std::uint64_t qq = to_u64(q);
    const auto& pc = *c.pi_class;
    if (pc.modulus % qq != 0 || pc.residue % qq != 1) return std::nullopt;
    std::uint64_t alpha_mod_q;
    if (r.alpha)
      alpha_mod_q = *r.alpha % qq;
    else if (c.alpha_class && c.alpha_class->modulus % qq == 0)
      alpha_mod_q = c.alpha_class->residue % qq;
    else
      return std::nullopt;
    cert.hypothesis["route"] = "reduction";
    cert.witnesses.push_back(witness("pi_mod_q", 1));
    cert.witnesses.push_back(witness("alpha_mod_q", from_u64(alpha_mod_q)));
    sigma_mod_q = from_u64((alpha_mod_q + 1) % qq);
  }
  if (sigma_mod_q == 0) return std::nullopt;
  cert.witnesses.push_back(witness("sigma_euler_part_mod_q", sigma_mod_q));

  cert.conclusion = to_string(q) + " is a Fermat prime and gcd(2 beta + 1, " + to_string(q) +
                    ") = 1, which forces " + to_string(q) + " | sigma(Pi); but sigma(Pi) = " +
                    to_string(sigma_mod_q) + " (mod " + to_string(q) + "). No " +
                    r.hypothesis["family"].get<std::string>() + " exists for " + beta_text + ".";
  return cert;
}

std::optional<Certificate> omega_obstruction_cert(const CandidateFamily& c, const Resolved& r) {
  if (c.m_constraint != MConstraint::all_3_mod_4 || !r.euler) return std::nullopt;
  OmegaReport report;
  try {
    report = omega_obstruction(*r.euler, c.k_exponent);
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
  if (report.parity_ok) return std::nullopt;

  Certificate cert;
  cert.kind = CertificateKind::omega_parity;
  cert.hypothesis = r.hypothesis;
  cert.theorem = kOmegaTag;
  cert.witnesses = {witness("euler_part", r.euler->value(), *r.euler),
                    witness("k_exponent", from_u64(c.k_exponent)),
                    witness("sigma_euler_part", report.sigma_pi, factor(report.sigma_pi)),
                    witness("odd_part", report.odd_part, report.odd_part_factors),
                    witness("omega", from_u64(report.omega))};
  cert.conclusion = "sigma(Pi)/2^" + std::to_string(c.k_exponent) + " = " +
                    report.odd_part_factors.to_string() + " has Omega = " +
                    std::to_string(report.omega) +
                    ", which is odd; with every prime of M = 3 (mod 4) it must be even. No " +
                    r.hypothesis["family"].get<std::string>() +
                    " with all prime factors of M = 3 (mod 4) exists.";
  return cert;
}

std::optional<std::uint64_t> residue_mod(const std::optional<Natural>& concrete,
                                         const std::optional<std::uint64_t>& concrete_u64,
                                         const std::optional<CongruenceClass>& cls, std::uint64_t m) {
  if (concrete) return mod_u64(*concrete, m);
  if (concrete_u64) return *concrete_u64 % m;
  if (cls && cls->modulus % m == 0) return cls->residue % m;
  return std::nullopt;
}

std::optional<Certificate> mod8_obstruction(const CandidateFamily& c, const Resolved& r) {
  if (c.k_exponent != 1) return std::nullopt;
  if (c.m_constraint != MConstraint::all_3_mod_4) return std::nullopt;
  std::optional<Natural> pi = c.pi;
  if (!pi && r.euler) {
    if (r.euler->size() != 1) return std::nullopt;
    pi = r.euler->factors()[0].prime;
  }
  const auto pi8 = residue_mod(pi, std::nullopt, c.pi_class, 8);
  const auto alpha8 = residue_mod(std::nullopt, r.alpha, c.alpha_class, 8);
  if (!pi8 || !alpha8) return std::nullopt;
  if (*pi8 % 4 != 1 || *alpha8 % 4 != 1) return std::nullopt;

  // p = 3 (mod 4) gives sigma(p^(2b)) = 1 (mod 4), so sigma(M^2) = 1 (mod 4)
  // and pi = alpha (mod 8).
  Mod8Relation observed;
  if (pi && r.alpha)
    observed = observed_relation(*pi, *r.alpha);
  else
    observed = *pi8 == *alpha8 ? Mod8Relation::same_mod8 : Mod8Relation::shifted_by_4;
  if (observed == Mod8Relation::same_mod8) return std::nullopt;

  Certificate cert;
  cert.kind = CertificateKind::mod8_mismatch;
  cert.hypothesis = r.hypothesis;
  cert.theorem = kMod8Tag;
  cert.witnesses = {witness("pi_mod_8", from_u64(*pi8)), witness("alpha_mod_8", from_u64(*alpha8)),
                    witness("sigma_m2_mod_4", 1)};
  const auto pi16 = residue_mod(pi, std::nullopt, c.pi_class, 16);
  const auto alpha16 = residue_mod(std::nullopt, r.alpha, c.alpha_class, 16);
  if (pi16 && alpha16) {
    cert.witnesses.push_back(witness("pi_mod_16", from_u64(*pi16)));
    cert.witnesses.push_back(witness("alpha_mod_16", from_u64(*alpha16)));
    cert.hypothesis["tables"] = {{"sigma_m2_mod_8", {1, 5}},
                                 {"admissible_mod16", {mod16_solutions(1), mod16_solutions(5)}}};
  }
  cert.conclusion = "every prime of M is 3 (mod 4), so sigma(M^2) = 1 (mod 4) and pi = alpha "
                    "(mod 8) is required; but pi = " +
                    std::to_string(*pi8) + ", alpha = " + std::to_string(*alpha8) +
                    " (mod 8). No " + r.hypothesis["family"].get<std::string>() + " exists.";
  return cert;
}

// --- independent checker helpers ---------------------------------------------

// 1 + p + ... + p^e, by summation.
Natural sigma_by_sum(const Natural& p, std::uint64_t e) {
  Natural total = 1, power = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    power *= p;
    total += power;
  }
  return total;
}

Natural sigma_direct(const Factorization& f) {
  Natural out = 1;
  for (const auto& pp : f.factors()) out *= sigma_by_sum(pp.prime, pp.exponent);
  return out;
}

Natural sigma_mod_direct(const Factorization& f, const Natural& q) {
  Natural out = 1;
  for (const auto& pp : f.factors()) {
    Natural total = 1, power = 1;
    for (std::uint64_t i = 0; i < pp.exponent; ++i) {
      power = mod_nat(power * pp.prime, q);
      total = mod_nat(total + power, q);
    }
    out = mod_nat(out * total, q);
  }
  return out;
}

std::uint64_t two_adic(const Natural& n) { return mpz_scan1(n.get_mpz_t(), 0); }

bool is_fermat_prime_direct(const Natural& q) {
  for (std::uint32_t t = 0; t < 6; ++t) {
    Natural f;
    mpz_ui_pow_ui(f.get_mpz_t(), 2, 1u << t);
    if (f + 1 == q) return is_prime(q);
  }
  // 2^(2^t)+1 is composite for 5 <= t <= 32; larger Fermat primes are unknown.
  return false;
}

class Checker {
 public:
  explicit Checker(const Certificate& c) : cert_(c) {}

  void expect(bool ok, const std::string& what) {
    if (!ok) result_.failures.push_back(what);
  }

  std::optional<Natural> value(std::string_view name) {
    const Witness* w = cert_.find(name);
    if (!w) {
      result_.failures.push_back("missing witness '" + std::string(name) + "'");
      return std::nullopt;
    }
    return w->value;
  }

  void expect_witness(std::string_view name, const Natural& recomputed) {
    if (auto v = value(name))
      expect(*v == recomputed, "witness '" + std::string(name) + "' = " + to_string(*v) +
                                   " but recomputation gives " + to_string(recomputed));
  }

  CheckResult finish() {
    result_.valid = result_.failures.empty();
    return std::move(result_);
  }

  const Certificate& cert() const { return cert_; }

 private:
  const Certificate& cert_;
  CheckResult result_;
};

std::optional<Factorization> hypothesis_euler(const json& h) {
  if (!h.contains("euler_part")) return std::nullopt;
  return h.at("euler_part").get<Factorization>();
}

void check_shape(Checker& ck, const json& h) {
  const auto euler = hypothesis_euler(h);
  ck.expect(euler.has_value(), "shape certificate needs a concrete Euler part");
  if (!euler) return;
  const auto k = h.at("k_exponent").get<std::uint64_t>();
  const std::uint64_t v = two_adic(sigma_direct(*euler));
  ck.expect_witness("nu2_sigma_euler_part", from_u64(v));
  ck.expect_witness("k_exponent", from_u64(k));
  ck.expect(v != k, "nu2(sigma(Pi)) equals k; no contradiction");
}

void check_fermat(Checker& ck, const json& h) {
  const auto q = ck.value("q");
  if (!q) return;
  ck.expect(is_fermat_prime_direct(*q), "q is not a Fermat prime");
  ck.expect(h.contains("square_part") && h["square_part"].at("q").get<Natural>() == *q,
            "hypothesis square part does not name q");
  if (ck.cert().find("beta")) {
    const auto beta = *ck.value("beta");
    const Natural two_beta_plus_one = mod_nat(2 * beta + 1, *q);
    ck.expect_witness("two_beta_plus_one_mod_q", two_beta_plus_one);
    ck.expect(two_beta_plus_one != 0, "2 beta + 1 is divisible by q");
  } else if (auto excluded = ck.value("beta_excluded_residue")) {
    ck.expect(mod_nat(2 * *excluded + 1, *q) == 0, "excluded beta class is not 2 beta + 1 = 0 (mod q)");
  }
  const auto route = h.value("route", std::string());
  Natural recomputed;
  if (route == "direct") {
    const auto euler = hypothesis_euler(h);
    ck.expect(euler.has_value(), "direct route needs a concrete Euler part");
    if (!euler) return;
    ck.expect(mod_nat(euler->value(), *q) != 0, "q divides the Euler part");
    recomputed = sigma_mod_direct(*euler, *q);
  } else if (route == "reduction") {
    ck.expect(fits_u64(*q), "q too large for class reduction");
    const std::uint64_t qq = to_u64(*q);
    const auto pc = h.at("pi_class").get<CongruenceClass>();
    ck.expect(pc.modulus % qq == 0 && pc.residue % qq == 1, "pi class does not give pi = 1 (mod q)");
    std::uint64_t alpha_mod_q = 0;
    if (h.contains("alpha")) {
      alpha_mod_q = h.at("alpha").get<std::uint64_t>() % qq;
    } else {
      const auto ac = h.at("alpha_class").get<CongruenceClass>();
      ck.expect(ac.modulus % qq == 0, "alpha class does not determine alpha mod q");
      alpha_mod_q = ac.residue % qq;
    }
    ck.expect_witness("alpha_mod_q", from_u64(alpha_mod_q));
    // sum_{i=0}^{alpha} pi^i with pi = 1 (mod q) is alpha + 1 terms equal to 1.
    recomputed = from_u64((alpha_mod_q + 1) % qq);
  } else {
    ck.expect(false, "unknown Fermat route '" + route + "'");
    return;
  }
  ck.expect_witness("sigma_euler_part_mod_q", recomputed);
  ck.expect(recomputed != 0, "q divides sigma(Pi); no contradiction");
}

void check_omega(Checker& ck, const json& h) {
  ck.expect(h.at("m_constraint").get<std::string>() == to_string(MConstraint::all_3_mod_4),
            "omega certificate needs all primes of M = 3 (mod 4)");
  const auto euler = hypothesis_euler(h);
  ck.expect(euler.has_value(), "omega certificate needs a concrete Euler part");
  if (!euler) return;
  const auto k = h.at("k_exponent").get<std::uint64_t>();
  int three_mod_four = 0;
  Natural one_mod_four = 1;
  for (const auto& pp : euler->factors()) {
    ck.expect(pp.prime != 2 && pp.exponent % 2 == 1, "Euler part exponent is not odd");
    if (mod_u64(pp.prime, 4) == 3)
      ++three_mod_four;
    else
      one_mod_four *= pp.prime;
  }
  ck.expect(three_mod_four % 2 == 0, "odd number of Euler-part primes = 3 (mod 4)");
  const Natural s = sigma_direct(*euler);
  ck.expect_witness("sigma_euler_part", s);
  ck.expect(gcd(s, one_mod_four) == 1, "sigma(Pi) not coprime to Euler-part primes = 1 (mod 4)");
  ck.expect(two_adic(s) == k, "nu2(sigma(Pi)) != k");
  Natural odd_part;
  mpz_tdiv_q_2exp(odd_part.get_mpz_t(), s.get_mpz_t(), k);
  ck.expect_witness("odd_part", odd_part);
  const Witness* w = ck.cert().find("odd_part");
  if (!w || !w->factorization) {
    ck.expect(false, "odd_part witness lacks its factorization");
    return;
  }
  Natural product = 1;
  std::uint64_t omega = 0;
  for (const auto& pp : w->factorization->factors()) {
    ck.expect(is_prime(pp.prime), to_string(pp.prime) + " in odd_part factorization is not prime");
    Natural power;
    mpz_pow_ui(power.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    product *= power;
    omega += pp.exponent;
  }
  ck.expect(product == odd_part, "odd_part factorization does not multiply back");
  ck.expect_witness("omega", from_u64(omega));
  ck.expect(omega % 2 == 1, "Omega is even; no contradiction");
}

void check_mod8(Checker& ck, const json& h) {
  const auto constraint = h.at("m_constraint").get<std::string>();
  ck.expect(constraint == to_string(MConstraint::all_3_mod_4),
            "mod 8 certificate needs every prime of M = 3 (mod 4)");
  ck.expect(h.at("k_exponent").get<std::uint64_t>() == 1, "mod 8 certificate is for 2-perfect n");
  auto residue = [&](const char* concrete, const char* cls, std::uint64_t m) -> std::optional<std::uint64_t> {
    if (h.contains(concrete)) return mod_u64(h.at(concrete).get<Natural>(), m);
    if (h.contains(cls)) {
      const auto c = h.at(cls).get<CongruenceClass>();
      if (c.modulus % m == 0) return c.residue % m;
    }
    return std::nullopt;
  };
  std::optional<std::uint64_t> pi8 = residue("pi", "pi_class", 8);
  std::optional<std::uint64_t> alpha8 = residue("alpha", "alpha_class", 8);
  if (!pi8 && h.contains("euler_part")) {
    const auto euler = *hypothesis_euler(h);
    if (euler.size() == 1) {
      pi8 = mod_u64(euler.factors()[0].prime, 8);
      alpha8 = euler.factors()[0].exponent % 8;
    }
  }
  ck.expect(pi8 && alpha8, "pi and alpha mod 8 are not determined by the hypothesis");
  if (!pi8 || !alpha8) return;
  ck.expect_witness("pi_mod_8", from_u64(*pi8));
  ck.expect_witness("alpha_mod_8", from_u64(*alpha8));
  ck.expect(*pi8 % 4 == 1 && *alpha8 % 4 == 1, "pi, alpha not both 1 (mod 4)");
  ck.expect(*pi8 != *alpha8, "pi = alpha (mod 8); no contradiction");
  if (ck.cert().find("pi_mod_16")) {
    const auto p16 = to_u64(*ck.value("pi_mod_16"));
    const auto a16 = to_u64(*ck.value("alpha_mod_16"));
    ck.expect(p16 % 8 == *pi8 && a16 % 8 == *alpha8, "mod 16 witnesses disagree with mod 8");
    // sigma(M^2) = 1 (mod 4) means c = 1 or 5 (mod 8).
    for (std::uint64_t c : {1u, 5u})
      ck.expect((p16 * (p16 + 1)) % 16 != (c * (a16 + 1)) % 16,
                "(pi, alpha) mod 16 solves pi(pi+1) = c(alpha+1) for c = " + std::to_string(c));
  }
}

}  // namespace

// ---------------------------------------------------------------------------

const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::shape_violation: return "shape_violation";
    case CertificateKind::fermat_divisibility_contradiction: return "fermat_divisibility_contradiction";
    case CertificateKind::omega_parity: return "omega_parity";
    case CertificateKind::mod8_mismatch: return "mod8_mismatch";
  }
  return "unknown";
}

CertificateKind certificate_kind_from_string(const std::string& s) {
  for (auto k : {CertificateKind::shape_violation, CertificateKind::fermat_divisibility_contradiction,
                 CertificateKind::omega_parity, CertificateKind::mod8_mismatch})
    if (s == to_string(k)) return k;
  throw PreconditionError("certificate_kind", "unknown certificate kind '" + s + "'");
}

const char* to_string(MConstraint c) {
  switch (c) {
    case MConstraint::unconstrained: return "none";
    case MConstraint::all_3_mod_4: return "all-3-mod-4";
  }
  return "unknown";
}

MConstraint m_constraint_from_string(const std::string& s) {
  for (auto c : {MConstraint::unconstrained, MConstraint::all_3_mod_4})
    if (s == to_string(c)) return c;
  throw PreconditionError("m_constraint", "unknown M constraint '" + s +
                                              "' (expected none or all-3-mod-4)");
}

const Witness* Certificate::find(std::string_view name) const {
  for (const auto& w : witnesses)
    if (w.name == name) return &w;
  return nullptr;
}

void to_json(json& j, const Witness& w) {
  j = {{"name", w.name}, {"value", w.value}};
  if (w.factorization) j["factorization"] = *w.factorization;
}

void from_json(const json& j, Witness& w) {
  w.name = j.at("name").get<std::string>();
  w.value = j.at("value").get<Natural>();
  if (j.contains("factorization"))
    w.factorization = j.at("factorization").get<Factorization>();
  else
    w.factorization.reset();
}

void to_json(json& j, const Certificate& c) {
  j = {{"kind", to_string(c.kind)},
       {"hypothesis", c.hypothesis},
       {"witnesses", c.witnesses},
       {"theorem", c.theorem},
       {"conclusion", c.conclusion},
       {"schema_version", c.schema_version}};
}

void from_json(const json& j, Certificate& c) {
  c.schema_version = j.at("schema_version").get<int>();
  require(c.schema_version == kCertificateSchemaVersion, "schema_version",
          "unsupported certificate schema version " + std::to_string(c.schema_version));
  c.kind = certificate_kind_from_string(j.at("kind").get<std::string>());
  c.hypothesis = j.at("hypothesis");
  c.witnesses = j.at("witnesses").get<std::vector<Witness>>();
  c.theorem = j.at("theorem").get<std::string>();
  c.conclusion = j.at("conclusion").get<std::string>();
}

std::optional<Certificate> build_certificate(const CandidateFamily& candidate) {
  const Resolved r = resolve(candidate);
  if (auto c = shape_obstruction(candidate, r)) return c;
  if (auto c = fermat_obstruction(candidate, r)) return c;
  if (auto c = omega_obstruction_cert(candidate, r)) return c;
  if (auto c = mod8_obstruction(candidate, r)) return c;
  return std::nullopt;
}

CheckResult check_certificate(const Certificate& cert) {
  Checker ck(cert);
  ck.expect(cert.schema_version == kCertificateSchemaVersion, "unsupported schema version");
  const json& h = cert.hypothesis;
  try {
    switch (cert.kind) {
      case CertificateKind::shape_violation:
        ck.expect(cert.theorem == kShapeTag, "theorem tag mismatch");
        check_shape(ck, h);
        break;
      case CertificateKind::fermat_divisibility_contradiction:
        ck.expect(cert.theorem == kFermatTag, "theorem tag mismatch");
        check_fermat(ck, h);
        break;
      case CertificateKind::omega_parity:
        ck.expect(cert.theorem == kOmegaTag, "theorem tag mismatch");
        check_omega(ck, h);
        break;
      case CertificateKind::mod8_mismatch:
        ck.expect(cert.theorem == kMod8Tag, "theorem tag mismatch");
        check_mod8(ck, h);
        break;
    }
  } catch (const std::exception& e) {
    ck.expect(false, std::string("malformed certificate: ") + e.what());
  }
  return ck.finish();
}

}  // namespace oddmp
