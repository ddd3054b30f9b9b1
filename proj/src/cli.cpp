#include "oddmp/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "oddmp/certificate.hpp"
#include "oddmp/euler_part.hpp"
#include "oddmp/json_io.hpp"
#include "oddmp/oracle.hpp"
#include "oddmp/search.hpp"
#include "oddmp/structure.hpp"
#include "oddmp/valuation.hpp"

namespace oddmp::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  try {
    return to_u64(parse_expression(text));
  } catch (const PreconditionError& e) {
    throw PreconditionError(what, what + ": " + e.what());
  }
}

CongruenceClass parse_class(const std::string& text) {
  const auto colon = text.find(':');
  require(colon != std::string::npos, "congruence_class",
          "congruence class must look like residue:modulus, got '" + text + "'");
  CongruenceClass c{parse_u64(text.substr(0, colon), "residue"),
                    parse_u64(text.substr(colon + 1), "modulus")};
  require(c.modulus > 0 && c.residue < c.modulus, "congruence_class",
          "congruence class needs 0 <= residue < modulus");
  return c;
}

PrimalityPolicy parse_policy(const std::string& s) {
  if (s == "probable") return PrimalityPolicy::probable;
  if (s == "proof") return PrimalityPolicy::proof;
  throw PreconditionError("primality_policy", "primality policy must be probable or proof");
}

/// Shared state for one invocation.
struct Session {
  std::ostream& out;
  std::ostream& err;
  std::string format = "json";
  bool is_json() const { return format == "json"; }

  void emit(const json& j) { out << j.dump() << '\n'; }
};

std::string relation_text(Mod8Relation r) {
  return r == Mod8Relation::same_mod8 ? "pi = alpha (mod 8)" : "pi = alpha + 4 (mod 8)";
}

// --- subcommand bodies -------------------------------------------------------

int do_valuation(Session& s, const std::string& p_text, std::uint64_t e, bool no_oracle) {
  const auto query = ValuationQuery::make(parse_expression(p_text), e);
  const auto mode = no_oracle ? OracleMode::skip : OracleMode::check;
  const auto eq1 = nu2_sigma(query, mode);
  const auto eq2 = nu2_sigma_minus_one(query, mode);
  std::optional<BroughanZhouResult> bz;
  if (query.p != 2 && e % 2 == 1) bz = broughan_zhou_equiv(query.p, e);
  if (s.is_json()) {
    json j = {{"p", query.p},
              {"e", e},
              {"nu2_sigma", eq1.value},
              {"nu2_sigma_minus_one", eq2.value},
              {"nu2_sigma_report", eq1},
              {"nu2_sigma_minus_one_report", eq2}};
    j["broughan_zhou"] = bz ? json(*bz) : json(nullptr);
    s.emit(j);
  } else {
    s.out << "p = " << to_string(query.p) << ", e = " << e << '\n'
          << "nu2(sigma(p^e))     = " << eq1.value << "  [" << to_string(eq1.branch) << "]\n"
          << "nu2(sigma(p^e) - 1) = " << eq2.value << "  [" << to_string(eq2.branch) << "]\n";
    if (bz)
      s.out << "2^" << bz->j << " || sigma(p^e) and 2^" << bz->nu2_product
            << " || (p+1)(e+1): " << (bz->holds ? "equivalence holds" : "FAILS") << '\n';
  }
  return ok;
}

std::string class_text(const CongruenceClass& c) {
  return std::to_string(c.residue) + " (mod " + std::to_string(c.modulus) + ")";
}

int do_shapes(Session& s, const std::string& k_text, bool summary) {
  const Natural k = parse_expression(k_text);
  if (summary) {
    const auto counts = shape_count_by_s(k);
    std::uint64_t total = 0;
    json by_s = json::object();
    for (const auto& [sv, c] : counts) {
      by_s[std::to_string(sv)] = c;
      total += c;
    }
    if (s.is_json()) {
      s.emit({{"k", k}, {"nu2_k", nu2(k)}, {"counts_by_s", by_s}, {"total", total}});
    } else {
      s.out << "k = " << to_string(k) << ", nu2(k) = " << nu2(k) << ", " << total << " shapes\n";
      for (const auto& [sv, c] : counts) s.out << "  s = " << sv << ": " << c << '\n';
    }
    return ok;
  }
  const auto shapes = enumerate_shapes(k);
  if (s.is_json()) {
    for (const auto& shape : shapes) s.emit(shape);
    return ok;
  }
  std::uint32_t current = 0;
  for (const auto& shape : shapes) {
    if (shape.s != current) {
      current = shape.s;
      s.out << "s = " << current << "  (n = p_1^e_1 ... p_" << current << "^e_" << current
            << " M^2)\n";
    }
    s.out << " ";
    for (std::uint32_t i = 0; i < shape.s; ++i)
      s.out << " p_" << i + 1 << " = " << class_text(shape.prime_classes[i]) << ",";
    for (std::uint32_t i = 0; i < shape.s; ++i)
      s.out << " e_" << i + 1 << " = " << class_text(shape.exponent_classes[i])
            << (i + 1 < shape.s ? "," : "");
    s.out << '\n';
  }
  return ok;
}

int do_split(Session& s, const std::string& n_text) {
  const auto n = factor_expression(n_text);
  const auto split = split_euler_part(n);
  const auto identity = valuation_identity_check(n);
  if (s.is_json()) {
    s.emit({{"n", n.value()}, {"factorization", n}, {"split", split}, {"identity", identity}});
  } else {
    s.out << "n = " << n.to_string() << '\n'
          << "Euler part  = " << split.euler_part.to_string() << "  (s = " << split.s << ")\n"
          << "square part = " << split.square_part.to_string() << '\n'
          << "nu2(sigma(n)) = " << identity.lhs << ", shape sum = " << identity.rhs
          << (identity.holds ? "  (identity holds)" : "  (MISMATCH)") << '\n';
  }
  return identity.holds ? ok : invariant_violation;
}

std::pair<Natural, std::uint64_t> parse_prime_beta(const std::string& text) {
  const auto colon = text.find(':');
  require(colon != std::string::npos, "prime_beta",
          "expected prime:beta, got '" + text + "'");
  return {parse_expression(text.substr(0, colon)), parse_u64(text.substr(colon + 1), "beta")};
}

int do_check_euler_part(Session& s, const std::optional<std::string>& q_text,
                        std::optional<std::uint64_t> beta, const std::vector<std::string>& others,
                        const std::optional<std::string>& euler_text,
                        std::optional<std::uint64_t> k_exponent) {
  if (euler_text) {
    require(!q_text, "check_mode", "use either --euler-part or --q, not both");
    const auto pi = factor_expression(*euler_text);
    const auto report = omega_obstruction(pi, k_exponent.value_or(1));
    if (s.is_json()) {
      s.emit({{"euler_part", pi}, {"k_exponent", k_exponent.value_or(1)}, {"omega", report}});
    } else {
      s.out << "sigma(Pi)/2^" << k_exponent.value_or(1) << " = "
            << report.odd_part_factors.to_string() << ", Omega = " << report.omega << " ("
            << (report.parity_ok ? "even, no obstruction" : "odd, obstruction fires") << ")\n";
    }
    return ok;
  }
  require(q_text.has_value(), "check_mode", "check-euler-part needs --q or --euler-part");
  std::vector<std::pair<Natural, std::uint64_t>> parsed;
  for (const auto& o : others) parsed.push_back(parse_prime_beta(o));
  const auto spec = SquarePartSpec::make(parse_expression(*q_text), beta.value_or(1), parsed);
  const auto report = euler_divisibility(spec);
  std::optional<FermatVerdict> fermat;
  if (fermat_index(spec.q)) {
    std::vector<std::uint64_t> betas;
    for (const auto& o : spec.others) betas.push_back(o.second);
    fermat = fermat_criterion(spec.q, betas);
  }
  if (s.is_json()) {
    json j = {{"q", spec.q}, {"beta", spec.beta}, {"divisibility", report}};
    j["fermat"] = fermat ? json(*fermat) : json(nullptr);
    s.emit(j);
  } else {
    s.out << "q^(2 beta) " << (report.divides ? "divides" : "does not divide") << " sigma(Pi)\n";
    for (const auto& r : report.reasons)
      s.out << "  p = " << to_string(r.p) << ", beta = " << r.beta << ": "
            << (r.p_congruent_one ? "p = 1 (mod q), " : "ord_q(p) = ")
            << (r.p_congruent_one ? "" : to_string(r.modulus) + ", ") << "2 beta + 1 = "
            << to_string(r.residue) << " (mod " << to_string(r.modulus) << ") -> "
            << (r.coprime ? "coprime" : "q | sigma(p^(2 beta))") << '\n';
    if (fermat)
      s.out << "Fermat prime criterion: " << (fermat->certified ? "certified" : "not applicable")
            << '\n';
  }
  return ok;
}

int do_mod8(Session& s, const std::optional<std::string>& pi_text, std::optional<std::uint64_t> alpha,
            const std::optional<std::string>& m_text, bool assert_two_perfect,
            std::optional<std::uint32_t> table) {
  if (table) {
    const auto sols = mod16_solutions(*table);
    if (s.is_json()) {
      s.emit({{"sigma_m2_mod8", *table}, {"solutions_mod16", sols}});
    } else {
      s.out << "sigma(M^2) = " << *table << " (mod 8): (pi, alpha) mod 16 in";
      for (const auto& [p, a] : sols) s.out << " (" << p << "," << a << ")";
      s.out << '\n';
    }
    return ok;
  }
  require(pi_text.has_value(), "mod8_args", "mod8 needs --pi (or --table)");
  std::optional<Factorization> m_square;
  if (m_text) m_square = factor_expression(*m_text);
  const auto query = EulerFactorQuery::make(parse_expression(*pi_text), alpha.value_or(1), m_square);
  const auto half = half_sigma_mod8(query.pi, query.alpha);
  std::optional<Mod8Report> cls;
  std::optional<ParityReport> parity;
  if (m_square) {
    cls = mod8_classify(query, assert_two_perfect ? Mod8Mode::assert_two_perfect : Mod8Mode::standalone);
    parity = remark_parity(*m_square);
  }
  if (s.is_json()) {
    json j = {{"pi", query.pi}, {"alpha", query.alpha}, {"half_sigma_mod8", half}};
    j["classification"] = cls ? json(*cls) : json(nullptr);
    j["remark_parity"] = parity ? json(*parity) : json(nullptr);
    s.emit(j);
  } else {
    s.out << "sigma(pi^alpha)/2 = " << half << " (mod 8)\n";
    if (cls) {
      s.out << "sigma(M^2) = " << cls->sigma_m2_mod4 << " (mod 4) implies "
            << relation_text(cls->implied) << '\n';
      if (cls->observed)
        s.out << "observed " << relation_text(*cls->observed) << ": "
              << (*cls->consistent ? "consistent" : "INCONSISTENT, no such 2-perfect number")
              << '\n';
      s.out << "prime powers p = 1 (mod 4), e = 2 (mod 4): " << parity->count
            << (parity->predicts_shift ? " (odd, predicts shift)" : " (even, predicts same)") << '\n';
    }
  }
  return (cls && cls->consistent && !*cls->consistent) ? certificate : ok;
}

struct CertifyArgs {
  std::optional<std::string> pi, euler_part, pi_class, alpha_class, q, out_path;
  std::optional<std::uint64_t> alpha, beta;
  std::uint64_t k_exponent = 1;
  std::string m_constraint = "none";
};

int do_certify(Session& s, const CertifyArgs& a, PrimalityPolicy policy) {
  CandidateFamily c;
  if (a.pi) c.pi = parse_expression(*a.pi);
  if (a.euler_part) c.euler_part = factor_expression(*a.euler_part);
  if (a.pi_class) c.pi_class = parse_class(*a.pi_class);
  if (a.alpha_class) c.alpha_class = parse_class(*a.alpha_class);
  c.alpha = a.alpha;
  c.k_exponent = a.k_exponent;
  c.m_constraint = m_constraint_from_string(a.m_constraint);
  if (a.q) c.fermat_square = FermatSquareFamily{parse_expression(*a.q), a.beta};
  else require(!a.beta, "certify_args", "--beta needs --q");
  c.primality = policy;

  const auto cert = build_certificate(c);
  if (!cert) {
    if (s.is_json())
      s.emit({{"certificate", nullptr}, {"message", "no obstruction fired"}});
    else
      s.out << "no obstruction fired; nothing certified\n";
    return ok;
  }
  const json j = *cert;
  if (a.out_path) {
    std::ofstream f(*a.out_path);
    require(static_cast<bool>(f), "out_path", "cannot write " + *a.out_path);
    f << j.dump(2) << '\n';
  }
  if (s.is_json()) {
    s.emit(j);
  } else {
    s.out << to_string(cert->kind) << " [" << cert->theorem << "]\n" << cert->conclusion << '\n';
    for (const auto& w : cert->witnesses)
      s.out << "  " << w.name << " = " << to_string(w.value)
            << (w.factorization ? " = " + w.factorization->to_string() : "") << '\n';
  }
  return certificate;
}

int do_verify(Session& s, const std::string& path) {
  json j;
  if (path == "-") {
    j = json::parse(std::cin);
  } else {
    std::ifstream f(path);
    require(static_cast<bool>(f), "in_path", "cannot read " + path);
    j = json::parse(f);
  }
  const auto result = check_certificate(j.get<Certificate>());
  if (s.is_json())
    s.emit({{"valid", result.valid}, {"failures", result.failures}});
  else {
    s.out << (result.valid ? "certificate valid" : "certificate INVALID") << '\n';
    for (const auto& f : result.failures) s.out << "  " << f << '\n';
  }
  return result.valid ? ok : usage_error;
}

int do_search(Session& s, const SearchConfig& cfg) {
  const auto report = search_kperfect(cfg);
  if (s.is_json()) {
    json ranges = json::array();
    for (const auto& [lo, hi] : report.ranges_scanned) ranges.push_back({lo, hi});
    s.emit({{"k", cfg.k},
            {"bound", cfg.bound},
            {"odd_only", cfg.odd_only},
            {"hits", report.hits},
            {"pruned_count", report.pruned_count},
            {"ranges_scanned", ranges},
            {"metadata", {{"elapsed_ms", report.elapsed.count()}, {"workers", cfg.workers}}}});
  } else {
    s.out << report.hits.size() << " " << (cfg.odd_only ? "odd " : "") << cfg.k
          << "-perfect numbers <= " << cfg.bound << ":";
    for (auto h : report.hits) s.out << ' ' << h;
    s.out << "\npruned " << report.pruned_count << " candidates in " << report.elapsed.count()
          << " ms\n";
  }
  return ok;
}

int do_oracle(Session& s, bool list, const std::optional<std::string>& family,
              const std::vector<std::string>& params) {
  if (list) {
    const auto fams = oracle_families();
    if (s.is_json()) {
      json j = json::array();
      for (const auto& [name, desc] : fams)
        j.push_back({{"family", name}, {"description", desc}, {"defaults", oracle_defaults(name)}});
      s.emit(j);
    } else {
      for (const auto& [name, desc] : fams) s.out << name << "  " << desc << '\n';
    }
    return ok;
  }
  require(family.has_value(), "oracle_family", "oracle needs --family (or --list)");
  OracleScope scope{*family, {}};
  for (const auto& p : params) {
    const auto eq = p.find('=');
    require(eq != std::string::npos, "oracle_parameter", "expected key=value, got '" + p + "'");
    scope.params[p.substr(0, eq)] = parse_u64(p.substr(eq + 1), p.substr(0, eq));
  }
  const auto report = oracle_suite(scope);
  if (s.is_json()) {
    json j = {{"family", report.family},
              {"params", report.params},
              {"instances", report.instances},
              {"passed", report.passed},
              {"metadata", {{"elapsed_ms", report.elapsed.count()}}}};
    j["counterexample"] = report.counterexample ? json(*report.counterexample) : json(nullptr);
    s.emit(j);
  } else {
    s.out << report.family << ": " << (report.passed ? "pass" : "FAIL") << ", "
          << report.instances << " instances";
    if (report.counterexample) s.out << ", counterexample " << *report.counterexample;
    s.out << '\n';
  }
  if (!report.passed)
    s.err << "error: oracle family '" << report.family
          << "' found a counterexample; the implementation disagrees with direct computation\n";
  return report.passed ? ok : invariant_violation;
}

int do_abundancy(Session& s, const std::string& n_text) {
  const Natural n = parse_expression(n_text);
  const auto r = abundancy(n);
  if (s.is_json()) {
    json j = {{"n", n}, {"numerator", r.numerator}, {"denominator", r.denominator},
              {"is_integer", r.is_integer()}};
    j["k"] = r.is_integer() ? json(r.numerator) : json(nullptr);
    s.emit(j);
  } else {
    s.out << "sigma(" << to_string(n) << ")/" << to_string(n) << " = " << to_string(r.numerator);
    if (!r.is_integer()) s.out << '/' << to_string(r.denominator);
    s.out << (r.is_integer() ? "  (" + to_string(r.numerator) + "-perfect)" : "") << '\n';
  }
  return ok;
}

std::optional<std::string> prescan_config(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------

Config Config::parse(const std::string& text) {
  Config c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    require(eq != std::string::npos, "config_syntax",
            "config line " + std::to_string(lineno) + " is not key = value");
    c.values[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return c;
}

Config Config::load(const std::optional<std::string>& path) {
  std::string chosen;
  bool explicit_path = true;
  if (path) {
    chosen = *path;
  } else if (const char* env = std::getenv(kConfigEnv); env && *env) {
    chosen = env;
  } else {
    chosen = kDefaultConfigPath;
    explicit_path = false;
  }
  std::ifstream f(chosen);
  if (!f) {
    require(!explicit_path, "config_path", "cannot read config file " + chosen);
    return {};
  }
  std::stringstream buf;
  buf << f.rdbuf();
  return parse(buf.str());
}

std::optional<std::string> Config::get(const std::string& key) const {
  const auto it = values.find(key);
  if (it == values.end()) return std::nullopt;
  return it->second;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session session{out, err};
  try {
    const Config config = Config::load(prescan_config(args));

    CLI::App app{"Odd multiperfect number toolkit: valuations, shapes, Euler-part checks, "
                 "nonexistence certificates, and brute-force search."};
    app.name("oddmp");
    app.require_subcommand(1);
    app.fallthrough();
    std::string config_path;
    app.add_option("--config", config_path, "Config file (key = value); env " + std::string(kConfigEnv));
    session.format = config.get("format").value_or("json");
    app.add_option("--format", session.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    std::string policy_text = config.get("primality").value_or("probable");
    app.add_option("--primality", policy_text, "Primality policy above 2^64")
        ->check(CLI::IsMember({"probable", "proof"}));

    // valuation
    auto* val = app.add_subcommand("valuation", "2-adic valuations of sigma(p^e) and sigma(p^e)-1");
    std::string p_text;
    std::uint64_t e = 1;
    bool no_oracle = false;
    val->add_option("--p", p_text, "Prime p")->required();
    val->add_option("--e", e, "Exponent e >= 1")->required();
    val->add_flag("--no-oracle", no_oracle, "Skip the direct cross-check");

    // shapes
    auto* shp = app.add_subcommand("shapes", "Admissible shapes of odd k-perfect numbers");
    std::string k_text;
    bool summary = false;
    shp->add_option("--k", k_text, "Even k >= 2")->required();
    shp->add_flag("--summary", summary, "Only count shapes per s");

    // split
    auto* spl = app.add_subcommand("split", "Split odd n into Euler part and square part");
    std::string n_text;
    spl->add_option("--n", n_text, "Odd n, decimal or like 3^3*5^2")->required();

    // check-euler-part
    auto* chk = app.add_subcommand("check-euler-part",
                                   "Divisibility of sigma(Euler part) by q^(2 beta), or Omega parity");
    std::optional<std::string> q_text, euler_text;
    std::optional<std::uint64_t> beta, k_exp;
    std::vector<std::string> others;
    chk->add_option("--q", q_text, "Odd prime q of the square part");
    chk->add_option("--beta", beta, "Exponent beta of q^(2 beta)");
    chk->add_option("--other", others, "Square-part prime p_i:beta_i (repeatable)");
    chk->add_option("--euler-part", euler_text, "Euler part Pi for the Omega parity check");
    chk->add_option("--k", k_exp, "n is 2^k-perfect (Omega check)");

    // mod8
    auto* m8 = app.add_subcommand("mod8", "Euler factor pi^alpha modulo 8 and 16");
    std::optional<std::string> pi_text, m_text;
    std::optional<std::uint64_t> alpha;
    std::optional<std::uint32_t> table;
    bool assert_two_perfect = false;
    m8->add_option("--pi", pi_text, "Prime pi = 1 (mod 4)");
    m8->add_option("--alpha", alpha, "Exponent alpha = 1 (mod 4)");
    m8->add_option("--m-square", m_text, "Square part M^2, e.g. 3^2*5^2");
    m8->add_flag("--assert-2-perfect", assert_two_perfect,
                 "Compare the implied relation against pi, alpha");
    m8->add_option("--table", table, "Print the (pi, alpha) mod 16 table for sigma(M^2) = c (mod 8)");

    // certify
    auto* cert = app.add_subcommand("certify", "Try to certify nonexistence for a candidate family");
    CertifyArgs ca;
    cert->add_option("--pi", ca.pi, "Euler prime pi");
    cert->add_option("--alpha", ca.alpha, "Euler exponent alpha (default 1 with --pi)");
    cert->add_option("--euler-part", ca.euler_part, "General Euler part Pi, e.g. 5*13^5");
    cert->add_option("--pi-class", ca.pi_class, "pi = residue:modulus");
    cert->add_option("--alpha-class", ca.alpha_class, "alpha = residue:modulus");
    cert->add_option("--k-exponent", ca.k_exponent, "n is 2^k-perfect (default 1)");
    cert->add_option("--m-constraint", ca.m_constraint, "Primes of M: none or all-3-mod-4")
        ->check(CLI::IsMember({"none", "all-3-mod-4"}));
    cert->add_option("--q", ca.q, "Fermat prime q with q^(2 beta) * prod p_i^(2 beta) in M^2");
    cert->add_option("--beta", ca.beta, "Concrete beta (default: every beta with (2 beta + 1, q) = 1)");
    cert->add_option("--out", ca.out_path, "Also write the certificate JSON here");

    // verify-certificate
    auto* ver = app.add_subcommand("verify-certificate", "Independently re-check a certificate");
    std::string in_path;
    ver->add_option("--in", in_path, "Certificate JSON file, or - for stdin")->required();

    // search
    auto* srch = app.add_subcommand("search", "Brute-force search for k-perfect numbers");
    SearchConfig cfg;
    if (auto b = config.get("bound")) cfg.bound = parse_u64(*b, "bound");
    if (auto w = config.get("workers")) cfg.workers = static_cast<unsigned>(parse_u64(*w, "workers"));
    std::string bound_text = std::to_string(cfg.bound);
    bool shape_filter = false;
    srch->add_option("--k", cfg.k, "k >= 2")->required();
    srch->add_option("--bound", bound_text, "Upper bound (inclusive)");
    srch->add_flag("--odd", cfg.odd_only, "Odd candidates only");
    srch->add_option("--workers", cfg.workers, "Worker threads");
    srch->add_flag("--shape-filter", shape_filter, "Prune odd candidates by admissible shapes");
    srch->add_flag("--recheck-pruned", cfg.recheck_pruned, "Verify every pruned candidate");

    // oracle
    auto* orc = app.add_subcommand("oracle", "Run a closed-form-vs-direct oracle family");
    std::optional<std::string> family;
    std::vector<std::string> params;
    bool list = false;
    orc->add_option("--family", family, "Family name");
    orc->add_option("--param", params, "Range override key=value (repeatable)");
    orc->add_flag("--list", list, "List families");

    // abundancy
    auto* ab = app.add_subcommand("abundancy", "Exact sigma(n)/n");
    std::string ab_text;
    ab->add_option("--n", ab_text, "n >= 1")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return ok;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return ok;
    } catch (const CLI::ParseError& e) {
      // Subcommand help is raised as CallForHelp on the subcommand.
      err << "error: " << e.what() << '\n';
      return usage_error;
    }

    const PrimalityPolicy policy = parse_policy(policy_text);
    if (*val) return do_valuation(session, p_text, e, no_oracle);
    if (*shp) return do_shapes(session, k_text, summary);
    if (*spl) return do_split(session, n_text);
    if (*chk) return do_check_euler_part(session, q_text, beta, others, euler_text, k_exp);
    if (*m8) return do_mod8(session, pi_text, alpha, m_text, assert_two_perfect, table);
    if (*cert) return do_certify(session, ca, policy);
    if (*ver) return do_verify(session, in_path);
    if (*srch) {
      cfg.bound = parse_u64(bound_text, "bound");
      if (shape_filter) cfg.shape_filter = cfg.k;
      return do_search(session, cfg);
    }
    if (*orc) return do_oracle(session, list, family, params);
    if (*ab) return do_abundancy(session, ab_text);
    return usage_error;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << " [precondition: " << e.hypothesis() << "]\n";
    return usage_error;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return invariant_violation;
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return usage_error;
  }
}

}  // namespace oddmp::cli
