#include "oddmp/json_io.hpp"

NLOHMANN_JSON_NAMESPACE_BEGIN

void adl_serializer<mpz_class>::to_json(json& j, const mpz_class& n) {
  if (oddmp::fits_u64(n))
    j = oddmp::to_u64(n);
  else
    j = n.get_str(10);
}

void adl_serializer<mpz_class>::from_json(const json& j, mpz_class& n) {
  if (j.is_number_unsigned())
    n = oddmp::from_u64(j.get<std::uint64_t>());
  else if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
    n = oddmp::from_u64(static_cast<std::uint64_t>(j.get<std::int64_t>()));
  else if (j.is_string())
    n = oddmp::parse_decimal(j.get<std::string>());
  else
    throw oddmp::PreconditionError("json_integer", "expected a nonnegative integer, got " + j.dump());
}

NLOHMANN_JSON_NAMESPACE_END

namespace oddmp {

namespace {

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? json(*v) : json(nullptr);
}

template <class T>
void get_optional(const json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key) && !j.at(key).is_null())
    v = j.at(key).get<T>();
  else
    v.reset();
}

ValuationBranch branch_from_string(const std::string& s) {
  for (auto b : {ValuationBranch::odd_p_odd_e, ValuationBranch::otherwise_zero,
                 ValuationBranch::even_e_case, ValuationBranch::p_equals_2})
    if (s == to_string(b)) return b;
  throw PreconditionError("json_branch", "unknown valuation branch '" + s + "'");
}

}  // namespace

void to_json(json& j, const Factorization& f) {
  j = json::array();
  for (const auto& pp : f.factors()) j.push_back(json::array({json(pp.prime), pp.exponent}));
}

void from_json(const json& j, Factorization& f) {
  std::vector<PrimePower> factors;
  for (const auto& item : j) factors.push_back({item.at(0).get<Natural>(), item.at(1).get<std::uint64_t>()});
  f = Factorization::from_factors(std::move(factors));
}

void to_json(json& j, const ValuationReport& r) {
  j = {{"value", r.value}, {"branch", to_string(r.branch)}};
  put_optional(j, "r", r.r);
  put_optional(j, "oracle_value", r.oracle_value);
}

void from_json(const json& j, ValuationReport& r) {
  r.value = j.at("value").get<std::uint64_t>();
  r.branch = branch_from_string(j.at("branch").get<std::string>());
  get_optional(j, "r", r.r);
  get_optional(j, "oracle_value", r.oracle_value);
}

void to_json(json& j, const BroughanZhouResult& r) {
  j = {{"j", r.j}, {"nu2_product", r.nu2_product}, {"holds", r.holds}};
}

void from_json(const json& j, BroughanZhouResult& r) {
  r.j = j.at("j").get<std::uint64_t>();
  r.nu2_product = j.at("nu2_product").get<std::uint64_t>();
  r.holds = j.at("holds").get<bool>();
}

void to_json(json& j, const CongruenceClass& c) {
  j = {{"residue", c.residue}, {"modulus", c.modulus}};
}

void from_json(const json& j, CongruenceClass& c) {
  c.residue = j.at("residue").get<std::uint64_t>();
  c.modulus = j.at("modulus").get<std::uint64_t>();
  require(c.modulus > 0 && c.residue < c.modulus, "congruence_class",
          "congruence class needs 0 <= residue < modulus");
}

void to_json(json& j, const ShapeDescriptor& s) {
  j = {{"k", s.k},
       {"s", s.s},
       {"a", s.assignment.a},
       {"b", s.assignment.b},
       {"prime_classes", s.prime_classes},
       {"exponent_classes", s.exponent_classes}};
}

void from_json(const json& j, ShapeDescriptor& s) {
  s.k = j.at("k").get<Natural>();
  s.s = j.at("s").get<std::uint32_t>();
  s.assignment.a = j.at("a").get<std::vector<std::uint32_t>>();
  s.assignment.b = j.at("b").get<std::vector<std::uint32_t>>();
  s.prime_classes = j.at("prime_classes").get<std::vector<CongruenceClass>>();
  s.exponent_classes = j.at("exponent_classes").get<std::vector<CongruenceClass>>();
}

void to_json(json& j, const EulerPartSplit& s) {
  j = {{"euler_part", s.euler_part}, {"square_part", s.square_part}, {"s", s.s}};
}

void from_json(const json& j, EulerPartSplit& s) {
  s.euler_part = j.at("euler_part").get<Factorization>();
  s.square_part = j.at("square_part").get<Factorization>();
  s.s = j.at("s").get<std::size_t>();
}

void to_json(json& j, const IdentityCheck& c) {
  j = {{"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}};
}

void to_json(json& j, const CoprimeBranch& b) {
  j = {{"p", b.p},
       {"beta", b.beta},
       {"branch", b.p_congruent_one ? "p_1_mod_q" : "order"},
       {"modulus", b.modulus},
       {"two_beta_plus_one_mod", b.residue},
       {"coprime", b.coprime}};
}

void to_json(json& j, const DivisibilityReport& r) {
  j = {{"divides", r.divides}, {"reasons", r.reasons}};
}

void to_json(json& j, const FermatVerdict& v) {
  j = {{"certified", v.certified},
       {"t", v.t},
       {"product_mod_q", v.product_mod_q},
       {"justification", v.justification}};
}

void to_json(json& j, const Mod8Report& r) {
  j = {{"sigma_m2_mod4", r.sigma_m2_mod4}, {"implied", to_string(r.implied)}};
  j["observed"] = r.observed ? json(to_string(*r.observed)) : json(nullptr);
  put_optional(j, "consistent", r.consistent);
}

void to_json(json& j, const ParityReport& r) {
  j = {{"count", r.count}, {"predicts_shift", r.predicts_shift}};
}

void to_json(json& j, const OmegaReport& r) {
  j = {{"sigma", r.sigma_pi},
       {"odd_part", r.odd_part},
       {"odd_part_factors", r.odd_part_factors},
       {"omega", r.omega},
       {"parity_ok", r.parity_ok}};
}

}  // namespace oddmp

namespace oddmp {

namespace {

Mod8Relation relation_from_string(const std::string& s) {
  for (auto r : {Mod8Relation::same_mod8, Mod8Relation::shifted_by_4})
    if (s == to_string(r)) return r;
  throw PreconditionError("json_relation", "unknown mod 8 relation '" + s + "'");
}

}  // namespace

void from_json(const json& j, IdentityCheck& c) {
  c.lhs = j.at("lhs").get<std::uint64_t>();
  c.rhs = j.at("rhs").get<std::uint64_t>();
  c.holds = j.at("holds").get<bool>();
}

void from_json(const json& j, CoprimeBranch& b) {
  b.p = j.at("p").get<Natural>();
  b.beta = j.at("beta").get<std::uint64_t>();
  b.p_congruent_one = j.at("branch").get<std::string>() == "p_1_mod_q";
  b.modulus = j.at("modulus").get<Natural>();
  b.residue = j.at("two_beta_plus_one_mod").get<Natural>();
  b.coprime = j.at("coprime").get<bool>();
}

void from_json(const json& j, DivisibilityReport& r) {
  r.divides = j.at("divides").get<bool>();
  r.reasons = j.at("reasons").get<std::vector<CoprimeBranch>>();
}

void from_json(const json& j, FermatVerdict& v) {
  v.certified = j.at("certified").get<bool>();
  v.t = j.at("t").get<std::uint32_t>();
  v.product_mod_q = j.at("product_mod_q").get<Natural>();
  v.justification = j.at("justification").get<std::string>();
}

void from_json(const json& j, Mod8Report& r) {
  r.sigma_m2_mod4 = j.at("sigma_m2_mod4").get<std::uint32_t>();
  r.implied = relation_from_string(j.at("implied").get<std::string>());
  if (j.contains("observed") && !j.at("observed").is_null())
    r.observed = relation_from_string(j.at("observed").get<std::string>());
  else
    r.observed.reset();
  get_optional(j, "consistent", r.consistent);
}

void from_json(const json& j, ParityReport& r) {
  r.count = j.at("count").get<std::uint64_t>();
  r.predicts_shift = j.at("predicts_shift").get<bool>();
}

void from_json(const json& j, OmegaReport& r) {
  r.sigma_pi = j.at("sigma").get<Natural>();
  r.odd_part = j.at("odd_part").get<Natural>();
  r.odd_part_factors = j.at("odd_part_factors").get<Factorization>();
  r.omega = j.at("omega").get<std::uint64_t>();
  r.parity_ok = j.at("parity_ok").get<bool>();
}

}  // namespace oddmp
