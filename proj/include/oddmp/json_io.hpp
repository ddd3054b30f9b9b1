#pragma once

// JSON encodings for every result type. Arbitrary-precision integers are
// written as JSON numbers when they fit in 64 bits and as decimal strings
// otherwise; readers accept either form.

#include <json.hpp>

#include "oddmp/arith.hpp"
#include "oddmp/euler_part.hpp"
#include "oddmp/structure.hpp"
#include "oddmp/valuation.hpp"

NLOHMANN_JSON_NAMESPACE_BEGIN
template <>
struct adl_serializer<mpz_class> {
  static void to_json(json& j, const mpz_class& n);
  static void from_json(const json& j, mpz_class& n);
};
NLOHMANN_JSON_NAMESPACE_END

namespace oddmp {

using json = nlohmann::json;

void to_json(json& j, const Factorization& f);
void from_json(const json& j, Factorization& f);

void to_json(json& j, const ValuationReport& r);
void from_json(const json& j, ValuationReport& r);
void to_json(json& j, const BroughanZhouResult& r);
void from_json(const json& j, BroughanZhouResult& r);

void to_json(json& j, const CongruenceClass& c);
void from_json(const json& j, CongruenceClass& c);
void to_json(json& j, const ShapeDescriptor& s);
void from_json(const json& j, ShapeDescriptor& s);
void to_json(json& j, const EulerPartSplit& s);
void from_json(const json& j, EulerPartSplit& s);
void to_json(json& j, const IdentityCheck& c);
void from_json(const json& j, IdentityCheck& c);

void to_json(json& j, const CoprimeBranch& b);
void from_json(const json& j, CoprimeBranch& b);
void to_json(json& j, const DivisibilityReport& r);
void from_json(const json& j, DivisibilityReport& r);
void to_json(json& j, const FermatVerdict& v);
void from_json(const json& j, FermatVerdict& v);
void to_json(json& j, const Mod8Report& r);
void from_json(const json& j, Mod8Report& r);
void to_json(json& j, const ParityReport& r);
void from_json(const json& j, ParityReport& r);
void to_json(json& j, const OmegaReport& r);
void from_json(const json& j, OmegaReport& r);

}  // namespace oddmp
