#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cctype>

#include "oddmp/arith.hpp"
#include "oddmp/certificate.hpp"
#include "oddmp/euler_part.hpp"
#include "oddmp/json_io.hpp"
#include "oddmp/oracle.hpp"
#include "oddmp/search.hpp"
#include "oddmp/structure.hpp"
#include "oddmp/valuation.hpp"

namespace py = pybind11;
using oddmp::json;
using oddmp::Natural;

// Python int <-> mpz_class through the decimal representation.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    return value.set_str(py::str(src).cast<std::string>(), 10) == 0;
  }

  static handle cast(const mpz_class& n, return_value_policy, handle) {
    return PyLong_FromString(n.get_str(10).c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// JSON -> Python. Integers too large for JSON numbers travel as decimal
// strings; they come back as ints.
py::object to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: {
      const auto s = j.get<std::string>();
      if (all_digits(s)) return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
      return py::str(s);
    }
    case json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(to_py(item));
      return out;
    }
    default: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return out;
    }
  }
}

json from_py(const py::handle& obj) {
  if (obj.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
  if (py::isinstance<py::int_>(obj)) return obj.cast<Natural>();
  if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
  if (py::isinstance<py::dict>(obj)) {
    json out = json::object();
    for (const auto& [k, v] : obj.cast<py::dict>()) out[py::str(k).cast<std::string>()] = from_py(v);
    return out;
  }
  if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
    json out = json::array();
    for (const auto& item : obj) out.push_back(from_py(item));
    return out;
  }
  throw py::type_error("cannot convert " + py::repr(obj).cast<std::string>() + " to JSON");
}

oddmp::PrimalityPolicy policy_from(const std::string& s) {
  if (s == "probable") return oddmp::PrimalityPolicy::probable;
  if (s == "proof") return oddmp::PrimalityPolicy::proof;
  throw oddmp::PreconditionError("primality_policy", "policy must be 'probable' or 'proof'");
}

oddmp::Factorization factorization_from(const py::handle& obj) {
  if (py::isinstance<py::int_>(obj)) return oddmp::factor(obj.cast<Natural>());
  if (py::isinstance<py::str>(obj)) return oddmp::factor_expression(obj.cast<std::string>());
  return from_py(obj).get<oddmp::Factorization>();
}

std::optional<oddmp::CongruenceClass> class_from(const std::optional<std::pair<std::uint64_t, std::uint64_t>>& c) {
  if (!c) return std::nullopt;
  return oddmp::CongruenceClass{c->first, c->second};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Odd multiperfect number toolkit (C++ core)";

  py::register_exception<oddmp::PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<oddmp::InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  m.def("is_prime", [](const Natural& n, const std::string& policy) {
    return oddmp::is_prime(n, policy_from(policy));
  }, py::arg("n"), py::arg("policy") = "probable");

  m.def("factor", [](const Natural& n) {
    std::vector<std::pair<Natural, std::uint64_t>> out;
    const auto f = oddmp::factor(n);
    for (const auto& pp : f.factors()) out.emplace_back(pp.prime, pp.exponent);
    return out;
  }, py::arg("n"), "Prime factorization as a list of (p, e), p increasing.");

  m.def("sigma", [](const Natural& n) { return oddmp::sigma(oddmp::factor(n)); }, py::arg("n"));
  m.def("nu", [](const Natural& p, const Natural& n) { return oddmp::nu(p, n); }, py::arg("p"), py::arg("n"));
  m.def("ord", [](const Natural& q, const Natural& m) { return oddmp::ord(q, m); }, py::arg("q"), py::arg("m"));
  m.def("big_omega", [](const Natural& n) { return oddmp::big_omega(n); }, py::arg("n"));

  m.def("abundancy", [](const Natural& n) {
    const auto r = oddmp::abundancy(n);
    return std::make_pair(r.numerator, r.denominator);
  }, py::arg("n"), "sigma(n)/n as (numerator, denominator) in lowest terms.");

  m.def("nu2_sigma", [](const Natural& p, std::uint64_t e) {
    return to_py(json(oddmp::nu2_sigma(oddmp::ValuationQuery::make(p, e))));
  }, py::arg("p"), py::arg("e"));
  m.def("nu2_sigma_minus_one", [](const Natural& p, std::uint64_t e) {
    return to_py(json(oddmp::nu2_sigma_minus_one(oddmp::ValuationQuery::make(p, e))));
  }, py::arg("p"), py::arg("e"));
  m.def("broughan_zhou", [](const Natural& p, std::uint64_t e) {
    return to_py(json(oddmp::broughan_zhou_equiv(p, e)));
  }, py::arg("p"), py::arg("e"));

  m.def("shapes", [](const Natural& k) {
    py::list out;
    for (const auto& s : oddmp::enumerate_shapes(k)) out.append(to_py(json(s)));
    return out;
  }, py::arg("k"));

  m.def("split", [](const py::object& n) {
    const auto f = factorization_from(n);
    return to_py({{"split", oddmp::split_euler_part(f)}, {"identity", oddmp::valuation_identity_check(f)}});
  }, py::arg("n"), "n as int, expression string like '3^3*5^2', or [[p, e], ...].");

  m.def("sigma_coprime_to_q", [](const Natural& p, std::uint64_t beta, const Natural& q) {
    return oddmp::sigma_coprime_to_q(p, beta, q);
  }, py::arg("p"), py::arg("beta"), py::arg("q"));

  m.def("fermat_criterion", [](const Natural& q, const std::vector<std::uint64_t>& betas) {
    return to_py(json(oddmp::fermat_criterion(q, betas)));
  }, py::arg("q"), py::arg("betas"));

  m.def("half_sigma_mod8", [](const Natural& pi, std::uint64_t alpha) {
    return oddmp::half_sigma_mod8(pi, alpha);
  }, py::arg("pi"), py::arg("alpha"));

  m.def("mod16_solutions", &oddmp::mod16_solutions, py::arg("c"));

  m.def("omega_obstruction", [](const py::object& euler_part, std::uint64_t k) {
    return to_py(json(oddmp::omega_obstruction(factorization_from(euler_part), k)));
  }, py::arg("euler_part"), py::arg("k_exponent") = 1);

  m.def("certify", [](std::optional<Natural> pi, std::optional<std::uint64_t> alpha,
                      std::optional<py::object> euler_part,
                      std::optional<std::pair<std::uint64_t, std::uint64_t>> pi_class,
                      std::optional<std::pair<std::uint64_t, std::uint64_t>> alpha_class,
                      std::uint64_t k_exponent, const std::string& m_constraint,
                      std::optional<Natural> q, std::optional<std::uint64_t> beta,
                      const std::string& primality) -> py::object {
    oddmp::CandidateFamily c;
    c.pi = pi;
    c.alpha = alpha;
    if (euler_part) c.euler_part = factorization_from(*euler_part);
    c.pi_class = class_from(pi_class);
    c.alpha_class = class_from(alpha_class);
    c.k_exponent = k_exponent;
    c.m_constraint = oddmp::m_constraint_from_string(m_constraint);
    if (q) c.fermat_square = oddmp::FermatSquareFamily{*q, beta};
    c.primality = policy_from(primality);
    const auto cert = oddmp::build_certificate(c);
    if (!cert) return py::none();
    return to_py(json(*cert));
  }, py::kw_only(), py::arg("pi") = py::none(), py::arg("alpha") = py::none(),
     py::arg("euler_part") = py::none(), py::arg("pi_class") = py::none(),
     py::arg("alpha_class") = py::none(), py::arg("k_exponent") = 1,
     py::arg("m_constraint") = "none", py::arg("q") = py::none(), py::arg("beta") = py::none(),
     py::arg("primality") = "probable",
     "Certificate dict for the first obstruction that fires, or None.");

  m.def("verify_certificate", [](const py::dict& cert) {
    const auto r = oddmp::check_certificate(from_py(cert).get<oddmp::Certificate>());
    return std::make_pair(r.valid, r.failures);
  }, py::arg("certificate"), "(valid, failures) from the independent checker.");

  m.def("search", [](std::uint64_t k, std::uint64_t bound, bool odd_only, unsigned workers,
                     bool shape_filter) {
    oddmp::SearchConfig cfg;
    cfg.k = k;
    cfg.bound = bound;
    cfg.odd_only = odd_only;
    cfg.workers = workers;
    if (shape_filter) cfg.shape_filter = k;
    py::gil_scoped_release release;
    return oddmp::search_kperfect(cfg).hits;
  }, py::arg("k"), py::arg("bound"), py::arg("odd_only") = false, py::arg("workers") = 1,
     py::arg("shape_filter") = false);

  m.def("oracle", [](const std::string& family, const std::map<std::string, std::uint64_t>& params) {
    const auto r = oddmp::oracle_suite({family, params});
    py::dict out;
    out["family"] = r.family;
    out["params"] = r.params;
    out["instances"] = r.instances;
    out["passed"] = r.passed;
    out["counterexample"] = r.counterexample ? py::object(py::str(*r.counterexample)) : py::none();
    return out;
  }, py::arg("family"), py::arg("params") = std::map<std::string, std::uint64_t>{});

  m.def("oracle_families", [] {
    std::vector<std::string> names;
    for (const auto& [name, desc] : oddmp::oracle_families()) names.push_back(name);
    return names;
  });
}
