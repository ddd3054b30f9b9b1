#include "oddmp/natural.hpp"

#include <cctype>
#include <string>

namespace oddmp {

namespace {

// Expressions larger than this are refused rather than materialized.
constexpr std::size_t kMaxExpressionBits = 1u << 20;

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

std::uint64_t to_u64(const Natural& n) {
  require(fits_u64(n), "fits_u64", "integer " + to_string(n) + " exceeds 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

Natural from_u64(std::uint64_t v) {
  Natural out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

Natural parse_decimal(std::string_view text) {
  require(!text.empty(), "decimal_integer", "empty integer literal");
  for (char c : text)
    require(std::isdigit(static_cast<unsigned char>(c)) != 0, "decimal_integer",
            "malformed integer '" + std::string(text) + "'");
  Natural out;
  out.set_str(std::string(text), 10);
  return out;
}

Natural parse_expression(std::string_view raw) {
  const std::string text = strip_spaces(raw);
  require(!text.empty(), "integer_expression", "empty integer expression");
  Natural product = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t star = text.find('*', start);
    if (star == std::string::npos) star = text.size();
    const std::string_view term(text.data() + start, star - start);
    require(!term.empty(), "integer_expression", "malformed expression '" + text + "'");
    const std::size_t caret = term.find('^');
    Natural base = parse_decimal(term.substr(0, caret));
    unsigned long exponent = 1;
    if (caret != std::string_view::npos) {
      const Natural e = parse_decimal(term.substr(caret + 1));
      require(e.fits_ulong_p(), "integer_expression", "exponent too large in '" + text + "'");
      exponent = e.get_ui();
    }
    if (base > 1) {
      const double bits = static_cast<double>(mpz_sizeinbase(base.get_mpz_t(), 2)) *
                          static_cast<double>(exponent);
      require(bits + mpz_sizeinbase(product.get_mpz_t(), 2) < kMaxExpressionBits,
              "integer_expression", "expression '" + text + "' is too large");
    }
    Natural power;
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), exponent);
    product *= power;
    start = star + 1;
  }
  return product;
}

}  // namespace oddmp
