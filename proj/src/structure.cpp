#include "oddmp/structure.hpp"

#include <algorithm>
#include <numeric>

namespace oddmp {

namespace {

void compose(std::uint32_t remaining, std::uint32_t slot, std::vector<std::uint32_t>& current,
             std::vector<std::vector<std::uint32_t>>& out) {
  if (slot + 1 == current.size()) {
    current[slot] = remaining;
    out.push_back(current);
    return;
  }
  for (std::uint32_t v = 0; v <= remaining; ++v) {
    current[slot] = v;
    compose(remaining - v, slot + 1, current, out);
  }
}

std::uint32_t checked_valuation(const Natural& k) {
  require(k >= 2, "k_at_least_2", "k must be >= 2");
  const std::uint64_t v = nu2(k);
  require(v >= 1, "k_even", "odd k has no admissible odd shapes (nu2(k) must be >= 1)");
  require(v <= kMaxShapeValuation, "k_valuation_bound",
          "nu2(k) = " + std::to_string(v) + " exceeds the enumeration bound " +
              std::to_string(kMaxShapeValuation));
  return static_cast<std::uint32_t>(v);
}

}  // namespace

bool CongruenceClass::contains(const Natural& x) const {
  return mpz_fdiv_ui(x.get_mpz_t(), modulus) == residue;
}

CongruenceClass valuation_class(std::uint32_t d) {
  require(d <= 61, "class_exponent_bound", "congruence modulus exceeds 64 bits");
  return {(std::uint64_t{1} << (d + 1)) - 1, std::uint64_t{1} << (d + 2)};
}

std::vector<std::vector<std::uint32_t>> compositions(std::uint32_t total, std::uint32_t parts) {
  require(parts >= 1, "parts_positive", "compositions need at least one part");
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> current(parts, 0);
  compose(total, 0, current, out);
  return out;
}

std::uint64_t composition_count(std::uint32_t total, std::uint32_t parts) {
  require(parts >= 1, "parts_positive", "compositions need at least one part");
  Natural c;
  mpz_bin_uiui(c.get_mpz_t(), total + parts - 1, parts - 1);
  return to_u64(c);
}

std::vector<ShapeDescriptor> enumerate_shapes(const Natural& k) {
  const std::uint32_t v = checked_valuation(k);
  std::vector<ShapeDescriptor> out;
  for (std::uint32_t s = 1; s <= v; ++s) {
    for (const auto& comp : compositions(v - s, 2 * s)) {
      ShapeDescriptor shape;
      shape.k = k;
      shape.s = s;
      shape.assignment.a.assign(comp.begin(), comp.begin() + s);
      shape.assignment.b.assign(comp.begin() + s, comp.end());
      for (auto d : shape.assignment.a) shape.prime_classes.push_back(valuation_class(d));
      for (auto d : shape.assignment.b) shape.exponent_classes.push_back(valuation_class(d));
      out.push_back(std::move(shape));
    }
  }
  return out;
}

std::map<std::uint32_t, std::uint64_t> shape_count_by_s(const Natural& k) {
  const std::uint32_t v = checked_valuation(k);
  std::map<std::uint32_t, std::uint64_t> out;
  for (std::uint32_t s = 1; s <= v; ++s) out[s] = composition_count(v - s, 2 * s);
  return out;
}

EulerPartSplit split_euler_part(const Factorization& n) {
  require(n.is_odd(), "odd_n", "Euler part split requires odd n, got " + n.to_string());
  std::vector<PrimePower> odd, even;
  for (const auto& pp : n.factors()) (pp.exponent % 2 ? odd : even).push_back(pp);
  EulerPartSplit out;
  out.s = odd.size();
  out.euler_part = Factorization::trusted(std::move(odd));
  out.square_part = Factorization::trusted(std::move(even));
  return out;
}

IdentityCheck valuation_identity_check(const Factorization& n) {
  const EulerPartSplit split = split_euler_part(n);
  IdentityCheck out;
  out.lhs = nu2(sigma(n));
  out.rhs = split.s;
  for (const auto& pp : split.euler_part.factors()) {
    out.rhs += nu2((pp.prime + 1) / 2);
    out.rhs += nu2_u64((pp.exponent + 1) / 2);
  }
  out.holds = out.lhs == out.rhs;
  return out;
}

bool matches_shape(const EulerPartSplit& split, const ShapeDescriptor& shape) {
  require(split.s == shape.s, "s_matches",
          "split has s = " + std::to_string(split.s) + " but shape has s = " +
              std::to_string(shape.s));
  const auto factors = split.euler_part.factors();
  std::vector<std::size_t> slot(split.s);
  std::iota(slot.begin(), slot.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < slot.size() && ok; ++i) {
      const auto& pp = factors[i];
      ok = shape.prime_classes[slot[i]].contains(pp.prime) &&
           shape.exponent_classes[slot[i]].contains(from_u64(pp.exponent));
    }
    if (ok) return true;
  } while (std::next_permutation(slot.begin(), slot.end()));
  return false;
}

bool matches_any_shape(const EulerPartSplit& split, const std::vector<ShapeDescriptor>& shapes) {
  return std::any_of(shapes.begin(), shapes.end(), [&](const ShapeDescriptor& shape) {
    return shape.s == split.s && matches_shape(split, shape);
  });
}

}  // namespace oddmp
