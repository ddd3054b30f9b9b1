#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "oddmp/arith.hpp"

namespace oddmp {

/// x = residue (mod modulus).
struct CongruenceClass {
  std::uint64_t residue = 0;
  std::uint64_t modulus = 1;

  bool contains(const Natural& x) const;
  friend bool operator==(const CongruenceClass&, const CongruenceClass&) = default;
};

/// The class 2^(d+1) - 1 (mod 2^(d+2)): the odd c with nu2((c+1)/2) = d.
CongruenceClass valuation_class(std::uint32_t d);

struct PartitionAssignment {
  std::vector<std::uint32_t> a;  ///< prime slots
  std::vector<std::uint32_t> b;  ///< exponent slots

  friend bool operator==(const PartitionAssignment&, const PartitionAssignment&) = default;
};

/// One admissible shape n = p_1^e_1 ... p_s^e_s M^2 of an odd k-perfect
/// number, with the congruences the composition (a, b) induces.
struct ShapeDescriptor {
  Natural k;
  std::uint32_t s = 0;
  PartitionAssignment assignment;
  std::vector<CongruenceClass> prime_classes;
  std::vector<CongruenceClass> exponent_classes;

  friend bool operator==(const ShapeDescriptor&, const ShapeDescriptor&) = default;
};

struct EulerPartSplit {
  Factorization euler_part;   ///< odd exponents
  Factorization square_part;  ///< even exponents
  std::size_t s = 0;

  friend bool operator==(const EulerPartSplit&, const EulerPartSplit&) = default;
};

struct IdentityCheck {
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  bool holds = false;
  friend bool operator==(const IdentityCheck&, const IdentityCheck&) = default;
};

/// All ordered lists of `parts` nonnegative integers summing to `total`,
/// lexicographically ascending.
std::vector<std::vector<std::uint32_t>> compositions(std::uint32_t total, std::uint32_t parts);

/// C(total + parts - 1, parts - 1).
std::uint64_t composition_count(std::uint32_t total, std::uint32_t parts);

/// Refuses k whose 2-adic valuation would make the enumeration enormous.
inline constexpr std::uint32_t kMaxShapeValuation = 16;

/// Every shape for s = 1..nu2(k), grouped by ascending s. Rejects odd k.
std::vector<ShapeDescriptor> enumerate_shapes(const Natural& k);

/// Descriptor count per s, computed from the closed-form composition count.
std::map<std::uint32_t, std::uint64_t> shape_count_by_s(const Natural& k);

EulerPartSplit split_euler_part(const Factorization& n);

/// nu2(sigma(n)) against s + sum(nu2((p_i+1)/2) + nu2((e_i+1)/2)) over the
/// odd-exponent prime powers of n. Holds for every odd n.
IdentityCheck valuation_identity_check(const Factorization& n);

/// True iff some bijection of Euler-part prime powers onto shape slots
/// satisfies every prime and exponent congruence.
bool matches_shape(const EulerPartSplit& split, const ShapeDescriptor& shape);

/// True iff the split matches any shape of k with the split's s.
bool matches_any_shape(const EulerPartSplit& split, const std::vector<ShapeDescriptor>& shapes);

}  // namespace oddmp
