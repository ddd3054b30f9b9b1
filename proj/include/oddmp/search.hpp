#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "oddmp/natural.hpp"

namespace oddmp {

/// sigma(n)/n in lowest terms.
struct Rational {
  Natural numerator;
  Natural denominator;

  bool is_integer() const { return denominator == 1; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational abundancy(const Natural& n);

inline constexpr std::uint64_t kMaxSearchBound = 1'000'000'000'000ull;
inline constexpr std::uint64_t kMaxEnumerationInput = 100'000'000ull;

struct SearchConfig {
  std::uint64_t k = 2;
  std::uint64_t bound = 2;
  bool odd_only = false;
  unsigned workers = 1;
  /// Prune odd candidates whose Euler part fits no shape of this k. Must
  /// equal `k` when set.
  std::optional<std::uint64_t> shape_filter;
  /// Debug mode: re-evaluate sigma for every pruned candidate and throw if
  /// one was a hit.
  bool recheck_pruned = false;
};

struct SearchReport {
  std::vector<std::uint64_t> hits;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges_scanned;
  std::chrono::milliseconds elapsed{0};
  std::uint64_t pruned_count = 0;
};

/// All n <= bound with sigma(n) = k n. The range is split into `workers`
/// contiguous blocks; the hit set depends only on (k, bound, odd_only).
SearchReport search_kperfect(const SearchConfig& cfg);

/// sigma(n) from the factorization (trial division).
std::uint64_t sigma_u64(std::uint64_t n);

/// sigma(n) by summing divisor pairs d, n/d up to sqrt(n). n <= 10^8.
std::uint64_t sigma_by_divisors(std::uint64_t n);

}  // namespace oddmp
