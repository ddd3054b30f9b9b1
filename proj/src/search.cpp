#include "oddmp/search.hpp"

#include <algorithm>
#include <thread>

#include "oddmp/arith.hpp"
#include "oddmp/structure.hpp"

namespace oddmp {

namespace {

struct ShardResult {
  std::vector<std::uint64_t> hits;
  std::uint64_t pruned = 0;
};

class ShapePruner {
 public:
  explicit ShapePruner(std::uint64_t k) : valuation_(nu2_u64(k)) {
    if (valuation_ >= 1) shapes_ = enumerate_shapes(from_u64(k));
  }

  /// True when odd n cannot be k-perfect by its Euler part.
  bool prune(const std::vector<std::pair<std::uint64_t, std::uint32_t>>& factors) const {
    std::vector<PrimePower> powers;
    powers.reserve(factors.size());
    for (const auto& [p, e] : factors) powers.push_back({from_u64(p), e});
    const EulerPartSplit split = split_euler_part(Factorization::trusted(std::move(powers)));
    // k odd: sigma(n) odd, so every exponent must be even.
    if (valuation_ == 0) return split.s != 0;
    if (split.s == 0 || split.s > valuation_) return true;
    return !matches_any_shape(split, shapes_);
  }

 private:
  std::uint64_t valuation_;
  std::vector<ShapeDescriptor> shapes_;
};

std::uint64_t sigma_from(const std::vector<std::pair<std::uint64_t, std::uint32_t>>& factors) {
  unsigned __int128 out = 1;
  for (const auto& [p, e] : factors) {
    unsigned __int128 term = 1, power = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
      power *= p;
      term += power;
    }
    out *= term;
  }
  return static_cast<std::uint64_t>(out);
}

bool is_hit(std::uint64_t sigma, std::uint64_t k, std::uint64_t n) {
  return static_cast<unsigned __int128>(k) * n == sigma;
}

ShardResult scan(std::uint64_t lo, std::uint64_t hi, const SearchConfig& cfg,
                 const ShapePruner* pruner) {
  ShardResult out;
  std::uint64_t n = lo;
  if (cfg.odd_only && n % 2 == 0) ++n;
  const std::uint64_t step = cfg.odd_only ? 2 : 1;
  for (; n <= hi; n += step) {
    const auto factors = factor_u64(n);
    if (pruner && n % 2 == 1 && pruner->prune(factors)) {
      ++out.pruned;
      if (cfg.recheck_pruned && is_hit(sigma_from(factors), cfg.k, n))
        throw InvariantViolation("shape pruning discarded the hit " + std::to_string(n));
      continue;
    }
    if (is_hit(sigma_from(factors), cfg.k, n)) out.hits.push_back(n);
  }
  return out;
}

}  // namespace

Rational abundancy(const Natural& n) {
  require(n >= 1, "positive_integer", "abundancy requires n >= 1");
  const Natural s = sigma(factor(n));
  const Natural g = gcd(s, n);
  return Rational{s / g, n / g};
}

std::uint64_t sigma_u64(std::uint64_t n) {
  require(n >= 1, "positive_integer", "sigma requires n >= 1");
  return sigma_from(factor_u64(n));
}

std::uint64_t sigma_by_divisors(std::uint64_t n) {
  require(n >= 1 && n <= kMaxEnumerationInput, "enumeration_bound",
          "divisor enumeration is limited to 1 <= n <= 10^8");
  std::uint64_t total = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total += d;
    if (d * d != n) total += n / d;
  }
  return total;
}

SearchReport search_kperfect(const SearchConfig& cfg) {
  require(cfg.k >= 2, "k_at_least_2", "k must be >= 2");
  require(cfg.bound >= 2, "bound_at_least_2", "bound must be >= 2");
  require(cfg.bound <= kMaxSearchBound, "bound_limit", "bound exceeds 10^12");
  require(cfg.workers >= 1, "workers_positive", "workers must be >= 1");
  if (cfg.shape_filter)
    require(*cfg.shape_filter == cfg.k, "shape_filter_matches_k",
            "shape pruning with a different k would discard genuine hits");

  const auto start = std::chrono::steady_clock::now();
  std::optional<ShapePruner> pruner;
  if (cfg.shape_filter) pruner.emplace(cfg.k);

  const std::uint64_t workers = std::min<std::uint64_t>(cfg.workers, cfg.bound);
  const std::uint64_t block = cfg.bound / workers;
  SearchReport report;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t lo = w * block + 1;
    const std::uint64_t hi = (w + 1 == workers) ? cfg.bound : (w + 1) * block;
    report.ranges_scanned.emplace_back(lo, hi);
  }

  std::vector<ShardResult> results(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          const auto [lo, hi] = report.ranges_scanned[w];
          results[w] = scan(lo, hi, cfg, pruner ? &*pruner : nullptr);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (auto& r : results) {
    report.hits.insert(report.hits.end(), r.hits.begin(), r.hits.end());
    report.pruned_count += r.pruned;
  }
  std::sort(report.hits.begin(), report.hits.end());
  for (std::uint64_t h : report.hits) {
    const Natural n = from_u64(h);
    if (sigma(factor(n)) != n * from_u64(cfg.k))
      throw InvariantViolation("search reported a non-hit " + std::to_string(h));
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace oddmp
