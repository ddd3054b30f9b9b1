#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace oddmp {

/// A named family of closed-form-versus-direct checks plus range overrides.
/// Unset parameters take the family's defaults.
struct OracleScope {
  std::string family;
  std::map<std::string, std::uint64_t> params;
};

struct OracleReport {
  std::string family;
  std::map<std::string, std::uint64_t> params;  ///< effective ranges
  std::uint64_t instances = 0;
  bool passed = true;
  std::optional<std::string> counterexample;    ///< first failing instance
  std::chrono::milliseconds elapsed{0};
};

/// Family names with one-line descriptions, in a stable order.
std::vector<std::pair<std::string, std::string>> oracle_families();

/// Default parameters of a family. Rejects unknown names.
std::map<std::string, std::uint64_t> oracle_defaults(const std::string& family);

/// Runs the family exhaustively over its ranges. A counterexample means the
/// implementation is wrong. Rejects unknown families and parameters.
OracleReport oracle_suite(const OracleScope& scope);

}  // namespace oddmp
