#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace oddmp::cli {

/// Exit codes. `certificate` means a nonexistence proof was produced.
enum ExitCode : int {
  ok = 0,
  usage_error = 1,
  certificate = 2,
  invariant_violation = 3,
};

/// Environment variable naming the config file.
inline constexpr const char* kConfigEnv = "ODDMP_CONFIG";
inline constexpr const char* kDefaultConfigPath = "oddmp.conf";

/// Simple `key = value` file; `#` starts a comment. Recognized keys: bound,
/// workers, primality, format.
struct Config {
  std::map<std::string, std::string> values;

  static Config parse(const std::string& text);
  /// Loads `path`, or the env/default path when empty. A missing default
  /// file yields an empty config; a missing explicit file is an error.
  static Config load(const std::optional<std::string>& path);

  std::optional<std::string> get(const std::string& key) const;
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oddmp::cli
