#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace deltak::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_mismatch = 1,
  exit_invalid = 2,
  exit_size_limit = 3,
};

struct RunConfig {
  std::string subcommand;
  std::string input;
  std::string family;
  int k = 0;
  /// Empty selects the default: unrestricted for join, one-class otherwise.
  std::string rule;
  bool allow_unused = false;
  std::optional<int> lambda;
  std::optional<int> bad;
  bool json = false;
  std::uint64_t cap = 100'000'000;
  std::uint64_t node_limit = 4'000'000'000;
  unsigned workers = 1;
  std::uint64_t seed = 1;
  bool require_connected = false;
  bool heuristic = false;
  bool no_count = false;
  bool relaxed = false;
  std::string suite = "all";
  std::string dot;
  /// gen: random connected graph instead of a family.
  int random_n = 0;
  double density = 0.3;
};

/// Parses `args` (without the program name) and runs the subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already-parsed configuration.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace deltak::cli
