#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <deltak/solver.hpp>

namespace deltak::cli {

struct VerifyRow {
  std::string item;
  std::string params;
  std::string claim;
  std::string oracle;
  std::string status;  // match | mismatch | oracle-infeasible
  /// Known open question: a mismatch here is reported but does not fail.
  bool flagged = false;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<VerifyRow> rows;

  int count(const std::string& status) const;
  int unflagged_mismatches() const;
};

/// suite: families, polys, operations, random or all.
VerifyReport run_verify(const std::string& suite, std::uint64_t seed, const SolverConfig& config);

nlohmann::json verify_json(const VerifyReport& report);
void print_verify(std::ostream& out, const VerifyReport& report);

}  // namespace deltak::cli
