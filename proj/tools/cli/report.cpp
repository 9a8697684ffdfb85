#include "cli/report.hpp"

#include <ostream>

#include <deltak/coloring_io.hpp>

namespace deltak::cli {

nlohmann::json solve_json(const Graph& g, int k, const SolveResult& r) {
  nlohmann::json j;
  j["n"] = g.order();
  j["m"] = g.size();
  j["k"] = k;
  j["rule"] = std::string(to_string(r.rule));
  j["surjective"] = r.surjective;
  j["min_bad"] = r.min_bad;
  j["optimal_count"] = r.optimal_count ? nlohmann::json(*r.optimal_count) : nlohmann::json(nullptr);
  j["witness"] = r.witness.assignment;
  j["exact"] = r.exact;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

nlohmann::json family_json(const FamilyResult& f) {
  nlohmann::json j;
  j["family"] = f.family;
  j["n"] = f.n;
  j["k"] = f.k;
  j["min_bad"] = f.min_bad;
  j["coloring_count"] =
      f.coloring_count ? nlohmann::json(*f.coloring_count) : nlohmann::json("unclaimed");
  j["count_disputed"] = f.count_disputed;
  j["source"] = f.source;
  return j;
}

nlohmann::json bound_json(const BoundReport& r) {
  auto summary = [](const GraphSummary& s) {
    return nlohmann::json{{"n", s.n}, {"m", s.m}, {"chromatic", s.chromatic}};
  };
  nlohmann::json j;
  j["operation"] = r.operation;
  j["left"] = summary(r.left);
  j["right"] = summary(r.right);
  j["swapped"] = r.swapped;
  j["t"] = r.t;
  j["k"] = r.k;
  j["rule"] = std::string(to_string(r.rule));
  j["relaxed"] = r.relaxed;
  j["left_bad"] = r.left_bad;
  j["right_bad"] = r.right_bad;
  j["combination"] = r.combination;
  if (r.theta_star) j["theta_star"] = *r.theta_star;
  j["bound"] = r.bound;
  j["exact"] = r.exact ? nlohmann::json(*r.exact) : nlohmann::json(nullptr);
  j["slack"] = r.slack ? nlohmann::json(*r.slack) : nlohmann::json(nullptr);
  return j;
}

void print_solve(std::ostream& out, const Graph& g, int k, const SolveResult& r) {
  out << "graph:        n=" << g.order() << " m=" << g.size() << "\n"
      << "colours:      k=" << k << " (" << to_string(r.rule)
      << (r.surjective ? ", all colours used" : ", unused colours allowed") << ")\n"
      << "min_bad:      " << r.min_bad << (r.exact ? "" : " (heuristic upper bound)") << "\n";
  if (r.optimal_count) out << "optimal:      " << *r.optimal_count << " colourings\n";
  out << "witness:      " << format_coloring(r.witness) << "\n"
      << "elapsed:      " << r.elapsed_ms << " ms\n";
}

void print_bound(std::ostream& out, const BoundReport& r) {
  out << "operation:    " << r.operation << (r.swapped ? " (operands swapped)" : "") << "\n"
      << "left:         n=" << r.left.n << " m=" << r.left.m << " chi=" << r.left.chromatic << "\n"
      << "right:        n=" << r.right.n << " m=" << r.right.m << " chi=" << r.right.chromatic
      << "\n"
      << "colours:      t=" << r.t << " k=" << r.k << " (" << to_string(r.rule)
      << (r.relaxed ? ", relaxed" : "") << ")\n"
      << "terms:        b_t(left)=" << r.left_bad << " b_k(right)=" << r.right_bad
      << " combination=" << r.combination;
  if (r.theta_star) out << " theta*=" << *r.theta_star;
  out << "\n"
      << (r.operation == "corona" ? "formula:      " : "bound:        ") << r.bound << "\n"
      << "exact:        " << (r.exact ? std::to_string(*r.exact) : "oracle-infeasible") << "\n";
  if (r.slack)
    out << (r.operation == "corona" ? "difference:   " : "slack:        ") << *r.slack << "\n";
}

}  // namespace deltak::cli
