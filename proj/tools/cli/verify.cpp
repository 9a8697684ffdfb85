#include "cli/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <deltak/chromatic.hpp>
#include <deltak/closed_forms.hpp>
#include <deltak/error.hpp>
#include <deltak/generators.hpp>

namespace deltak::cli {
namespace {

// Enumeration is preferred while it stays quick; beyond that the branch and
// bound solver (itself checked against enumeration in the test suite) answers.
constexpr std::uint64_t quick_enumeration = 2'000'000;

bool fits(int k, int n, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > cap / static_cast<std::uint64_t>(std::max(k, 1))) return false;
    total *= static_cast<std::uint64_t>(k);
  }
  return total <= cap;
}

std::optional<SolveResult> exact(const Graph& g, int k, Rule rule, const SolverConfig& config) {
  try {
    if (fits(k, g.order(), std::min(config.enumeration_cap, quick_enumeration)))
      return enumerate_oracle(g, k, rule, true, config);
    return solve_bk(g, k, rule, true, config);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::size_limit) return std::nullopt;
    throw;
  }
}

std::string params(std::initializer_list<std::pair<const char*, long long>> kv) {
  std::string out;
  for (const auto& [key, value] : kv) {
    if (!out.empty()) out += ' ';
    out += key;
    out += '=';
    out += std::to_string(value);
  }
  return out;
}

template <class T>
VerifyRow compare(std::string item, std::string p, const T& claim, const std::optional<T>& oracle,
                  bool flagged = false) {
  VerifyRow row{std::move(item), std::move(p), "", "", "", flagged};
  std::ostringstream s;
  s << claim;
  row.claim = s.str();
  if (!oracle) {
    row.oracle = "-";
    row.status = "oracle-infeasible";
    return row;
  }
  row.oracle = std::to_string(*oracle);
  row.status = *oracle == claim ? "match" : "mismatch";
  return row;
}

void family_rows(std::vector<VerifyRow>& rows, const FamilyResult& claim, const Graph& g,
                 const SolverConfig& config) {
  auto result = exact(g, claim.k, Rule::one_class, config);
  auto p = params({{"n", claim.n}, {"k", claim.k}});
  rows.push_back(compare(claim.family + " min_bad", p, claim.min_bad,
                         result ? std::optional<int>(result->min_bad) : std::nullopt));
  if (!claim.coloring_count) return;
  std::optional<std::uint64_t> count;
  if (result) count = result->optimal_count;
  rows.push_back(
      compare(claim.family + " count", p, *claim.coloring_count, count, claim.count_disputed));
}

void families(std::vector<VerifyRow>& rows, const SolverConfig& config) {
  for (int n = 2; n <= 9; ++n) family_rows(rows, bk_path(n), path(n), config);
  for (int n = 3; n <= 11; n += 2) family_rows(rows, bk_cycle_odd(n), cycle(n), config);
  for (int n = 3; n <= 7; ++n) family_rows(rows, bk_wheel(n, 2), wheel(n).graph, config);
  for (int n = 3; n <= 7; n += 2) family_rows(rows, bk_wheel(n, 3), wheel(n).graph, config);
  for (int n = 3; n <= 7; ++n) family_rows(rows, bk_helm(n, 2), helm(n).graph, config);
  for (int n = 3; n <= 5; n += 2) family_rows(rows, bk_helm(n, 3), helm(n).graph, config);
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k) family_rows(rows, bk_complete(n, k), complete(n), config);
}

// histogram[j] = number of lambda-assignments of g with exactly j bad edges
std::vector<std::int64_t> bad_histogram(const Graph& g, int lambda) {
  std::vector<std::int64_t> histogram(static_cast<std::size_t>(g.size()) + 1, 0);
  std::vector<int> a(static_cast<std::size_t>(g.order()), 1);
  while (true) {
    ++histogram[static_cast<std::size_t>(bad_edge_count(g, a))];
    std::size_t i = 0;
    while (i < a.size() && a[i] == lambda) a[i++] = 1;
    if (i == a.size()) break;
    ++a[i];
  }
  return histogram;
}

// lambda-assignments of K_n with k classes: one of size n-k+1, the rest singletons
std::int64_t complete_structure_count(int n, int k, int lambda) {
  std::int64_t total = 0;
  std::vector<int> a(static_cast<std::size_t>(n), 1);
  while (true) {
    std::map<int, int> sizes;
    for (int c : a) ++sizes[c];
    if (static_cast<int>(sizes.size()) == k) {
      int big = 0;
      for (const auto& [c, s] : sizes) big = std::max(big, s);
      if (big == n - k + 1) ++total;
    }
    std::size_t i = 0;
    while (i < a.size() && a[i] == lambda) a[i++] = 1;
    if (i == a.size()) break;
    ++a[i];
  }
  return total;
}

void polys(std::vector<VerifyRow>& rows) {
  for (int n = 3; n <= 8; ++n)
    for (int lambda = 1; lambda <= 4; ++lambda) {
      auto histogram = bad_histogram(cycle(n), lambda);
      for (int j = 0; j <= n; ++j)
        rows.push_back(compare("cycle defect poly", params({{"n", n}, {"j", j}, {"lambda", lambda}}),
                               defect_poly_cycle(n, j, lambda),
                               std::optional<std::int64_t>(histogram[static_cast<std::size_t>(j)])));
    }
  for (int n = 3; n <= 11; n += 2) {
    auto histogram = bad_histogram(cycle(n), 2);
    rows.push_back(compare("cycle defect poly 2n", params({{"n", n}, {"j", 1}, {"lambda", 2}}),
                           static_cast<std::int64_t>(2 * n), std::optional<std::int64_t>(histogram[1])));
  }
  for (int n = 3; n <= 5; ++n)
    for (int k = 2; k < n; ++k)
      for (int lambda = k; lambda <= k + 1; ++lambda) {
        auto p = params({{"n", n}, {"k", k}, {"lambda", lambda}});
        auto formula = static_cast<std::int64_t>(defect_poly_complete(n, k, lambda));
        rows.push_back(compare("complete defect poly", p, formula,
                               std::optional<std::int64_t>(complete_structure_count(n, k, lambda))));
        rows.push_back(compare(
            "complete defect poly product", p, formula,
            std::optional<std::int64_t>(defect_poly_complete_product(n, k, lambda))));
      }
}

void bound_row(std::vector<VerifyRow>& rows, const BoundReport& r, std::string p) {
  VerifyRow row{r.operation, std::move(p), std::to_string(r.bound), "-", "oracle-infeasible",
                false};
  if (r.operation == "corona") {
    row.item = "corona formula";
    row.flagged = true;
  } else {
    row.item = r.operation + " bound";
    row.params += " (bound >= exact)";
  }
  if (r.exact) {
    row.oracle = std::to_string(*r.exact);
    bool ok = r.operation == "corona" ? r.bound == *r.exact : r.bound >= *r.exact;
    row.status = ok ? "match" : "mismatch";
  }
  rows.push_back(std::move(row));
}

BoundOptions options_for(Rule rule, const SolverConfig& config) {
  BoundOptions o;
  o.rule = rule;
  o.solver = config;
  return o;
}

void operations(std::vector<VerifyRow>& rows, const SolverConfig& config) {
  auto one = options_for(Rule::one_class, config);
  auto unr = options_for(Rule::unrestricted, config);
  const Graph k1 = complete(1), k3 = complete(3), p2 = path(2),
              p3 = path(3), c3 = cycle(3), c4 = cycle(4), c5 = cycle(5);

  bound_row(rows, union_bound(k3, k3, 2, one), "K3,K3 k=2");
  bound_row(rows, union_bound(p3, k3, 2, one), "P3,K3 k=2");
  bound_row(rows, union_bound(c5, c5, 2, one), "C5,C5 k=2");
  bound_row(rows, join_bound(k3, k3, 2, unr), "K3,K3 k=2");
  bound_row(rows, join_bound(k3, k3, 5, unr), "K3,K3 k=5");
  bound_row(rows, join_bound(k1, c4, 2, unr), "K1,C4 k=2");

  // worked values quoted for the join examples
  auto worked = [&](const char* what, int claim, const Graph& g, int k, Rule rule) {
    auto r = exact(g, k, rule, config);
    rows.push_back(compare(std::string("join exact"), what, claim,
                           r ? std::optional<int>(r->min_bad) : std::nullopt));
  };
  worked("K3+K3 k=2", 6, join(k3, k3).graph, 2, Rule::unrestricted);
  worked("K3+K3 k=5", 1, join(k3, k3).graph, 5, Rule::unrestricted);
  worked("K1+C4 k=2", 2, join(k1, c4).graph, 2, Rule::one_class);

  bound_row(rows, corona_formula(k1, k3, 3, one), "K1,K3 k=3");
  bound_row(rows, corona_formula(c3, k1, 2, one), "C3,K1 k=2");
  bound_row(rows, corona_formula(p2, k1, 1, one), "P2,K1 k=1");

  struct Case {
    const char* name;
    Graph g;
    int k;
  };
  const Case cases[] = {{"C5", c5, 2}, {"C7", cycle(7), 2}, {"K5", complete(5), 4},
                        {"K5", complete(5), 3}, {"W5", wheel(5).graph, 3}};
  for (const auto& c : cases) {
    auto sub = k_chromatic_subgraph(c.g, c.k, config);
    VerifyRow row{"k-chromatic subgraph", std::string(c.name) + " k=" + std::to_string(c.k),
                  "chi<=" + std::to_string(c.k), std::to_string(sub.chromatic),
                  sub.chromatic <= c.k ? "match" : "mismatch", false};
    rows.push_back(std::move(row));
  }
}

void random_pairs(std::vector<VerifyRow>& rows, std::uint64_t seed, const SolverConfig& config) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> density(0.2, 0.7);
  for (int i = 0; i < 20; ++i) {
    int ng = std::uniform_int_distribution<int>(1, 5)(rng);
    int nh = std::uniform_int_distribution<int>(1, 9 - ng)(rng);
    int k = std::uniform_int_distribution<int>(1, 3)(rng);
    k = std::min(k, ng + nh);
    auto g = random_connected(ng, density(rng), rng());
    auto h = random_connected(nh, density(rng), rng());
    std::string p = "#" + std::to_string(i) + " ng=" + std::to_string(ng) +
                    " nh=" + std::to_string(nh) + " k=" + std::to_string(k);
    bound_row(rows, union_bound(g, h, k, options_for(Rule::one_class, config)), p);
    bound_row(rows, join_bound(g, h, k, options_for(Rule::unrestricted, config)), p);
  }
}

}  // namespace

int VerifyReport::count(const std::string& status) const {
  return static_cast<int>(
      std::count_if(rows.begin(), rows.end(), [&](const VerifyRow& r) { return r.status == status; }));
}

int VerifyReport::unflagged_mismatches() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const VerifyRow& r) {
    return r.status == "mismatch" && !r.flagged;
  }));
}

VerifyReport run_verify(const std::string& suite, std::uint64_t seed, const SolverConfig& config) {
  static const std::vector<std::string> known = {"families", "polys", "operations", "random", "all"};
  if (std::find(known.begin(), known.end(), suite) == known.end())
    fail(ErrorKind::invalid_parameter, "unknown suite '" + suite + "'");
  VerifyReport report{suite, seed, {}};
  bool all = suite == "all";
  if (all || suite == "families") families(report.rows, config);
  if (all || suite == "polys") polys(report.rows);
  if (all || suite == "operations") operations(report.rows, config);
  if (all || suite == "random") random_pairs(report.rows, seed, config);
  return report;
}

nlohmann::json verify_json(const VerifyReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"item", r.item},
                    {"params", r.params},
                    {"paper", r.claim},
                    {"oracle", r.oracle},
                    {"status", r.status},
                    {"flagged", r.flagged}});
  return {{"suite", report.suite},
          {"seed", report.seed},
          {"rows", rows},
          {"summary",
           {{"match", report.count("match")},
            {"mismatch", report.count("mismatch")},
            {"oracle_infeasible", report.count("oracle-infeasible")},
            {"unflagged_mismatch", report.unflagged_mismatches()}}}};
}

void print_verify(std::ostream& out, const VerifyReport& report) {
  std::size_t wi = 4, wp = 6, wa = 5, wo = 6;
  for (const auto& r : report.rows) {
    wi = std::max(wi, r.item.size());
    wp = std::max(wp, r.params.size());
    wa = std::max(wa, r.claim.size());
    wo = std::max(wo, r.oracle.size());
  }
  out << "suite: " << report.suite << "\nseed: " << report.seed << "\n\n";
  out << std::left << std::setw(static_cast<int>(wi) + 2) << "item" << std::setw(static_cast<int>(wp) + 2)
      << "params" << std::setw(static_cast<int>(wa) + 2) << "paper" << std::setw(static_cast<int>(wo) + 2)
      << "oracle" << "status\n";
  for (const auto& r : report.rows)
    out << std::setw(static_cast<int>(wi) + 2) << r.item << std::setw(static_cast<int>(wp) + 2) << r.params
        << std::setw(static_cast<int>(wa) + 2) << r.claim << std::setw(static_cast<int>(wo) + 2) << r.oracle
        << r.status << (r.flagged && r.status == "mismatch" ? " (flagged)" : "") << "\n";
  out << std::right << "\n"
      << report.count("match") << " match, " << report.count("mismatch") << " mismatch ("
      << report.unflagged_mismatches() << " unflagged), " << report.count("oracle-infeasible")
      << " oracle-infeasible\n";
}

}  // namespace deltak::cli
