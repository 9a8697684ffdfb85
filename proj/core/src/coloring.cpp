#include "deltak/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "deltak/error.hpp"

namespace deltak {

namespace {

void check_length(const Graph& g, std::span<const int> assignment) {
  if (static_cast<int>(assignment.size()) != g.order())
    fail(ErrorKind::invalid_coloring,
         "colouring has " + std::to_string(assignment.size()) + " entries for a graph on " +
             std::to_string(g.order()) + " vertices");
}

}  // namespace

std::string_view to_string(Rule rule) {
  return rule == Rule::one_class ? "one-class" : "unrestricted";
}

Rule parse_rule(std::string_view text) {
  if (text == "one-class") return Rule::one_class;
  if (text == "unrestricted") return Rule::unrestricted;
  fail(ErrorKind::invalid_parameter, "unknown rule '" + std::string(text) +
                                         "' (expected one-class or unrestricted)");
}

int bad_edge_count(const Graph& g, std::span<const int> assignment) {
  check_length(g, assignment);
  int count = 0;
  for (const auto& [u, v] : g.edges()) count += assignment[u] == assignment[v];
  return count;
}

BadEdges bad_edges(const Graph& g, const Coloring& c) {
  check_length(g, c.assignment);
  BadEdges result;
  for (const auto& e : g.edges())
    if (c[e.u] == c[e.v]) result.edges.push_back(e);
  result.count = static_cast<int>(result.edges.size());
  return result;
}

int adjacent_class_count(const Graph& g, const Coloring& c) {
  check_length(g, c.assignment);
  std::vector<int> classes;
  for (const auto& [u, v] : g.edges())
    if (c[u] == c[v]) classes.push_back(c[u]);
  std::sort(classes.begin(), classes.end());
  return static_cast<int>(std::unique(classes.begin(), classes.end()) - classes.begin());
}

bool is_valid(const Graph& g, const Coloring& c, Rule rule, bool surjective) {
  check_length(g, c.assignment);
  if (c.k < 1) return false;
  std::vector<char> used(c.k + 1, 0);
  for (int colour : c.assignment) {
    if (colour < 1 || colour > c.k) return false;
    used[colour] = 1;
  }
  if (surjective && std::count(used.begin() + 1, used.end(), 1) != c.k) return false;
  if (rule == Rule::one_class && adjacent_class_count(g, c) > 1) return false;
  return true;
}

int ThetaProfile::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

ThetaProfile theta(const Graph& g, const Coloring& c) {
  check_length(g, c.assignment);
  if (c.k < 1) fail(ErrorKind::invalid_coloring, "colouring declares no colours");
  ThetaProfile profile{std::vector<int>(c.k, 0)};
  for (int colour : c.assignment) {
    if (colour < 1 || colour > c.k)
      fail(ErrorKind::invalid_coloring, "colour " + std::to_string(colour) + " outside 1.." +
                                            std::to_string(c.k));
    ++profile.counts[colour - 1];
  }
  return profile;
}

std::int64_t cross_bad_edges(const ThetaProfile& g_side, const ThetaProfile& h_side) {
  const int shared = std::min(g_side.colours(), h_side.colours());
  std::int64_t total = 0;
  for (int i = 0; i < shared; ++i)
    total += static_cast<std::int64_t>(g_side.counts[i]) * h_side.counts[i];
  return total;
}

}  // namespace deltak
