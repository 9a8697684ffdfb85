#include "deltak/heuristic.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

#include "deltak/error.hpp"

namespace deltak {

namespace {

// Colour 1 is the only class allowed to hold edges: each vertex takes the
// first of 2..k free of conflicts, else colour 1. Valid under both rules.
std::vector<int> greedy(const Graph& g, int k, std::span<const Vertex> order) {
  std::vector<int> colour(g.order(), 0);
  for (Vertex v : order) {
    int chosen = 1;
    for (int c = 2; c <= k; ++c) {
      bool clash = false;
      for (Vertex u : g.neighbours(v))
        if (colour[u] == c) {
          clash = true;
          break;
        }
      if (!clash) {
        chosen = c;
        break;
      }
    }
    colour[v] = chosen;
  }
  return colour;
}

// Moving a vertex out of a class of size >= 2 into an empty class never adds
// bad edges or adjacent classes.
void fill_empty_classes(const Graph& g, int k, std::vector<int>& colour) {
  std::vector<int> size(k + 1, 0);
  for (int c : colour) ++size[c];
  for (int empty = 1; empty <= k; ++empty) {
    if (size[empty] > 0) continue;
    Vertex best = -1;
    int best_gain = -1;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (size[colour[v]] < 2) continue;
      int gain = 0;
      for (Vertex u : g.neighbours(v)) gain += colour[u] == colour[v];
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    if (best < 0) return;
    --size[colour[best]];
    colour[best] = empty;
    ++size[empty];
  }
}

void local_search(const Graph& g, int k, Rule rule, bool surjective, std::vector<int>& colour) {
  std::vector<int> size(k + 1, 0);
  for (int c : colour) ++size[c];
  Coloring probe{colour, k};
  bool improved = true;
  while (improved) {
    improved = false;
    for (Vertex v = 0; v < g.order(); ++v) {
      const int from = colour[v];
      if (surjective && size[from] == 1) continue;
      std::vector<int> clash(k + 1, 0);
      for (Vertex u : g.neighbours(v)) ++clash[colour[u]];
      for (int to = 1; to <= k; ++to) {
        if (to == from || clash[to] >= clash[from]) continue;
        probe.assignment = colour;
        probe.assignment[v] = to;
        if (rule == Rule::one_class && adjacent_class_count(g, probe) > 1) continue;
        colour[v] = to;
        --size[from];
        ++size[to];
        improved = true;
        break;
      }
    }
  }
}

}  // namespace

SolveResult heuristic_solve(const Graph& g, int k, Rule rule, bool surjective,
                            const HeuristicConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  if (k < 1) fail(ErrorKind::invalid_parameter, "k must be at least 1");
  if (surjective && k > g.order())
    fail(ErrorKind::infeasible, "cannot use exactly " + std::to_string(k) + " colours on " +
                                    std::to_string(g.order()) + " vertices");

  std::mt19937_64 rng(config.seed);
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  SolveResult best;
  best.rule = rule;
  best.surjective = surjective;
  best.exact = false;
  best.min_bad = -1;
  for (int round = 0; round < std::max(1, config.restarts); ++round) {
    if (round > 0) std::shuffle(order.begin(), order.end(), rng);
    auto colour = greedy(g, k, order);
    if (surjective) fill_empty_classes(g, k, colour);
    local_search(g, k, rule, surjective, colour);
    Coloring c{std::move(colour), k};
    const int bad = bad_edge_count(g, c.assignment);
    if (best.min_bad < 0 || bad < best.min_bad || (bad == best.min_bad && c < best.witness)) {
      best.min_bad = bad;
      best.witness = std::move(c);
    }
  }
  best.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return best;
}

}  // namespace deltak
