#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "deltak/coloring.hpp"
#include "deltak/graph.hpp"

namespace deltak {

struct SolverConfig {
  /// Largest k^n the enumeration oracle will visit.
  std::uint64_t enumeration_cap = 100'000'000;
  /// Search-node budget for branch and bound (all phases, all workers).
  std::uint64_t node_limit = 4'000'000'000;
  /// Compute optimal_count in solve_bk.
  bool count = true;
  /// Worker threads for branch and bound; results do not depend on it.
  unsigned workers = 1;
  /// Vertex cap passed to the exact chromatic number.
  int chromatic_vertex_cap = 20;
};

struct SolveResult {
  int min_bad = 0;
  std::optional<std::uint64_t> optimal_count;
  /// Lexicographically smallest optimal assignment.
  Coloring witness;
  Rule rule = Rule::one_class;
  bool surjective = true;
  bool exact = true;
  double elapsed_ms = 0.0;
};

/// Ground truth: visits every one of the k^n assignments in lexicographic
/// order. Throws size_limit above the enumeration cap and infeasible when no
/// assignment is valid.
SolveResult enumerate_oracle(const Graph& g, int k, Rule rule, bool surjective,
                             const SolverConfig& config = {});

/// Branch and bound for b_k(G).
///
/// Three passes over a colour-symmetry-broken search tree (each colour class
/// is opened in order, so every partition is visited once):
///   1. minimum, degree-descending vertex order, pruning on lower bound >=
///      incumbent, parallel over root subtrees;
///   2. witness, vertex-index order, first optimal leaf is the
///      lexicographically smallest optimal assignment;
///   3. count (optional), degree order, pruning only on lower bound > optimum;
///      each partition with u classes contributes k!/(k-u)! labelled colourings.
/// The lower bound is the accumulated bad edges plus, for every uncoloured
/// vertex, the fewest conflicts any colour still open to it would cause.
SolveResult solve_bk(const Graph& g, int k, Rule rule, bool surjective,
                     const SolverConfig& config = {});

std::uint64_t count_optimal(const Graph& g, int k, Rule rule, bool surjective,
                            const SolverConfig& config = {});

/// Visits every optimal colouring up to colour relabelling, in canonical
/// form (colours numbered by first appearance in vertex order), in
/// lexicographic order. Return false from `visit` to stop early.
void for_each_optimal(const Graph& g, int k, Rule rule, bool surjective,
                      const std::function<bool(const Coloring&)>& visit,
                      const SolverConfig& config = {});

struct ThetaStar {
  int value = 0;
  int colour = 0;
  Coloring witness;
};

/// Smallest colour usage over all optimal k-colourings of h and all colours.
/// Colourings are surjective when k <= n, otherwise unused colours count as
/// zero. The witness is the lexicographically smallest attaining colouring and
/// `colour` its smallest attaining colour.
ThetaStar theta_star(const Graph& h, int k, Rule rule, const SolverConfig& config = {});

/// Minimum vertex cover of the bad-edge subgraph; among minimum covers the
/// lexicographically smallest sorted vertex list.
std::vector<Vertex> bad_edge_vertex_cover(const Graph& g, const Coloring& c);

struct KChromaticSubgraph {
  Graph subgraph;
  std::vector<Vertex> kept;
  std::vector<Vertex> removed;
  int chromatic = 0;
  int min_bad = 0;
  Coloring witness;
};

/// Colours g optimally with k colours under the one-class rule, removes a
/// minimum cover of the bad edges and returns the induced remainder. The
/// construction guarantees chromatic <= k. Requires 1 <= k < chi(g).
KChromaticSubgraph k_chromatic_subgraph(const Graph& g, int k, const SolverConfig& config = {});

}  // namespace deltak
