#pragma once

#include <cstdint>

#include "deltak/solver.hpp"

namespace deltak {

struct HeuristicConfig {
  std::uint64_t seed = 1;
  int restarts = 32;
};

/// Greedy construction plus single-vertex local search with seeded random
/// restarts, for graphs beyond exact reach. The result is marked
/// `exact = false` and carries no optimal_count; min_bad is only an upper
/// bound on b_k(G).
SolveResult heuristic_solve(const Graph& g, int k, Rule rule, bool surjective,
                            const HeuristicConfig& config = {});

}  // namespace deltak
