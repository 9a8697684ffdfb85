#pragma once

#include "deltak/graph.hpp"

namespace deltak {

struct ChromaticConfig {
  int max_vertices = 20;
};

/// Exact chromatic number by saturation-ordered branch and bound (DSATUR
/// branching, incumbent from a greedy DSATUR pass). Throws size_limit when
/// the graph has more than `max_vertices` vertices. The empty graph has
/// chromatic number 0.
int chromatic_number(const Graph& g, const ChromaticConfig& config = {});

}  // namespace deltak
