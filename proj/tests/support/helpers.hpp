#pragma once

#include <deltak/graph.hpp>

#include "oracles.hpp"

inline oracle::EdgeList edge_list(const deltak::Graph& g) {
  oracle::EdgeList out;
  for (const auto& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}
