#pragma once

#include <cstdint>

#include "deltak/graph.hpp"

namespace deltak {

// Named families. Indexing is canonical so colouring counts are reproducible:
// wheels and helms put the hub at 0, rim vertex i (1..n) at i and the pendant
// of rim vertex i at n+i. The label map carries "hub", "rim[i]", "pendant[i]".

Graph path(int n);
Graph cycle(int n);
LabelledGraph wheel(int n);
LabelledGraph helm(int n);
Graph complete(int n);

// Binary operations. Labels are "G[i]" for the left operand and "H[i]" for
// the right; the corona labels copy vertices as "H[i][j]" (copy attached to
// G[i], vertex j of that copy).

/// Left vertices first, then right vertices shifted by g.order().
LabelledGraph disjoint_union(const Graph& g, const Graph& h);
/// Disjoint union plus every edge between the two sides.
LabelledGraph join(const Graph& g, const Graph& h);
/// G followed by n_g copies of H; vertex i of G is joined to all of copy i.
LabelledGraph corona(const Graph& g, const Graph& h);

/// Seeded random connected graph: a random spanning tree plus each remaining
/// pair independently with probability `density`.
Graph random_connected(int n, double density, std::uint64_t seed);

}  // namespace deltak
