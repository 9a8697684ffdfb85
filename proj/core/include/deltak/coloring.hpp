#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "deltak/graph.hpp"

namespace deltak {

/// Colour assignment: entry i is the colour (1..k) of vertex i.
///
/// Range and surjectivity are not enforced on construction; `is_valid`
/// reports them. Ordering is lexicographic on the assignment, then k.
struct Coloring {
  std::vector<int> assignment;
  int k = 0;

  int operator[](Vertex v) const { return assignment[v]; }
  int order() const { return static_cast<int>(assignment.size()); }

  friend auto operator<=>(const Coloring&, const Coloring&) = default;
};

enum class Rule {
  one_class,     // at most one colour class may contain an edge
  unrestricted,  // pure bad-edge minimisation
};

std::string_view to_string(Rule rule);
Rule parse_rule(std::string_view text);

struct BadEdges {
  int count = 0;
  std::vector<Edge> edges;
};

/// Edges whose endpoints share a colour. Throws invalid_coloring when the
/// assignment length differs from the vertex count.
BadEdges bad_edges(const Graph& g, const Coloring& c);
int bad_edge_count(const Graph& g, std::span<const int> assignment);

/// Number of colour classes whose induced subgraph has at least one edge.
int adjacent_class_count(const Graph& g, const Coloring& c);

/// Entries within 1..k, every colour used when `surjective`, and at most
/// one adjacent class under Rule::one_class. Only a length mismatch throws.
bool is_valid(const Graph& g, const Coloring& c, Rule rule, bool surjective = true);

/// Usage count per colour; counts[c-1] is the number of vertices coloured c.
struct ThetaProfile {
  std::vector<int> counts;

  int operator[](int colour) const {
    return colour >= 1 && colour <= static_cast<int>(counts.size()) ? counts[colour - 1] : 0;
  }
  int colours() const { return static_cast<int>(counts.size()); }
  int total() const;

  friend bool operator==(const ThetaProfile&, const ThetaProfile&) = default;
};

ThetaProfile theta(const Graph& g, const Coloring& c);

/// Bad edges between the two sides of a join coloured with these profiles:
/// the sum over shared colours of the products of usage counts.
std::int64_t cross_bad_edges(const ThetaProfile& g_side, const ThetaProfile& h_side);

}  // namespace deltak
