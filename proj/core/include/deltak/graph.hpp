#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace deltak {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Construction validates the edge list: endpoints must be in range, no
/// self-loops, no duplicates (in either orientation). Edges are normalised to
/// u < v and kept sorted lexicographically.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex a, Vertex b) const {
    return matrix_[static_cast<std::size_t>(a) * n_ + b] != 0;
  }

  bool connected() const;
  int component_count() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint8_t> matrix_;
};

/// Subgraph induced by `keep` (any order; duplicates rejected). Vertex i of
/// the result is keep[i] after sorting.
Graph induced_subgraph(const Graph& g, std::vector<Vertex> keep);

std::vector<int> degree_sequence(const Graph& g);

/// Names the roles of generated vertices, e.g. "hub", "rim[3]", "H[2][0]".
class VertexLabelMap {
 public:
  void add(std::string name, Vertex v);

  Vertex at(const std::string& name) const;
  bool contains(const std::string& name) const { return by_name_.contains(name); }
  std::size_t size() const { return by_name_.size(); }

  const std::map<std::string, Vertex>& entries() const { return by_name_; }

  /// True when every vertex 0..n-1 carries exactly one label.
  bool is_bijective(int n) const;

 private:
  std::map<std::string, Vertex> by_name_;
};

struct LabelledGraph {
  Graph graph;
  VertexLabelMap labels;
};

}  // namespace deltak
