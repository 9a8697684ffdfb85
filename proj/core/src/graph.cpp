#include "deltak/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "deltak/error.hpp"

namespace deltak {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) fail(ErrorKind::invalid_parameter, "vertex count must be non-negative");
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      fail(ErrorKind::invalid_input, "edge endpoint out of range: " + std::to_string(e.u) +
                                         " " + std::to_string(e.v));
    if (e.u == e.v) fail(ErrorKind::invalid_input, "self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    fail(ErrorKind::invalid_input, "duplicate edge " + std::to_string(dup->u) + " " +
                                       std::to_string(dup->v));
  edges_ = std::move(edges);

  adjacency_.assign(n, {});
  matrix_.assign(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    matrix_[static_cast<std::size_t>(u) * n + v] = 1;
    matrix_[static_cast<std::size_t>(v) * n + u] = 1;
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

int Graph::component_count() const {
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n_;
  for (const auto& [u, v] : edges_) {
    int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

bool Graph::connected() const { return n_ > 0 && component_count() == 1; }

Graph induced_subgraph(const Graph& g, std::vector<Vertex> keep) {
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
    fail(ErrorKind::invalid_parameter, "induced_subgraph: repeated vertex");
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= g.order())
      fail(ErrorKind::invalid_parameter, "induced_subgraph: vertex out of range");
    index[keep[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0) edges.push_back({index[u], index[v]});
  return Graph(static_cast<int>(keep.size()), std::move(edges));
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> degrees(g.order());
  for (Vertex v = 0; v < g.order(); ++v) degrees[v] = g.degree(v);
  return degrees;
}

void VertexLabelMap::add(std::string name, Vertex v) {
  if (!by_name_.emplace(std::move(name), v).second)
    fail(ErrorKind::invalid_parameter, "duplicate vertex label");
}

Vertex VertexLabelMap::at(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) fail(ErrorKind::invalid_parameter, "unknown vertex label: " + name);
  return it->second;
}

bool VertexLabelMap::is_bijective(int n) const {
  if (static_cast<int>(by_name_.size()) != n) return false;
  std::set<Vertex> seen;
  for (const auto& [name, v] : by_name_)
    if (v < 0 || v >= n || !seen.insert(v).second) return false;
  return true;
}

}  // namespace deltak
