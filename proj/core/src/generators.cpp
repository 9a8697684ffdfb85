#include "deltak/generators.hpp"

#include <random>
#include <string>

#include "deltak/error.hpp"

namespace deltak {

namespace {

void require(bool ok, const char* message) {
  if (!ok) fail(ErrorKind::invalid_parameter, message);
}

std::string indexed(const char* role, int i) { return std::string(role) + "[" + std::to_string(i) + "]"; }

VertexLabelMap two_sided_labels(int ng, int nh) {
  VertexLabelMap labels;
  for (int i = 0; i < ng; ++i) labels.add(indexed("G", i), i);
  for (int j = 0; j < nh; ++j) labels.add(indexed("H", j), ng + j);
  return labels;
}

}  // namespace

Graph path(int n) {
  require(n >= 2, "path requires n >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph cycle(int n) {
  require(n >= 3, "cycle requires n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

LabelledGraph wheel(int n) {
  require(n >= 3, "wheel requires n >= 3");
  std::vector<Edge> edges;
  VertexLabelMap labels;
  labels.add("hub", 0);
  for (int i = 1; i <= n; ++i) {
    labels.add(indexed("rim", i), i);
    edges.push_back({0, i});
    edges.push_back({i, i % n + 1});
  }
  return {Graph(n + 1, std::move(edges)), std::move(labels)};
}

LabelledGraph helm(int n) {
  require(n >= 3, "helm requires n >= 3");
  auto [w, labels] = wheel(n);
  std::vector<Edge> edges(w.edges().begin(), w.edges().end());
  for (int i = 1; i <= n; ++i) {
    labels.add(indexed("pendant", i), n + i);
    edges.push_back({i, n + i});
  }
  return {Graph(2 * n + 1, std::move(edges)), std::move(labels)};
}

Graph complete(int n) {
  require(n >= 1, "complete requires n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

LabelledGraph disjoint_union(const Graph& g, const Graph& h) {
  const int ng = g.order();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const auto& [u, v] : h.edges()) edges.push_back({ng + u, ng + v});
  return {Graph(ng + h.order(), std::move(edges)), two_sided_labels(ng, h.order())};
}

LabelledGraph join(const Graph& g, const Graph& h) {
  const int ng = g.order();
  auto result = disjoint_union(g, h);
  std::vector<Edge> edges(result.graph.edges().begin(), result.graph.edges().end());
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < h.order(); ++v) edges.push_back({u, ng + v});
  result.graph = Graph(ng + h.order(), std::move(edges));
  return result;
}

LabelledGraph corona(const Graph& g, const Graph& h) {
  const int ng = g.order();
  const int nh = h.order();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  VertexLabelMap labels;
  for (int i = 0; i < ng; ++i) labels.add(indexed("G", i), i);
  for (int i = 0; i < ng; ++i) {
    const int base = ng + i * nh;
    for (int j = 0; j < nh; ++j) {
      labels.add(indexed("H", i) + "[" + std::to_string(j) + "]", base + j);
      edges.push_back({i, base + j});
    }
    for (const auto& [u, v] : h.edges()) edges.push_back({base + u, base + v});
  }
  return {Graph(ng * (1 + nh), std::move(edges)), std::move(labels)};
}

Graph random_connected(int n, double density, std::uint64_t seed) {
  require(n >= 1, "random graph requires n >= 1");
  require(density >= 0.0 && density <= 1.0, "density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> present(static_cast<std::size_t>(n) * n, 0);
  std::vector<Edge> edges;
  auto add = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    auto& slot = present[static_cast<std::size_t>(u) * n + v];
    if (!slot) {
      slot = 1;
      edges.push_back({u, v});
    }
  };
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    add(parent(rng), v);
  }
  std::bernoulli_distribution coin(density);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) add(u, v);
  return Graph(n, std::move(edges));
}

}  // namespace deltak
