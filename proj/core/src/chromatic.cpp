#include "deltak/chromatic.hpp"

#include <vector>

#include "deltak/error.hpp"

namespace deltak {

namespace {

class DsaturSearch {
 public:
  explicit DsaturSearch(const Graph& g)
      : g_(g), n_(g.order()), colour_(n_, -1), forbidden_(n_, std::vector<int>(n_ + 1, 0)),
        saturation_(n_, 0) {}

  int run() {
    best_ = greedy();
    floor_ = clique_bound();
    if (best_ > floor_) search(0, 0);
    return best_;
  }

 private:
  // Uncoloured vertex with the largest saturation, ties by degree then index.
  Vertex pick() const {
    Vertex best = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (colour_[v] >= 0) continue;
      if (best < 0 || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && g_.degree(v) > g_.degree(best)))
        best = v;
    }
    return best;
  }

  void assign(Vertex v, int c) {
    colour_[v] = c;
    for (Vertex u : g_.neighbours(v))
      if (forbidden_[u][c]++ == 0) ++saturation_[u];
  }

  void unassign(Vertex v) {
    int c = colour_[v];
    colour_[v] = -1;
    for (Vertex u : g_.neighbours(v))
      if (--forbidden_[u][c] == 0) --saturation_[u];
  }

  int greedy() {
    int used = 0;
    std::vector<Vertex> order;
    for (int step = 0; step < n_; ++step) {
      Vertex v = pick();
      int c = 0;
      while (forbidden_[v][c]) ++c;
      assign(v, c);
      order.push_back(v);
      used = std::max(used, c + 1);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) unassign(*it);
    return used;
  }

  // Size of a greedily grown clique, tried from every start vertex.
  int clique_bound() const {
    int best = n_ > 0 ? 1 : 0;
    for (Vertex start = 0; start < n_; ++start) {
      std::vector<Vertex> clique{start};
      for (Vertex v : g_.neighbours(start)) {
        bool all = true;
        for (Vertex u : clique)
          if (!g_.adjacent(u, v)) {
            all = false;
            break;
          }
        if (all) clique.push_back(v);
      }
      best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
  }

  // Returns early once the incumbent meets the clique bound.
  void search(int coloured, int used) {
    if (used >= best_ || best_ == floor_) return;
    if (coloured == n_) {
      best_ = used;
      return;
    }
    Vertex v = pick();
    for (int c = 0; c <= used && c < best_ - 1; ++c) {
      if (forbidden_[v][c]) continue;
      assign(v, c);
      search(coloured + 1, std::max(used, c + 1));
      unassign(v);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> colour_;
  std::vector<std::vector<int>> forbidden_;
  std::vector<int> saturation_;
  int best_ = 0;
  int floor_ = 0;
};

}  // namespace

int chromatic_number(const Graph& g, const ChromaticConfig& config) {
  if (g.order() > config.max_vertices)
    fail(ErrorKind::size_limit, "chromatic number: " + std::to_string(g.order()) +
                                    " vertices exceeds exact-search limit of " +
                                    std::to_string(config.max_vertices));
  if (g.order() == 0) return 0;
  return DsaturSearch(g).run();
}

}  // namespace deltak
