#include "deltak/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <memory>
#include <limits>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "deltak/chromatic.hpp"
#include "deltak/error.hpp"

namespace deltak {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorKind::size_limit, "count overflows 64 bits");
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) fail(ErrorKind::size_limit, "count overflows 64 bits");
  return out;
}

// k (k-1) ... (k-u+1)
std::uint64_t falling(int k, int u) {
  std::uint64_t out = 1;
  for (int i = 0; i < u; ++i) out = checked_mul(out, static_cast<std::uint64_t>(k - i));
  return out;
}

void check_instance(const Graph& g, int k, bool surjective) {
  if (k < 1) fail(ErrorKind::invalid_parameter, "k must be at least 1");
  if (surjective && k > g.order())
    fail(ErrorKind::infeasible, "cannot use exactly " + std::to_string(k) + " colours on " +
                                    std::to_string(g.order()) + " vertices");
}

std::vector<Vertex> degree_order(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

std::vector<Vertex> index_order(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  return order;
}

class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}

  void release(std::uint64_t nodes) noexcept {
    used_.fetch_add(nodes, std::memory_order_relaxed);
  }

  void check() const {
    if (used_.load(std::memory_order_relaxed) > limit_)
      fail(ErrorKind::size_limit,
           "branch and bound exceeded node limit of " + std::to_string(limit_));
  }

  void charge(std::uint64_t nodes) {
    if (used_.fetch_add(nodes, std::memory_order_relaxed) + nodes > limit_)
      fail(ErrorKind::size_limit,
           "branch and bound exceeded node limit of " + std::to_string(limit_));
  }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

// Partial colouring along a fixed vertex order. Colours are 0-based and
// opened in order (colour c may only be used once colours 0..c-1 are).
class Search {
 public:
  Search(const Graph& g, int k, Rule rule, bool surjective, std::span<const Vertex> order,
         NodeBudget& budget)
      : g_(g), n_(g.order()), k_(k), one_class_(rule == Rule::one_class),
        surjective_(surjective), order_(order), budget_(budget), colour_(n_, -1),
        conflict_(static_cast<std::size_t>(n_) * k_, 0) {
    frames_.reserve(n_);
  }

  ~Search() { budget_.release(pending_); }

  /// Charges outstanding nodes; throws when the budget is exhausted.
  void settle() { flush(); }

  int depth() const { return depth_; }
  int bad() const { return bad_; }
  int used() const { return used_; }
  int colour(Vertex v) const { return colour_[v]; }

  bool feasible(Vertex v, int c) const {
    if (one_class_ && conflicts(v, c) > 0 && defective_ >= 0 && defective_ != c) return false;
    if (surjective_) {
      const int opened = c == used_ ? used_ + 1 : used_;
      if (n_ - depth_ - 1 < k_ - opened) return false;
    }
    return true;
  }

  void place(Vertex v, int c) {
    const int delta = conflicts(v, c);
    frames_.push_back({used_, defective_});
    colour_[v] = c;
    bad_ += delta;
    if (delta > 0 && defective_ < 0) defective_ = c;
    if (c == used_) ++used_;
    for (Vertex u : g_.neighbours(v)) ++conflict_[index(u, c)];
    ++depth_;
  }

  void unplace(Vertex v) {
    const int c = colour_[v];
    --depth_;
    for (Vertex u : g_.neighbours(v)) --conflict_[index(u, c)];
    bad_ -= conflicts(v, c);
    colour_[v] = -1;
    used_ = frames_.back().used;
    defective_ = frames_.back().defective;
    frames_.pop_back();
  }

  void replay(std::span<const int> prefix) {
    for (std::size_t i = 0; i < prefix.size(); ++i) place(order_[i], prefix[i]);
  }

  // Accumulated bad edges plus the cheapest completion of each uncoloured
  // vertex in isolation. While some colour is unopened every vertex can
  // still avoid conflicts, so only the accumulated count is used then.
  int lower_bound() const {
    if (used_ < k_) return bad_;
    int future = 0;
    for (int i = depth_; i < n_; ++i) {
      const Vertex u = order_[i];
      const int* row = &conflict_[index(u, 0)];
      int cheapest = *std::min_element(row, row + k_);
      if (one_class_ && defective_ >= 0 && cheapest > 0) cheapest = row[defective_];
      future += cheapest;
    }
    return bad_ + future;
  }

  template <class Policy>
  bool dfs(Policy& policy) {
    if (++pending_ == 4096) flush();
    if (depth_ == n_) return policy.leaf(*this);
    const Vertex v = order_[depth_];
    const int options = std::min(used_ + 1, k_);
    for (int c = 0; c < options; ++c) {
      if (!feasible(v, c)) continue;
      place(v, c);
      const bool stop = !policy.prune(lower_bound()) && dfs(policy);
      unplace(v);
      if (stop) return true;
    }
    return false;
  }

  void prefixes(int target_depth, std::vector<int>& current,
                std::vector<std::vector<int>>& out) {
    if (depth_ == target_depth) {
      out.push_back(current);
      return;
    }
    const Vertex v = order_[depth_];
    const int options = std::min(used_ + 1, k_);
    for (int c = 0; c < options; ++c) {
      if (!feasible(v, c)) continue;
      place(v, c);
      current.push_back(c);
      prefixes(target_depth, current, out);
      current.pop_back();
      unplace(v);
    }
  }

  Coloring coloring() const {
    Coloring c{std::vector<int>(n_), k_};
    for (Vertex v = 0; v < n_; ++v) c.assignment[v] = colour_[v] + 1;
    return c;
  }

 private:
  struct Frame {
    int used;
    int defective;
  };

  std::size_t index(Vertex v, int c) const { return static_cast<std::size_t>(v) * k_ + c; }
  int conflicts(Vertex v, int c) const { return conflict_[index(v, c)]; }

  void flush() {
    if (pending_ == 0) return;
    const auto nodes = pending_;
    pending_ = 0;
    budget_.charge(nodes);
  }

  const Graph& g_;
  int n_;
  int k_;
  bool one_class_;
  bool surjective_;
  std::span<const Vertex> order_;
  NodeBudget& budget_;

  std::vector<int> colour_;
  std::vector<int> conflict_;
  std::vector<Frame> frames_;
  int depth_ = 0;
  int bad_ = 0;
  int used_ = 0;
  int defective_ = -1;
  std::uint64_t pending_ = 0;
};

struct Instance {
  const Graph& g;
  int k;
  Rule rule;
  bool surjective;
};

// Runs one policy per root subtree, spread over `workers` threads.
// `make_policy(task)` builds the policy for task index `task`.
template <class MakePolicy>
void run_tasks(const Instance& in, std::span<const Vertex> order, unsigned workers,
               NodeBudget& budget, MakePolicy make_policy, std::size_t& task_count) {
  std::vector<std::vector<int>> tasks;
  if (workers <= 1 || in.g.order() == 0) {
    tasks.push_back({});
  } else {
    const std::size_t wanted = 8 * static_cast<std::size_t>(workers);
    for (int depth = 1; depth <= in.g.order(); ++depth) {
      tasks.clear();
      Search s(in.g, in.k, in.rule, in.surjective, order, budget);
      std::vector<int> current;
      s.prefixes(depth, current, tasks);
      if (tasks.size() >= wanted) break;
    }
  }
  task_count = tasks.size();

  std::atomic<std::size_t> next{0};
  std::atomic<bool> aborted{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    try {
      for (;;) {
        if (aborted.load(std::memory_order_relaxed)) return;
        const std::size_t t = next.fetch_add(1);
        if (t >= tasks.size()) return;
        Search s(in.g, in.k, in.rule, in.surjective, order, budget);
        s.replay(tasks[t]);
        auto policy = make_policy(t);
        if (!policy.prune(s.lower_bound())) s.dfs(policy);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      aborted = true;
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(workers, tasks.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  budget.check();
}

struct Minimise {
  std::atomic<int>& incumbent;

  bool prune(int bound) const { return bound >= incumbent.load(std::memory_order_relaxed); }
  bool leaf(const Search& s) {
    int current = incumbent.load();
    while (s.bad() < current && !incumbent.compare_exchange_weak(current, s.bad())) {
    }
    return false;
  }
};

struct AtMost {
  int target;
  bool prune(int bound) const { return bound > target; }
};

struct FirstLeaf : AtMost {
  std::optional<Coloring> found;
  bool leaf(const Search& s) {
    found = s.coloring();
    return true;
  }
};

struct Count : AtMost {
  int k;
  std::uint64_t* total;
  bool leaf(const Search& s) {
    *total = checked_add(*total, falling(k, s.used()));
    return false;
  }
};

struct Visit : AtMost {
  const std::function<bool(const Coloring&)>* visit;
  bool leaf(const Search& s) { return !(*visit)(s.coloring()); }
};

int minimum(const Instance& in, const SolverConfig& config, NodeBudget& budget) {
  const auto order = degree_order(in.g);
  std::atomic<int> incumbent{in.g.size() + 1};
  std::size_t tasks = 0;
  run_tasks(in, order, config.workers, budget,
            [&](std::size_t) { return Minimise{incumbent}; }, tasks);
  if (incumbent.load() > in.g.size())
    fail(ErrorKind::infeasible, "no valid colouring exists");
  return incumbent.load();
}

Coloring smallest_witness(const Instance& in, int target, NodeBudget& budget) {
  const auto order = index_order(in.g);
  Search s(in.g, in.k, in.rule, in.surjective, order, budget);
  FirstLeaf policy{{target}, std::nullopt};
  if (!policy.prune(s.lower_bound())) s.dfs(policy);
  s.settle();
  if (!policy.found) fail(ErrorKind::infeasible, "no valid colouring exists");
  return *policy.found;
}

std::uint64_t count_at(const Instance& in, int target, const SolverConfig& config,
                       NodeBudget& budget) {
  const auto order = degree_order(in.g);
  // One slot per task keeps the sum independent of scheduling.
  std::mutex grow;
  std::vector<std::unique_ptr<std::uint64_t>> slots;
  std::size_t tasks = 0;
  run_tasks(
      in, order, config.workers, budget,
      [&](std::size_t) {
        std::lock_guard lock(grow);
        slots.push_back(std::make_unique<std::uint64_t>(0));
        return Count{{target}, in.k, slots.back().get()};
      },
      tasks);
  std::uint64_t total = 0;
  for (const auto& slot : slots) total = checked_add(total, *slot);
  return total;
}

}  // namespace

SolveResult enumerate_oracle(const Graph& g, int k, Rule rule, bool surjective,
                             const SolverConfig& config) {
  const auto start = Clock::now();
  if (k < 1) fail(ErrorKind::invalid_parameter, "k must be at least 1");
  std::uint64_t leaves = 1;
  for (int i = 0; i < g.order(); ++i) {
    if (__builtin_mul_overflow(leaves, static_cast<std::uint64_t>(k), &leaves) ||
        leaves > config.enumeration_cap)
      fail(ErrorKind::size_limit, "enumeration of " + std::to_string(k) + "^" +
                                      std::to_string(g.order()) + " assignments exceeds cap of " +
                                      std::to_string(config.enumeration_cap));
  }

  const int n = g.order();
  Coloring c{std::vector<int>(n, 1), k};
  SolveResult result;
  result.rule = rule;
  result.surjective = surjective;
  std::uint64_t count = 0;
  int best = std::numeric_limits<int>::max();
  for (;;) {
    if (is_valid(g, c, rule, surjective)) {
      const int bad = bad_edge_count(g, c.assignment);
      if (bad < best) {
        best = bad;
        count = 1;
        result.witness = c;
      } else if (bad == best) {
        ++count;
      }
    }
    int i = n - 1;
    while (i >= 0 && c.assignment[i] == k) c.assignment[i--] = 1;
    if (i < 0) break;
    ++c.assignment[i];
  }
  if (count == 0) fail(ErrorKind::infeasible, "no valid colouring exists");
  result.min_bad = best;
  result.optimal_count = count;
  result.elapsed_ms = elapsed_since(start);
  return result;
}

SolveResult solve_bk(const Graph& g, int k, Rule rule, bool surjective,
                     const SolverConfig& config) {
  const auto start = Clock::now();
  check_instance(g, k, surjective);
  const Instance in{g, k, rule, surjective};
  NodeBudget budget(config.node_limit);

  SolveResult result;
  result.rule = rule;
  result.surjective = surjective;
  result.min_bad = minimum(in, config, budget);
  result.witness = smallest_witness(in, result.min_bad, budget);
  if (config.count) result.optimal_count = count_at(in, result.min_bad, config, budget);
  result.elapsed_ms = elapsed_since(start);
  return result;
}

std::uint64_t count_optimal(const Graph& g, int k, Rule rule, bool surjective,
                            const SolverConfig& config) {
  check_instance(g, k, surjective);
  const Instance in{g, k, rule, surjective};
  NodeBudget budget(config.node_limit);
  return count_at(in, minimum(in, config, budget), config, budget);
}

void for_each_optimal(const Graph& g, int k, Rule rule, bool surjective,
                      const std::function<bool(const Coloring&)>& visit,
                      const SolverConfig& config) {
  check_instance(g, k, surjective);
  const Instance in{g, k, rule, surjective};
  NodeBudget budget(config.node_limit);
  const int target = minimum(in, config, budget);
  const auto order = index_order(g);
  Search s(g, k, rule, surjective, order, budget);
  Visit policy{{target}, &visit};
  if (!policy.prune(s.lower_bound())) s.dfs(policy);
  s.settle();
}

ThetaStar theta_star(const Graph& h, int k, Rule rule, const SolverConfig& config) {
  const bool surjective = k <= h.order();
  std::optional<ThetaStar> best;
  for_each_optimal(
      h, k, rule, surjective,
      [&](const Coloring& c) {
        const auto profile = theta(h, c);
        const auto it = std::min_element(profile.counts.begin(), profile.counts.end());
        if (!best || *it < best->value)
          best = ThetaStar{*it, static_cast<int>(it - profile.counts.begin()) + 1, c};
        return best->value > 0;
      },
      config);
  if (!best) fail(ErrorKind::infeasible, "no valid colouring exists");
  return *best;
}

std::vector<Vertex> bad_edge_vertex_cover(const Graph& g, const Coloring& c) {
  const auto bad = bad_edges(g, c);
  if (bad.count == 0) return {};

  std::vector<Vertex> candidates;
  for (const auto& [u, v] : bad.edges) {
    candidates.push_back(u);
    candidates.push_back(v);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // A greedy maximal matching of the bad edges bounds the cover size below.
  std::vector<char> matched(g.order(), 0);
  int matching = 0;
  for (const auto& [u, v] : bad.edges)
    if (!matched[u] && !matched[v]) {
      matched[u] = matched[v] = 1;
      ++matching;
    }

  const int cand = static_cast<int>(candidates.size());
  std::vector<char> chosen(g.order(), 0);
  std::uint64_t visited = 0;
  constexpr std::uint64_t kCombinationCap = 50'000'000;
  auto covers = [&] {
    return std::all_of(bad.edges.begin(), bad.edges.end(),
                       [&](const Edge& e) { return chosen[e.u] || chosen[e.v]; });
  };

  for (int size = std::max(1, matching); size <= cand; ++size) {
    // Combinations of `size` candidate positions in lexicographic order.
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      if (++visited > kCombinationCap)
        fail(ErrorKind::size_limit, "bad-edge vertex cover search exceeded its cap");
      for (int p : pick) chosen[candidates[p]] = 1;
      const bool ok = covers();
      for (int p : pick) chosen[candidates[p]] = 0;
      if (ok) {
        std::vector<Vertex> cover;
        for (int p : pick) cover.push_back(candidates[p]);
        return cover;
      }
      int i = size - 1;
      while (i >= 0 && pick[i] == cand - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return candidates;
}

KChromaticSubgraph k_chromatic_subgraph(const Graph& g, int k, const SolverConfig& config) {
  const int chi = chromatic_number(g, {config.chromatic_vertex_cap});
  if (k < 1 || k >= chi)
    fail(ErrorKind::invalid_parameter, "k must satisfy 1 <= k < chi(G) = " + std::to_string(chi));

  SolverConfig quick = config;
  quick.count = false;
  const auto solved = solve_bk(g, k, Rule::one_class, true, quick);

  KChromaticSubgraph out;
  out.min_bad = solved.min_bad;
  out.witness = solved.witness;
  out.removed = bad_edge_vertex_cover(g, solved.witness);
  std::vector<char> drop(g.order(), 0);
  for (Vertex v : out.removed) drop[v] = 1;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!drop[v]) out.kept.push_back(v);
  out.subgraph = induced_subgraph(g, out.kept);
  out.chromatic = chromatic_number(out.subgraph, {config.chromatic_vertex_cap});
  return out;
}

}  // namespace deltak
