#include "deltak/closed_forms.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "deltak/chromatic.hpp"
#include "deltak/error.hpp"
#include "deltak/generators.hpp"

namespace deltak {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) fail(ErrorKind::invalid_parameter, message);
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorKind::size_limit, "value overflows 64 bits");
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t out = 1;
  for (int i = 2; i <= n; ++i) out = mul(out, static_cast<std::uint64_t>(i));
  return out;
}

std::int64_t ipow(std::int64_t base, int exponent) {
  std::int64_t out = 1;
  for (int i = 0; i < exponent; ++i)
    if (__builtin_mul_overflow(out, base, &out))
      fail(ErrorKind::size_limit, "value overflows 64 bits");
  return out;
}

FamilyResult wheel_like(const char* family, int n, int k, std::uint64_t k3_count) {
  require(n >= 3, std::string(family) + " requires n >= 3");
  FamilyResult r{family, n, k, 0, std::nullopt, false, {}};
  if (k == 2) {
    r.min_bad = (n + 1) / 2;
    r.coloring_count = n % 2 == 0 ? 4 : 4 * static_cast<std::uint64_t>(n);
    r.source = n % 2 == 0 ? "even rim: n/2 spokes bad" : "odd rim: ceil(n/2) bad edges";
  } else if (k == 3 && n % 2 == 1) {
    r.min_bad = 1;
    r.coloring_count = k3_count;
    r.count_disputed = true;
    r.source = "odd rim, three colours: one bad edge";
  } else {
    require(false, std::string(family) + ": closed form covers k = 2, or k = 3 with odd n");
  }
  return r;
}

GraphSummary summarise(const Graph& g, const SolverConfig& config) {
  return {g.order(), g.size(), chromatic_number(g, {config.chromatic_vertex_cap})};
}

// t = k when k fits below chi(G), otherwise chi(G) - 1; at least one colour.
int left_budget(int k, int chi_left, bool relaxed) {
  if (relaxed) return k;
  return std::max(1, std::min(k, chi_left - 1));
}

int side_minimum(const Graph& g, int colours, Rule rule, const SolverConfig& config) {
  SolverConfig quick = config;
  quick.count = false;
  return solve_bk(g, colours, rule, colours <= g.order(), quick).min_bad;
}

std::optional<int> exact_minimum(const Graph& g, int k, Rule rule, const SolverConfig& config) {
  const bool surjective = k <= g.order();
  try {
    return enumerate_oracle(g, k, rule, surjective, config).min_bad;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::size_limit) throw;
  }
  try {
    SolverConfig quick = config;
    quick.count = false;
    return solve_bk(g, k, rule, surjective, quick).min_bad;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::size_limit) throw;
  }
  return std::nullopt;
}

void finish(BoundReport& r) {
  if (r.exact) r.slack = r.bound - *r.exact;
}

std::set<std::vector<int>> class_size_vectors(const Graph& g, int colours, Rule rule,
                                              const SolverConfig& config) {
  std::set<std::vector<int>> out;
  for_each_optimal(
      g, colours, rule, colours <= g.order(),
      [&](const Coloring& c) {
        auto counts = theta(g, c).counts;
        std::sort(counts.begin(), counts.end());
        out.insert(std::move(counts));
        return true;
      },
      config);
  return out;
}

}  // namespace

FamilyResult bk_path(int n) {
  require(n >= 2, "path requires n >= 2");
  return {"path", n, 1, n - 1, std::nullopt, false, "single colour: every edge bad"};
}

FamilyResult bk_cycle_odd(int n) {
  require(n >= 3 && n % 2 == 1, "odd cycle closed form requires odd n >= 3");
  return {"cycle", n, 2, 1, 2 * static_cast<std::uint64_t>(n), false,
          "odd cycle, two colours: one bad edge"};
}

FamilyResult bk_wheel(int n, int k) {
  return wheel_like("wheel", n, k, 3 * static_cast<std::uint64_t>(n));
}

FamilyResult bk_helm(int n, int k) {
  require(n >= 3 && n < 60, "helm requires 3 <= n < 60");
  return wheel_like("helm", n, k, mul(3 * static_cast<std::uint64_t>(n), std::uint64_t{1} << n));
}

FamilyResult bk_complete(int n, int k) {
  require(n >= 2 && k >= 1 && k <= n - 1, "complete closed form requires n >= 2, 1 <= k <= n-1");
  const int x = n - k;
  const auto count =
      mul(mul(static_cast<std::uint64_t>(n - x), binomial(n, x + 1)), factorial(n - x - 1));
  return {"complete", n, k, x * (x + 1) / 2, count, false,
          "one class of x+1 = n-k+1 vertices, the rest singletons"};
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t out = 1;
  for (int i = 1; i <= r; ++i) out = mul(out, static_cast<std::uint64_t>(n - r + i)) / i;
  return out;
}

std::uint64_t falling_factorial(int lambda, int k) {
  std::uint64_t out = 1;
  for (int i = 0; i < k; ++i) out = mul(out, static_cast<std::uint64_t>(std::max(0, lambda - i)));
  return out;
}

std::int64_t defect_poly_cycle(int n, int j, int lambda) {
  require(n >= 3, "cycle defect polynomial requires n >= 3");
  require(j >= 0 && j <= n, "bad-edge count j must satisfy 0 <= j <= n");
  require(lambda >= 1, "lambda must be at least 1");
  const int free_edges = n - j;
  const std::int64_t sign = free_edges % 2 == 0 ? 1 : -1;
  const std::int64_t inner = ipow(lambda - 1, free_edges) + sign * (lambda - 1);
  std::int64_t out = 0;
  if (__builtin_mul_overflow(static_cast<std::int64_t>(binomial(n, j)), inner, &out))
    fail(ErrorKind::size_limit, "value overflows 64 bits");
  return out;
}

std::uint64_t defect_poly_complete(int n, int k, int lambda) {
  require(n >= 2 && k >= 2 && k <= n - 1, "complete defect polynomial requires 2 <= k <= n-1");
  require(lambda >= k, "lambda must be at least k");
  return mul(binomial(n, n - k + 1), falling_factorial(lambda, k));
}

std::uint64_t defect_poly_complete_product(int n, int k, int lambda) {
  require(n >= 2 && k >= 2 && k <= n - 1, "complete defect polynomial requires 2 <= k <= n-1");
  require(lambda >= k, "lambda must be at least k");
  return mul(binomial(lambda, k), *bk_complete(n, k).coloring_count);
}

int corona_chromatic_number(int chi_g, int chi_h) {
  if (chi_g == chi_h) return chi_g + 1;
  if (chi_g > chi_h) return chi_g;
  return chi_h + 1;
}

std::int64_t min_pairing(std::vector<int> a, std::vector<int> b) {
  const std::size_t len = std::max(a.size(), b.size());
  a.resize(len, 0);
  b.resize(len, 0);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end(), std::greater<>());
  std::int64_t total = 0;
  for (std::size_t i = 0; i < len; ++i) total += static_cast<std::int64_t>(a[i]) * b[i];
  return total;
}

BoundReport union_bound(const Graph& g, const Graph& h, int k, const BoundOptions& options) {
  require(k >= 1, "k must be at least 1");
  BoundReport r;
  r.operation = "union";
  r.k = k;
  r.rule = options.rule;
  r.relaxed = options.relaxed;
  r.left = summarise(g, options.solver);
  r.right = summarise(h, options.solver);
  const Graph* left = &g;
  const Graph* right = &h;
  if (r.left.chromatic > r.right.chromatic) {
    std::swap(r.left, r.right);
    std::swap(left, right);
    r.swapped = true;
  }
  r.t = left_budget(k, r.left.chromatic, options.relaxed);
  r.left_bad = side_minimum(*left, r.t, options.rule, options.solver);
  r.right_bad = side_minimum(*right, k, options.rule, options.solver);
  r.bound = r.left_bad + r.right_bad;
  r.exact = exact_minimum(disjoint_union(*left, *right).graph, k, options.rule, options.solver);
  finish(r);
  return r;
}

BoundReport join_bound(const Graph& g, const Graph& h, int k, const BoundOptions& options) {
  require(k >= 1, "k must be at least 1");
  BoundReport r;
  r.operation = "join";
  r.k = k;
  r.rule = options.rule;
  r.relaxed = options.relaxed;
  r.left = summarise(g, options.solver);
  r.right = summarise(h, options.solver);
  const Graph* left = &g;
  const Graph* right = &h;
  if (r.left.chromatic > r.right.chromatic) {
    std::swap(r.left, r.right);
    std::swap(left, right);
    r.swapped = true;
  }
  r.t = left_budget(k, r.left.chromatic, options.relaxed);
  r.left_bad = side_minimum(*left, r.t, options.rule, options.solver);
  r.right_bad = side_minimum(*right, k, options.rule, options.solver);

  const auto left_sizes = class_size_vectors(*left, r.t, options.rule, options.solver);
  const auto right_sizes = class_size_vectors(*right, k, options.rule, options.solver);
  std::optional<std::int64_t> best;
  for (const auto& a : left_sizes)
    for (const auto& b : right_sizes) {
      std::vector<int> padded = a;
      padded.resize(std::max<std::size_t>(a.size(), k), 0);
      const auto cross = min_pairing(padded, b);
      if (!best || cross < *best) best = cross;
    }
  r.combination = best.value_or(0);
  r.bound = r.left_bad + r.right_bad + r.combination;
  r.exact = exact_minimum(join(*left, *right).graph, k, options.rule, options.solver);
  finish(r);
  return r;
}

BoundReport corona_formula(const Graph& g, const Graph& h, int k, const BoundOptions& options) {
  BoundReport r;
  r.operation = "corona";
  r.k = k;
  r.rule = options.rule;
  r.relaxed = options.relaxed;
  r.left = summarise(g, options.solver);
  r.right = summarise(h, options.solver);
  const int chi = corona_chromatic_number(r.left.chromatic, r.right.chromatic);
  require(k >= 1 && k < chi, "corona requires 1 <= k < chi(G o H) = " + std::to_string(chi));

  r.t = left_budget(k, r.left.chromatic, options.relaxed);
  r.left_bad = side_minimum(g, r.t, options.rule, options.solver);
  r.right_bad = side_minimum(h, k, options.rule, options.solver);
  r.theta_star = theta_star(h, k, options.rule, options.solver).value;
  r.combination = static_cast<std::int64_t>(g.order()) * *r.theta_star;
  r.bound = r.left_bad + r.right_bad + r.combination;
  r.exact = exact_minimum(corona(g, h).graph, k, options.rule, options.solver);
  finish(r);
  return r;
}

}  // namespace deltak
