// Acceptance gate: one PASS/FAIL line per criterion, details indented below.
//
//   acceptance                   exit 0 iff every criterion passes
//   acceptance --expect-fail 2,4 exit 0 iff exactly the listed criteria fail
//
// The second form lets ctest track documented deviations without hiding them:
// the FAIL lines are still printed, and a criterion that starts passing (or a
// new one that fails) turns the run red.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <deltak/deltak.hpp>

#include "../support/helpers.hpp"

using namespace deltak;

namespace {

struct Check {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back("FAILED " + what);
    }
  }
  void note(const std::string& what) { details.push_back(what); }
};

template <class... T>
std::string cat(const T&... parts) {
  std::ostringstream s;
  (s << ... << parts);
  return s.str();
}

std::string vec(const std::vector<int>& v) {
  std::string out;
  for (int x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

struct Instance {
  Graph g;
  std::uint64_t seed;
};

// 50 seeded random connected graphs, 2 <= n <= 9
std::vector<Instance> random_graphs(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  for (int i = 0; i < count; ++i) {
    int n = std::uniform_int_distribution<int>(2, 9)(rng);
    double density = std::uniform_real_distribution<double>(0.15, 0.75)(rng);
    std::uint64_t s = rng();
    out.push_back({random_connected(n, density, s), s});
  }
  return out;
}

constexpr std::uint64_t random_seed = 20240601;

void c1(Check& c) {
  for (int n = 3; n <= 11; n += 2) {
    auto r = enumerate_oracle(cycle(n), 2, Rule::one_class, true);
    c.note(cat("C", n, ": min_bad=", r.min_bad, " count=", *r.optimal_count, " (expected 1, ", 2 * n, ")"));
    c.require(r.min_bad == 1 && *r.optimal_count == static_cast<std::uint64_t>(2 * n), cat("C", n));
  }
}

void family_check(Check& c, const char* name, const Graph& g, int n, int k, int want_bad,
                  std::uint64_t want_count) {
  auto r = enumerate_oracle(g, k, Rule::one_class, true);
  auto o = oracle::optimum(g.order(), edge_list(g), k, true, true);
  auto u = enumerate_oracle(g, k, Rule::unrestricted, true);
  c.note(cat(name, n, " k=", k, ": oracle (", r.min_bad, ", ", *r.optimal_count, ") claim (", want_bad,
             ", ", want_count, ")  [unrestricted rule: (", u.min_bad, ", ", *u.optimal_count, ")]"));
  c.require(o.min_bad == r.min_bad && o.count == *r.optimal_count, cat(name, n, " independent oracle"));
  c.require(r.min_bad == want_bad && *r.optimal_count == want_count, cat(name, n, " k=", k));
}

void c2(Check& c) {
  for (int n : {4, 6}) family_check(c, "W", wheel(n).graph, n, 2, n / 2, 4);
  for (int n : {5, 7}) family_check(c, "W", wheel(n).graph, n, 2, (n + 1) / 2, 4 * static_cast<std::uint64_t>(n));
}

void c3(Check& c) {
  for (int n : {5, 7}) {
    auto g = wheel(n).graph;
    auto r = enumerate_oracle(g, 3, Rule::one_class, true);
    auto claim = bk_wheel(n, 3);
    bool same = *r.optimal_count == *claim.coloring_count;
    c.note(cat("W", n, " k=3: min_bad=", r.min_bad, " count=", *r.optimal_count, " claimed count ",
               *claim.coloring_count, " status ", same ? "match" : "mismatch (documented deviation)"));
    c.require(r.min_bad == 1, cat("W", n, " k=3 min_bad"));
  }
}

void c4(Check& c) {
  for (int n : {4, 6}) family_check(c, "H", helm(n).graph, n, 2, n / 2, 4);
  family_check(c, "H", helm(5).graph, 5, 2, 3, 20);

  auto g = helm(3).graph;
  auto bb = solve_bk(g, 3, Rule::one_class, true);
  auto r = enumerate_oracle(g, 3, Rule::one_class, true);
  auto claim = bk_helm(3, 3);
  bool same = *bb.optimal_count == *claim.coloring_count;
  c.note(cat("H3 k=3: min_bad=", bb.min_bad, " count=", *bb.optimal_count, " (enumeration ",
             *r.optimal_count, ") claimed count ", *claim.coloring_count, " status ",
             same ? "match" : "mismatch (documented deviation)"));
  c.require(bb.min_bad == 1 && r.min_bad == 1, "H3 k=3 min_bad");
  c.require(*bb.optimal_count == *r.optimal_count, "H3 k=3 branch and bound count equals enumeration");
}

void c5(Check& c) {
  int cases = 0;
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k <= n - 1; ++k) {
      int x = n - k;
      auto r = enumerate_oracle(complete(n), k, Rule::one_class, true);
      std::uint64_t want = static_cast<std::uint64_t>(n - x) * binomial(n, x + 1);
      for (int i = 2; i <= n - x - 1; ++i) want *= static_cast<std::uint64_t>(i);
      auto f = bk_complete(n, k);
      bool ok = r.min_bad == x * (x + 1) / 2 && *r.optimal_count == want && f.min_bad == r.min_bad &&
                *f.coloring_count == want;
      c.require(ok, cat("K", n, " k=", k, ": oracle (", r.min_bad, ", ", *r.optimal_count, ") expected (",
                        x * (x + 1) / 2, ", ", want, ")"));
      ++cases;
    }
  c.note(cat(cases, " (n, k) pairs"));
}

void c6(Check& c) {
  int cases = 0;
  for (int n = 3; n <= 8; ++n)
    for (int lambda = 1; lambda <= 4; ++lambda)
      for (int j = 0; j <= n; ++j) {
        auto value = defect_poly_cycle(n, j, lambda);
        auto count = oracle::cycle_defect_count(n, j, lambda);
        c.require(value >= 0 && static_cast<std::uint64_t>(value) == count,
                  cat("n=", n, " j=", j, " lambda=", lambda, ": ", value, " vs ", count));
        ++cases;
      }
  for (int n = 3; n <= 11; n += 2) {
    auto count = oracle::cycle_defect_count(n, 1, 2);
    c.require(defect_poly_cycle(n, 1, 2) == 2 * n && count == static_cast<std::uint64_t>(2 * n),
              cat("phi_1(C", n, ";2)"));
  }
  c.note(cat(cases, " (n, j, lambda) triples, plus phi_1(C_n;2) = 2n for odd n <= 11"));
}

void c7(Check& c) {
  for (int n = 3; n <= 5; ++n)
    for (int k = 2; k <= n - 1; ++k)
      for (int lambda : {k, k + 1}) {
        auto formula = defect_poly_complete(n, k, lambda);
        auto product = defect_poly_complete_product(n, k, lambda);
        auto count = oracle::complete_structure_count(n, k, lambda);
        c.note(cat("K", n, " k=", k, " lambda=", lambda, ": formula ", formula, " product ", product,
                   " enumeration ", count));
        c.require(formula == count && product == formula, cat("K", n, " k=", k, " lambda=", lambda));
      }
}

void c8(Check& c) {
  int compared = 0;
  for (const auto& inst : random_graphs(random_seed, 50))
    for (int k = 1; k <= std::min(3, inst.g.order()); ++k)
      for (Rule rule : {Rule::one_class, Rule::unrestricted}) {
        auto a = solve_bk(inst.g, k, rule, true);
        auto b = enumerate_oracle(inst.g, k, rule, true);
        bool ok = a.min_bad == b.min_bad && a.optimal_count == b.optimal_count && a.witness == b.witness;
        c.require(ok, cat("seed ", inst.seed, " n=", inst.g.order(), " k=", k, " ", to_string(rule),
                          ": solver (", a.min_bad, ", ", *a.optimal_count, ", ", vec(a.witness.assignment),
                          ") oracle (", b.min_bad, ", ", *b.optimal_count, ", ",
                          vec(b.witness.assignment), ")"));
        ++compared;
      }
  c.note(cat(compared, " comparisons over 50 graphs, seed ", random_seed));
}

void c9(Check& c) {
  std::mt19937_64 rng(random_seed + 1);
  int checks = 0;
  for (const auto& inst : random_graphs(random_seed, 50)) {
    const Graph& g = inst.g;
    int n = g.order();
    std::string id = cat("seed ", inst.seed, " n=", n);

    c.require(solve_bk(g, 1, Rule::one_class, true).min_bad == g.size(), id + " b_1 = m");
    int previous = g.size();
    for (int k = 2; k <= n; ++k) {
      int b = solve_bk(g, k, Rule::one_class, true).min_bad;
      c.require(b <= previous, cat(id, " b_", k, " <= b_", k - 1));
      previous = b;
    }
    for (int k = 1; k <= std::min(3, n); ++k) {
      auto one = solve_bk(g, k, Rule::one_class, true);
      auto any = solve_bk(g, k, Rule::unrestricted, true);
      c.require(one.min_bad >= any.min_bad, cat(id, " k=", k, " one-class >= unrestricted"));

      std::vector<int> perm(static_cast<std::size_t>(k));
      std::iota(perm.begin(), perm.end(), 1);
      std::shuffle(perm.begin(), perm.end(), rng);
      Coloring permuted = one.witness;
      for (int& x : permuted.assignment) x = perm[static_cast<std::size_t>(x - 1)];
      c.require(bad_edge_count(g, permuted.assignment) == one.min_bad,
                cat(id, " k=", k, " permutation invariance"));
      checks += 3;
    }
    int chi = chromatic_number(g);
    c.require(chi == oracle::chromatic(n, edge_list(g)), id + " chromatic number");
    c.require(solve_bk(g, chi, Rule::one_class, true).min_bad == 0, cat(id, " b_chi = 0"));
    checks += 2 + (n - 1);
  }
  c.note(cat(checks, " invariant checks over 50 graphs, seed ", random_seed));
}

void c10(Check& c) {
  auto k3 = complete(3);
  auto kk = enumerate_oracle(join(k3, k3).graph, 2, Rule::unrestricted, true);
  c.note(cat("b_2(K3+K3) exact ", kk.min_bad, " (worked value 6)"));
  c.require(kk.min_bad == 6, "b_2(K3+K3) = 6");

  auto w = enumerate_oracle(join(complete(1), cycle(4)).graph, 2, Rule::one_class, true);
  c.note(cat("b_2(K1+C4) exact ", w.min_bad, ", closed form for W4 ", bk_wheel(4, 2).min_bad));
  c.require(w.min_bad == 2 && bk_wheel(4, 2).min_bad == 2, "join(K1,C4) = 2");

  std::mt19937_64 rng(random_seed + 2);
  std::int64_t min_slack = -1;
  BoundOptions opts{Rule::unrestricted, false, {}};
  for (int i = 0; i < 20; ++i) {
    int ng = std::uniform_int_distribution<int>(1, 6)(rng);
    int nh = std::uniform_int_distribution<int>(1, 9 - ng)(rng);
    int k = std::min(std::uniform_int_distribution<int>(1, 3)(rng), ng + nh);
    auto g = random_connected(ng, 0.5, rng());
    auto h = random_connected(nh, 0.5, rng());
    auto r = join_bound(g, h, k, opts);
    bool ok = r.exact && r.slack && *r.slack >= 0;
    c.require(ok, cat("pair ", i, " ng=", ng, " nh=", nh, " k=", k, ": bound ", r.bound, " exact ",
                      r.exact ? std::to_string(*r.exact) : "none"));
    if (r.slack && (min_slack < 0 || *r.slack < min_slack)) min_slack = *r.slack;
  }
  c.note(cat("20 random pairs, smallest slack ", min_slack));
}

void c11(Check& c) {
  struct Case {
    const char* name;
    Graph g, h;
    int k;
    int expected;  // -1: whatever the oracle finds
  };
  const Case cases[] = {{"K1 o K3", complete(1), complete(3), 3, 1},
                        {"C3 o K1", cycle(3), complete(1), 2, -1},
                        {"P2 o K1", path(2), complete(1), 1, 3}};
  for (const auto& cs : cases) {
    auto r = corona_formula(cs.g, cs.h, cs.k);
    auto direct = enumerate_oracle(corona(cs.g, cs.h).graph, cs.k, Rule::one_class, true);
    c.note(cat(cs.name, " k=", cs.k, ": formula ", r.bound, " exact ",
               r.exact ? std::to_string(*r.exact) : "none", " difference ",
               r.slack ? std::to_string(*r.slack) : "none"));
    c.require(r.exact && r.slack && *r.exact == direct.min_bad && *r.slack == r.bound - *r.exact,
              cat(cs.name, " report carries the oracle value and difference"));
    if (cs.expected >= 0) c.require(r.exact && *r.exact == cs.expected, cat(cs.name, " exact value"));
  }
}

void c12(Check& c) {
  struct Case {
    const char* name;
    Graph g;
    int k;
  };
  const Case cases[] = {{"C5", cycle(5), 2}, {"C7", cycle(7), 2}, {"K5", complete(5), 4},
                        {"K5", complete(5), 3}, {"W5", wheel(5).graph, 3}};
  for (const auto& cs : cases) {
    auto r = k_chromatic_subgraph(cs.g, cs.k);
    int chi = oracle::chromatic(r.subgraph.order(), edge_list(r.subgraph));
    c.note(cat(cs.name, " k=", cs.k, ": removed ", vec(r.removed), ", chi(h) = ", chi));
    c.require(chi == r.chromatic && chi <= cs.k, cat(cs.name, " k=", cs.k, " chi(h) <= k"));
    c.require(chi == cs.k, cat(cs.name, " k=", cs.k, " chi(h) = k"));
  }
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<void(Check&)> body;
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_fail;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
      std::stringstream list(argv[++i]);
      std::string item;
      while (std::getline(list, item, ',')) expected_fail.insert(std::stoi(item));
    } else {
      std::fprintf(stderr, "usage: acceptance [--expect-fail 2,4]\n");
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "odd cycles, two colours", 1, c1},
      {2, "wheels, two colours", 10, c2},
      {3, "odd wheels, three colours", 30, c3},
      {4, "helms", 60, c4},
      {5, "complete graphs", 30, c5},
      {6, "cycle defect polynomial", 20, c6},
      {7, "complete graph defect polynomial", 20, c7},
      {8, "branch and bound equals enumeration", 60, c8},
      {9, "invariants on random graphs", 30, c9},
      {10, "join bound", 60, c10},
      {11, "corona formula report", 30, c11},
      {12, "k-chromatic subgraph", 10, c12},
  };

  std::set<int> failed;
  for (const auto& cr : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.require(false, cat("exception: ", e.what()));
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.require(seconds <= cr.budget_s, cat("time budget ", cr.budget_s, " s"));
    if (!check.pass) failed.insert(cr.id);
    std::printf("criterion %2d: %s  %s (%.2f s of %.0f s)\n", cr.id, check.pass ? "PASS" : "FAIL",
                cr.title, seconds, cr.budget_s);
    for (const auto& d : check.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
  }

  std::printf("\n%zu of %zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
  if (!expected_fail.empty()) {
    bool same = failed == expected_fail;
    std::printf("failing set %s the expected set\n", same ? "equals" : "differs from");
    return same ? 0 : 1;
  }
  return failed.empty() ? 0 : 1;
}
