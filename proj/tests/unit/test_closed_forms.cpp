#include <doctest.h>

#include <random>

#include <deltak/closed_forms.hpp>
#include <deltak/error.hpp>
#include <deltak/generators.hpp>

#include "../support/helpers.hpp"

using namespace deltak;

namespace {

std::pair<int, std::uint64_t> oracle_pair(const Graph& g, int k) {
  const auto o = oracle::optimum(g.order(), edge_list(g), k, true, true);
  return {o.min_bad, o.count};
}

}  // namespace

TEST_SUITE("closed_forms") {

TEST_CASE("paths") {
  CHECK(bk_path(2).min_bad == 1);
  CHECK(bk_path(5).min_bad == 4);
  CHECK(bk_path(9).min_bad == 8);
  CHECK(bk_path(9).min_bad == oracle_pair(path(9), 1).first);
  CHECK_FALSE(bk_path(9).coloring_count.has_value());
  CHECK_THROWS_AS(bk_path(1), Error);
}

TEST_CASE("odd cycles") {
  CHECK(bk_cycle_odd(3).min_bad == 1);
  CHECK(bk_cycle_odd(3).coloring_count == 6);
  CHECK(bk_cycle_odd(9).coloring_count == 18);
  const auto r5 = bk_cycle_odd(5);
  CHECK(std::pair{r5.min_bad, *r5.coloring_count} == oracle_pair(cycle(5), 2));
  CHECK_THROWS_AS(bk_cycle_odd(6), Error);
}

TEST_CASE("wheels and helms return the published values") {
  CHECK(bk_wheel(4, 2).min_bad == 2);
  CHECK(bk_wheel(4, 2).coloring_count == 4);
  CHECK(bk_wheel(5, 2).min_bad == 3);
  CHECK(bk_wheel(5, 2).coloring_count == 20);
  CHECK(bk_wheel(5, 3).min_bad == 1);
  CHECK(bk_wheel(5, 3).coloring_count == 15);
  CHECK(bk_wheel(5, 3).count_disputed);
  CHECK_FALSE(bk_wheel(5, 2).count_disputed);
  CHECK_THROWS_AS(bk_wheel(4, 3), Error);
  CHECK_THROWS_AS(bk_wheel(5, 4), Error);

  CHECK(bk_helm(4, 2).min_bad == 2);
  CHECK(bk_helm(4, 2).coloring_count == 4);
  CHECK(bk_helm(5, 2).min_bad == 3);
  CHECK(bk_helm(5, 2).coloring_count == 20);
  CHECK(bk_helm(3, 3).min_bad == 1);
  CHECK(bk_helm(3, 3).coloring_count == 72);
  CHECK(bk_helm(3, 3).count_disputed);
}

TEST_CASE("even wheels and helms match enumeration") {
  for (int n : {4, 6}) {
    CHECK(oracle_pair(wheel(n).graph, 2) == std::pair{bk_wheel(n, 2).min_bad, *bk_wheel(n, 2).coloring_count});
    CHECK(oracle_pair(helm(n).graph, 2) == std::pair{bk_helm(n, 2).min_bad, *bk_helm(n, 2).coloring_count});
  }
}

TEST_CASE("odd wheels with two colours need an extra bad edge under the one-class rule") {
  // Putting the hub in the minority rim colour leaves the rim's bad edge in
  // the other class, so the one-class optimum is ceil(n/2)+1 with 2n
  // colourings; without the class rule the optimum is ceil(n/2).
  for (int n : {5, 7}) {
    const auto w = wheel(n).graph;
    CHECK(oracle_pair(w, 2) == std::pair<int, std::uint64_t>{(n + 1) / 2 + 1, 2 * n});
    const auto free = oracle::optimum(w.order(), edge_list(w), 2, false, true);
    CHECK(free.min_bad == bk_wheel(n, 2).min_bad);
    CHECK(free.count == 2 * static_cast<std::uint64_t>(n));
  }
  const auto h5 = helm(5).graph;
  CHECK(oracle_pair(h5, 2) == std::pair<int, std::uint64_t>{4, 10});
}

TEST_CASE("disputed three-colour counts") {
  CHECK(oracle_pair(wheel(5).graph, 3) == std::pair<int, std::uint64_t>{1, 60});
  CHECK(oracle_pair(wheel(7).graph, 3) == std::pair<int, std::uint64_t>{1, 84});
  CHECK(oracle_pair(helm(3).graph, 3) == std::pair<int, std::uint64_t>{1, 288});
}

TEST_CASE("complete graphs") {
  const auto r54 = bk_complete(5, 4);
  CHECK(r54.min_bad == 1);
  CHECK(r54.coloring_count == 240);
  const auto r42 = bk_complete(4, 2);
  CHECK(r42.min_bad == 3);
  CHECK(r42.coloring_count == 8);
  CHECK(std::pair{r42.min_bad, *r42.coloring_count} == oracle_pair(complete(4), 2));
  const auto r21 = bk_complete(2, 1);
  CHECK(r21.min_bad == 1);
  CHECK(r21.coloring_count == 1);
  CHECK_THROWS_AS(bk_complete(4, 4), Error);
  CHECK_THROWS_AS(bk_complete(1, 1), Error);
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      const auto r = bk_complete(n, k);
      CHECK(std::pair{r.min_bad, *r.coloring_count} == oracle_pair(complete(n), k));
      CHECK(count_optimal(complete(n), k, Rule::one_class, true) == *r.coloring_count);
    }
}

TEST_CASE("cycle defect polynomial") {
  CHECK(defect_poly_cycle(5, 1, 2) == 10);
  CHECK(defect_poly_cycle(3, 0, 3) == static_cast<std::int64_t>(oracle::cycle_defect_count(3, 0, 3)));
  CHECK(defect_poly_cycle(3, 0, 3) == 6);
  CHECK(defect_poly_cycle(4, 4, 1) == 1);
  CHECK_THROWS_AS(defect_poly_cycle(2, 0, 2), Error);
  CHECK_THROWS_AS(defect_poly_cycle(4, 5, 2), Error);
  CHECK_THROWS_AS(defect_poly_cycle(4, 1, 0), Error);

  for (int n = 3; n <= 8; ++n)
    for (int lambda = 1; lambda <= 4; ++lambda) {
      std::int64_t total = 0;
      for (int j = 0; j <= n; ++j) {
        const auto value = defect_poly_cycle(n, j, lambda);
        CHECK(value == static_cast<std::int64_t>(oracle::cycle_defect_count(n, j, lambda)));
        total += value;
      }
      std::int64_t all = 1;
      for (int i = 0; i < n; ++i) all *= lambda;
      CHECK(total == all);
      // Chromatic polynomial of the cycle.
      const std::int64_t sign = n % 2 == 0 ? 1 : -1;
      std::int64_t proper = sign * (lambda - 1);
      std::int64_t power = 1;
      for (int i = 0; i < n; ++i) power *= lambda - 1;
      proper += power;
      CHECK(defect_poly_cycle(n, 0, lambda) == proper);
    }
}

TEST_CASE("complete defect polynomial") {
  CHECK(defect_poly_complete(4, 3, 3) == 36);
  CHECK(defect_poly_complete(4, 3, 3) == oracle::complete_structure_count(4, 3, 3));
  CHECK(defect_poly_complete(5, 4, 4) == 240);
  CHECK(defect_poly_complete(5, 4, 4) == *bk_complete(5, 4).coloring_count * binomial(4, 4));
  CHECK(defect_poly_complete(3, 2, 2) == 6);
  CHECK(defect_poly_complete(3, 2, 2) == oracle::complete_structure_count(3, 2, 2));
  for (int n = 3; n <= 6; ++n)
    for (int k = 2; k < n; ++k)
      for (int lambda = k; lambda <= k + 2; ++lambda)
        CHECK(defect_poly_complete(n, k, lambda) == defect_poly_complete_product(n, k, lambda));
  CHECK_THROWS_AS(defect_poly_complete(4, 3, 2), Error);
  CHECK_THROWS_AS(defect_poly_complete(4, 1, 2), Error);
}

TEST_CASE("helpers") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(30, 15) == 155117520);
  CHECK(falling_factorial(5, 3) == 60);
  CHECK(falling_factorial(3, 5) == 0);
  CHECK(min_pairing({2, 1}, {1, 2}) == 4);
  CHECK(min_pairing({3}, {1, 2, 5}) == 3);
  CHECK(corona_chromatic_number(2, 2) == 3);
  CHECK(corona_chromatic_number(3, 1) == 3);
  CHECK(corona_chromatic_number(1, 3) == 4);
}

TEST_CASE("union bound") {
  const auto kk = union_bound(complete(3), complete(3), 2);
  CHECK(kk.bound == 2);
  CHECK(kk.exact == 2);
  const auto pk = union_bound(path(3), complete(3), 2);
  CHECK(pk.t == 1);
  CHECK(pk.left_bad == 2);
  CHECK(pk.right_bad == 1);
  CHECK(pk.bound == 3);
  CHECK(pk.exact == 1);
  CHECK(pk.slack == 2);
  const auto swapped = union_bound(complete(3), path(3), 2);
  CHECK(swapped.swapped);
  CHECK(swapped.bound == 3);
  const auto cc = union_bound(cycle(5), cycle(5), 2);
  CHECK(cc.bound == 2);
  CHECK(cc.exact == 2);
}

TEST_CASE("join bound") {
  const auto k33 = join_bound(complete(3), complete(3), 2);
  CHECK(k33.t == 2);
  CHECK(k33.left_bad == 1);
  CHECK(k33.right_bad == 1);
  CHECK(k33.combination == 4);
  CHECK(k33.bound == 6);
  CHECK(k33.exact == 6);
  CHECK(k33.rule == Rule::unrestricted);

  const auto k35 = join_bound(complete(3), complete(3), 5);
  CHECK(k35.bound == 1);
  CHECK(k35.exact == 1);
  BoundOptions relaxed{Rule::unrestricted, true, {}};
  const auto k35r = join_bound(complete(3), complete(3), 5, relaxed);
  CHECK(k35r.t == 5);
  CHECK(k35r.bound == 1);

  const auto wheel4 = join_bound(complete(1), cycle(4), 2);
  CHECK(wheel4.exact == 2);
  CHECK(wheel4.bound >= 2);
}

TEST_CASE("join cross term equals the minimum over all optimal colouring pairs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 12; ++trial) {
    const int ng = 2 + static_cast<int>(rng() % 3);
    const int nh = 2 + static_cast<int>(rng() % 3);
    const auto g = random_connected(ng, 0.5, rng());
    const auto h = random_connected(nh, 0.5, rng());
    const int k = 2;
    const auto r = join_bound(g, h, k);
    const auto& left = r.swapped ? h : g;
    const auto& right = r.swapped ? g : h;
    const auto a = oracle::optimum(left.order(), edge_list(left), r.t, false, r.t <= left.order(), true);
    const auto b = oracle::optimum(right.order(), edge_list(right), k, false, k <= right.order(), true);
    std::int64_t best = -1;
    for (const auto& x : a.all)
      for (const auto& y : b.all) {
        std::int64_t cross = 0;
        for (int c = 1; c <= k; ++c)
          cross += std::count(x.begin(), x.end(), c) * std::count(y.begin(), y.end(), c);
        if (best < 0 || cross < best) best = cross;
      }
    CHECK(r.combination == best);
    CHECK(r.slack >= 0);
  }
}

TEST_CASE("corona report") {
  const auto k13 = corona_formula(complete(1), complete(3), 3);
  CHECK(k13.exact == 1);
  CHECK(k13.bound == 1);
  const auto p21 = corona_formula(path(2), complete(1), 1);
  CHECK(p21.exact == 3);
  const auto c31 = corona_formula(cycle(3), complete(1), 2);
  const auto g = corona(cycle(3), complete(1)).graph;
  CHECK(c31.exact == oracle::optimum(g.order(), edge_list(g), 2, true, true).min_bad);
  CHECK(c31.slack == c31.bound - *c31.exact);
  CHECK_THROWS_AS(corona_formula(cycle(3), complete(1), 3), Error);
}

}
