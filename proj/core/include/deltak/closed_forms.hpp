#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "deltak/coloring.hpp"
#include "deltak/graph.hpp"
#include "deltak/solver.hpp"

namespace deltak {

/// Published b_k value (and colouring count, when one is claimed) for a named
/// family. Colour budgets are `k`; bad-edge counts elsewhere are `j`.
struct FamilyResult {
  std::string family;
  int n = 0;
  int k = 0;
  int min_bad = 0;
  /// Number of optimal labelled colourings, or nullopt when no count is claimed.
  std::optional<std::uint64_t> coloring_count;
  /// The claimed count comes from a construction that misses colourings
  /// (third colour on the hub with one bad rim edge, for instance). It is
  /// reported next to the enumerated count and never asserted.
  bool count_disputed = false;
  std::string source;
};

FamilyResult bk_path(int n);
FamilyResult bk_cycle_odd(int n);
/// k = 2 for any n >= 3, k = 3 for odd n.
FamilyResult bk_wheel(int n, int k);
FamilyResult bk_helm(int n, int k);
/// 2 <= n, 1 <= k <= n-1; with x = n-k the optimum puts x+1 vertices in one
/// class and every other vertex in its own.
FamilyResult bk_complete(int n, int k);

std::uint64_t binomial(int n, int r);
/// lambda (lambda-1) ... (lambda-k+1)
std::uint64_t falling_factorial(int lambda, int k);

/// Number of lambda-colourings of C_n (all assignments, no class rule) with
/// exactly j bad edges: C(n,j) [(lambda-1)^(n-j) + (-1)^(n-j) (lambda-1)].
std::int64_t defect_poly_cycle(int n, int j, int lambda);

/// lambda-colourings of K_n with the optimal k-colour structure:
/// C(n, n-k+1) lambda^(k).
std::uint64_t defect_poly_complete(int n, int k, int lambda);
/// The same quantity as the product C(lambda,k) (n-x) C(n,x+1) (n-x-1)!,
/// x = n-k: choose the colours, then count labelled optimal colourings.
std::uint64_t defect_poly_complete_product(int n, int k, int lambda);

struct GraphSummary {
  int n = 0;
  int m = 0;
  int chromatic = 0;
};

struct BoundOptions {
  Rule rule = Rule::one_class;
  /// Colour the left operand from the full k-colour set (t = k) instead of
  /// t = min(k, chi(G) - 1).
  bool relaxed = false;
  SolverConfig solver;
};

/// Upper bound (union, join) or claimed identity (corona) for b_k of a
/// binary operation, evaluated term by term and compared with the exact value.
struct BoundReport {
  std::string operation;
  GraphSummary left;
  GraphSummary right;
  bool swapped = false;
  int t = 0;
  int k = 0;
  Rule rule = Rule::one_class;
  bool relaxed = false;

  int left_bad = 0;    // b_t(G)
  int right_bad = 0;   // b_k(H)
  std::int64_t combination = 0;  // cross-edge term (join) or theta* sum (corona)
  std::optional<int> theta_star;  // corona only
  std::int64_t bound = 0;

  std::optional<int> exact;
  /// bound - exact; never negative for union and join.
  std::optional<std::int64_t> slack;
};

BoundReport union_bound(const Graph& g, const Graph& h, int k, const BoundOptions& options = {});

/// Cross term minimised over every pair of optimal colourings of the two
/// sides. Only class sizes matter, so each side contributes its distinct
/// sorted class-size vectors and the pairing is the rearrangement minimum.
BoundReport join_bound(const Graph& g, const Graph& h, int k,
                       const BoundOptions& options = {Rule::unrestricted, false, {}});

BoundReport corona_formula(const Graph& g, const Graph& h, int k, const BoundOptions& options = {});

/// chi(G o H) from chi(G) and chi(H).
int corona_chromatic_number(int chi_g, int chi_h);

/// Minimum of sum_i a_i b_pi(i) over permutations pi (vectors padded with
/// zeros to a common length).
std::int64_t min_pairing(std::vector<int> a, std::vector<int> b);

}  // namespace deltak
