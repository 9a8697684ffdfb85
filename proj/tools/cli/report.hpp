#pragma once

#include <iosfwd>
#include <optional>

#include <nlohmann/json.hpp>

#include <deltak/closed_forms.hpp>
#include <deltak/solver.hpp>

namespace deltak::cli {

nlohmann::json solve_json(const Graph& g, int k, const SolveResult& r);
nlohmann::json family_json(const FamilyResult& f);
nlohmann::json bound_json(const BoundReport& r);

void print_solve(std::ostream& out, const Graph& g, int k, const SolveResult& r);
void print_bound(std::ostream& out, const BoundReport& r);

}  // namespace deltak::cli
