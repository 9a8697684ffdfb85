#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "deltak/coloring.hpp"

namespace deltak {

/// Single line of space-separated 1-based colours. `k` defaults to the
/// largest colour present when not given.
Coloring parse_coloring(std::string_view line, int k = 0);
std::string format_coloring(const Coloring& c);

/// {"assignment": [...], "k": k}
nlohmann::json to_json(const Coloring& c);
Coloring coloring_from_json(const nlohmann::json& j);

/// Graphviz DOT with a `colour` attribute per vertex; bad edges are drawn red.
std::string to_dot(const Graph& g, const Coloring& c);

}  // namespace deltak
