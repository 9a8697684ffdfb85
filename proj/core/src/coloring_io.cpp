#include "deltak/coloring_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "deltak/error.hpp"

namespace deltak {

Coloring parse_coloring(std::string_view line, int k) {
  Coloring c;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    int colour = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, colour);
    if (ec != std::errc() || ptr != line.data() + j || colour < 1)
      fail(ErrorKind::invalid_coloring,
           "bad colour token '" + std::string(line.substr(i, j - i)) + "'");
    c.assignment.push_back(colour);
    i = j;
  }
  const int largest =
      c.assignment.empty() ? 0 : *std::max_element(c.assignment.begin(), c.assignment.end());
  if (k != 0 && largest > k)
    fail(ErrorKind::invalid_coloring, "colour exceeds k = " + std::to_string(k));
  c.k = k != 0 ? k : largest;
  return c;
}

std::string format_coloring(const Coloring& c) {
  std::ostringstream out;
  for (std::size_t i = 0; i < c.assignment.size(); ++i) out << (i ? " " : "") << c.assignment[i];
  return out.str();
}

nlohmann::json to_json(const Coloring& c) {
  return {{"assignment", c.assignment}, {"k", c.k}};
}

Coloring coloring_from_json(const nlohmann::json& j) {
  try {
    return {j.at("assignment").get<std::vector<int>>(), j.at("k").get<int>()};
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::invalid_coloring, std::string("malformed colouring JSON: ") + e.what());
  }
}

std::string to_dot(const Graph& g, const Coloring& c) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v)
    out << "  " << v << " [colour=" << c[v] << ", label=\"" << v << ":" << c[v] << "\"];\n";
  for (const auto& [u, v] : g.edges()) {
    out << "  " << u << " -- " << v;
    if (c[u] == c[v]) out << " [color=red]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace deltak
