#include "deltak/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "deltak/error.hpp"

namespace deltak {

namespace {

[[noreturn]] void parse_error(int line, const std::string& what) {
  fail(ErrorKind::invalid_input, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::optional<long long> to_int(std::string_view token) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

long long integer(std::string_view token, int line) {
  auto v = to_int(token);
  if (!v) parse_error(line, "expected an integer, got '" + std::string(token) + "'");
  return *v;
}

struct Builder {
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;

  void header(long long vertices, long long edge_count, int line) {
    if (vertices < 0 || edge_count < 0) parse_error(line, "negative vertex or edge count");
    if (vertices > 1'000'000) parse_error(line, "vertex count too large");
    n = vertices;
    m = edge_count;
  }

  void edge(long long u, long long v, int line) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      parse_error(line, "endpoint out of range (n = " + std::to_string(n) + ")");
    if (u == v) parse_error(line, "self-loop at vertex " + std::to_string(u));
    const std::pair<int, int> key{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    if (!seen.insert(key).second)
      parse_error(line, "duplicate edge " + std::to_string(key.first) + " " +
                            std::to_string(key.second));
    edges.push_back({key.first, key.second});
  }
};

}  // namespace

Graph parse_graph(std::string_view text) {
  Builder b;
  enum class Format { unknown, canonical, dimacs } format = Format::unknown;
  int line_no = 0;
  int last_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0].front() == '#') continue;
    last_line = line_no;

    if (format == Format::unknown) {
      if (tokens[0] == "c") {
        format = Format::dimacs;
        continue;
      }
      if (tokens[0] == "p") {
        format = Format::dimacs;
      } else {
        format = Format::canonical;
        if (tokens.size() != 2) parse_error(line_no, "expected header 'n m'");
        b.header(integer(tokens[0], line_no), integer(tokens[1], line_no), line_no);
        continue;
      }
    }

    if (format == Format::canonical) {
      if (tokens.size() != 2) parse_error(line_no, "expected edge 'u v'");
      if (static_cast<long long>(b.edges.size()) >= b.m)
        parse_error(line_no, "more edges than declared in header");
      b.edge(integer(tokens[0], line_no), integer(tokens[1], line_no), line_no);
      continue;
    }

    // DIMACS
    if (tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (b.n >= 0) parse_error(line_no, "duplicate 'p' header");
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col"))
        parse_error(line_no, "expected header 'p edge n m'");
      b.header(integer(tokens[2], line_no), integer(tokens[3], line_no), line_no);
    } else if (tokens[0] == "e") {
      if (b.n < 0) parse_error(line_no, "edge before 'p' header");
      if (tokens.size() != 3) parse_error(line_no, "expected 'e u v'");
      b.edge(integer(tokens[1], line_no) - 1, integer(tokens[2], line_no) - 1, line_no);
    } else {
      parse_error(line_no, "unrecognised DIMACS line type '" + std::string(tokens[0]) + "'");
    }
  }

  if (b.n < 0) fail(ErrorKind::invalid_input, "missing header");
  if (static_cast<long long>(b.edges.size()) != b.m)
    parse_error(last_line, "header declares " + std::to_string(b.m) + " edges, found " +
                               std::to_string(b.edges.size()));
  return Graph(static_cast<int>(b.n), std::move(b.edges));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::invalid_input, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace deltak
