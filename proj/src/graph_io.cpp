#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "tia/graph.hpp"

namespace tia {
namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i)
    if (i == line.size() || line[i] == ',') {
      out.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

std::size_t parse_count(std::string_view token, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(token) + "'");
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<std::size_t> n;
  bool dimacs = false;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tok = tokens(line);
    if (tok.empty() || tok[0][0] == 'c' || tok[0][0] == '#') {
      if (end == text.size()) break;
      continue;
    }

    if (!n) {
      if (tok[0] == "p") {
        if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
          throw ParseError(line_no, "malformed DIMACS header, expected 'p edge n m'");
        n = parse_count(tok[2], line_no);
        dimacs = true;
      } else {
        if (tok.size() != 1) throw ParseError(line_no, "malformed header, expected vertex count");
        n = parse_count(tok[0], line_no);
      }
    } else {
      // several pairs may share a line when separated by commas
      for (std::string_view chunk : split_commas(line)) {
        auto pair = tokens(chunk);
        std::size_t first = 0;
        if (dimacs) {
          if (pair.empty() || pair[0] != "e") throw ParseError(line_no, "malformed line, expected 'e u v'");
          first = 1;
        }
        if (pair.size() != first + 2) throw ParseError(line_no, "malformed line, expected two endpoints");
        std::size_t u = parse_count(pair[first], line_no);
        std::size_t v = parse_count(pair[first + 1], line_no);
        if (dimacs) {
          if (u == 0 || v == 0) throw ParseError(line_no, "DIMACS ids are 1-based");
          --u;
          --v;
        }
        if (u >= *n || v >= *n) throw ParseError(line_no, "endpoint out of range");
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        Edge e{std::min(u, v), std::max(u, v)};
        if (!seen.insert(e).second)
          throw ParseError(line_no, "duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second));
        edges.push_back(e);
      }
    }
    if (end == text.size()) break;
  }
  if (!n) throw ParseError(line_no, "missing header");
  return Graph::from_edges(*n, edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

}  // namespace tia
