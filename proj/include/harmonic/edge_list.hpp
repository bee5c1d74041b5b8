#pragma once

#include <charconv>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "harmonic/graph.hpp"

// Plain-text edge lists:
//
//   # comment
//   4          <- vertex count
//   0 1        <- one edge per line, 0-based indices
//   1 2
//
// Blank lines and lines starting with '#' are skipped; CRLF is accepted.
// The writer emits LF, one "u v" line per edge with u < v, sorted.

namespace harmonic {

class EdgeListError : public std::invalid_argument {
 public:
  EdgeListError(std::size_t line, const std::string& what)
      : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

inline std::size_t parse_index(std::string_view field, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw EdgeListError(line_no, "expected a non-negative integer, got '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace detail

inline Graph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_order = false;
  Graph graph(1);

  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto fields = detail::split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;

    if (!have_order) {
      if (fields.size() != 1) throw EdgeListError(line_no, "expected the vertex count on its own line");
      std::size_t order = detail::parse_index(fields[0], line_no);
      if (order == 0) throw EdgeListError(line_no, "vertex count must be at least 1");
      graph = Graph(order);
      have_order = true;
      continue;
    }

    if (fields.size() != 2) throw EdgeListError(line_no, "expected two vertex indices");
    std::size_t u = detail::parse_index(fields[0], line_no);
    std::size_t v = detail::parse_index(fields[1], line_no);
    if (u >= graph.order() || v >= graph.order()) {
      throw EdgeListError(line_no, "vertex index out of range for order " + std::to_string(graph.order()));
    }
    if (u == v) throw EdgeListError(line_no, "self-loop at vertex " + std::to_string(u));
    graph.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }

  if (!have_order) throw EdgeListError(line_no, "missing vertex count");
  return graph;
}

inline std::string serialize_edge_list(const Graph& graph) {
  std::ostringstream out;
  out << graph.order() << '\n';
  for (auto [u, v] : graph.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace harmonic
