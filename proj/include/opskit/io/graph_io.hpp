#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "opskit/graph.hpp"
#include "opskit/io/text.hpp"
#include "opskit/max_flow.hpp"

namespace opskit::io {

// Graph text format: first content line `n <count>`, then one edge per line
// `u v w` with 1-based integer ids and a decimal weight. `#` starts a
// comment line. Absent edges are omitted, never written as inf.
inline WeightedGraph parse_graph_file(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) fail(Errc::ParseError, "empty graph file");

  const auto header = split_whitespace(lines.front().text);
  if (header.size() != 2 || header[0] != "n")
    parse_fail(Errc::ParseError, lines.front().number, "expected header `n <count>`");
  const auto count = parse_integer(header[1]);
  if (!count || *count < 0) parse_fail(Errc::ParseError, lines.front().number, "bad vertex count");

  WeightedGraph g(static_cast<int>(*count));
  for (size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const auto tokens = split_whitespace(line.text);
    if (tokens.size() != 3)
      parse_fail(Errc::ParseError, line.number, "expected `u v w`");
    const auto u = parse_integer(tokens[0]);
    const auto v = parse_integer(tokens[1]);
    if (!u || !v) parse_fail(Errc::ParseError, line.number, "vertex ids must be integers");
    const auto w = parse_double(tokens[2]);
    if (!w || !std::isfinite(*w) || *w < 0.0)
      parse_fail(Errc::ParseError, line.number, "weight must be a finite decimal >= 0");
    if (*u == *v) parse_fail(Errc::ParseError, line.number, "self-loop");
    try {
      g.add_edge(static_cast<VertexId>(*u), static_cast<VertexId>(*v), *w);
    } catch (const Error& e) {
      parse_fail(e.code(), line.number, e.what());
    }
  }
  return g;
}

inline std::string serialize_graph(const WeightedGraph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + format_number(e.weight) + "\n";
  return out;
}

// Weight matrix text: `n <count>` then n rows of n cells, `inf` marking
// absent edges. Symmetry is NOT enforced here so that malformed matrices can
// be read and rejected by graph_from_weight_matrix.
inline WeightMatrix parse_weight_matrix_text(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) fail(Errc::ParseError, "empty matrix file");

  const auto header = split_whitespace(lines.front().text);
  if (header.size() != 2 || header[0] != "n")
    parse_fail(Errc::ParseError, lines.front().number, "expected header `n <count>`");
  const auto count = parse_integer(header[1]);
  if (!count || *count < 0) parse_fail(Errc::ParseError, lines.front().number, "bad dimension");
  const int n = static_cast<int>(*count);
  if (static_cast<int>(lines.size()) - 1 != n)
    fail(Errc::ParseError, "expected " + std::to_string(n) + " matrix rows, found " +
                               std::to_string(lines.size() - 1));

  std::vector<double> cells;
  cells.reserve(static_cast<size_t>(n) * n);
  for (int row = 0; row < n; ++row) {
    const Line& line = lines[row + 1];
    const auto tokens = split_whitespace(line.text);
    if (static_cast<int>(tokens.size()) != n)
      parse_fail(Errc::ParseError, line.number, "expected " + std::to_string(n) + " cells");
    for (const auto token : tokens) {
      if (token == "inf") {
        cells.push_back(kInfiniteWeight);
        continue;
      }
      const auto w = parse_double(token);
      if (!w || !std::isfinite(*w) || *w < 0.0)
        parse_fail(Errc::ParseError, line.number, "cells must be `inf` or a finite decimal >= 0");
      cells.push_back(*w);
    }
  }
  return WeightMatrix::from_cells(n, std::move(cells));
}

inline std::string serialize_weight_matrix(const WeightMatrix& c) {
  const int n = c.dimension();
  std::string out = "n " + std::to_string(n) + "\n";
  for (VertexId i = 1; i <= n; ++i) {
    for (VertexId j = 1; j <= n; ++j) {
      if (j > 1) out += ' ';
      out += format_number(c.at(i, j));
    }
    out += '\n';
  }
  return out;
}

// Flow networks reuse the graph format; each line is one directed arc
// `from to capacity`. Parallel arcs are allowed.
inline FlowNetwork parse_flow_network(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) fail(Errc::ParseError, "empty network file");

  const auto header = split_whitespace(lines.front().text);
  if (header.size() != 2 || header[0] != "n")
    parse_fail(Errc::ParseError, lines.front().number, "expected header `n <count>`");
  const auto count = parse_integer(header[1]);
  if (!count || *count < 0) parse_fail(Errc::ParseError, lines.front().number, "bad vertex count");

  FlowNetwork net(static_cast<int>(*count));
  for (size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const auto tokens = split_whitespace(line.text);
    if (tokens.size() != 3)
      parse_fail(Errc::ParseError, line.number, "expected `from to capacity`");
    const auto u = parse_integer(tokens[0]);
    const auto v = parse_integer(tokens[1]);
    if (!u || !v) parse_fail(Errc::ParseError, line.number, "vertex ids must be integers");
    const auto cap = parse_double(tokens[2]);
    if (!cap || !std::isfinite(*cap) || *cap < 0.0)
      parse_fail(Errc::ParseError, line.number, "capacity must be a finite decimal >= 0");
    if (*u == *v) parse_fail(Errc::ParseError, line.number, "self-loop");
    try {
      net.add_arc(static_cast<VertexId>(*u), static_cast<VertexId>(*v), *cap);
    } catch (const Error& e) {
      parse_fail(e.code(), line.number, e.what());
    }
  }
  return net;
}

inline std::string serialize_flow_network(const FlowNetwork& net) {
  std::string out = "n " + std::to_string(net.vertex_count()) + "\n";
  for (const Arc& a : net.arcs())
    out += std::to_string(a.from) + " " + std::to_string(a.to) + " " +
           format_number(a.capacity) + "\n";
  return out;
}

}  // namespace opskit::io
