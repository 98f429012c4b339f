#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "opskit/error.hpp"

namespace opskit {

// Vertex ids are 1-based everywhere in the public API; storage offsets are an
// implementation detail.
using VertexId = int;

inline constexpr double kInfiniteWeight = std::numeric_limits<double>::infinity();

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n + 1), size_(n + 1, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false when x and y were already in the same set.
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    if (size_[rx] < size_[ry]) std::swap(rx, ry);
    parent_[ry] = rx;
    size_[rx] += size_[ry];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace detail

// Undirected simple graph with nonnegative finite edge weights. At most one
// edge per vertex pair; edges are stored normalized (u < v) in insertion
// order. Immutable once built; all algorithms take it by const reference.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  explicit WeightedGraph(int n) : n_(n) {
    if (n < 0) fail(Errc::InvalidArgument, "vertex count must be >= 0");
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  void add_edge(VertexId u, VertexId v, double weight) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) fail(Errc::SelfLoop, "self-loop on vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (has_edge(u, v))
      fail(Errc::DuplicateEdge,
           "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    if (!(weight >= 0.0) || !std::isfinite(weight))
      fail(Errc::InvalidArgument, "edge weight must be finite and >= 0");
    edges_.push_back({u, v, weight});
  }

  bool has_edge(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    return std::any_of(edges_.begin(), edges_.end(),
                       [&](const Edge& e) { return e.u == u && e.v == v; });
  }

  // Weight of edge {u,v}, or the infinity sentinel when absent.
  double edge_weight(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (u > v) std::swap(u, v);
    for (const Edge& e : edges_)
      if (e.u == u && e.v == v) return e.weight;
    return kInfiniteWeight;
  }

  bool connected() const {
    if (n_ <= 1) return true;
    detail::DisjointSets sets(n_);
    int components = n_;
    for (const Edge& e : edges_)
      if (sets.unite(e.u, e.v)) --components;
    return components == 1;
  }

  // Graphs are equal when they have the same vertex count and edge set;
  // insertion order does not matter.
  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
    auto key = [](const Edge& e) { return std::tuple(e.u, e.v, e.weight); };
    std::vector<Edge> ea = a.edges_, eb = b.edges_;
    std::sort(ea.begin(), ea.end(), [&](const Edge& x, const Edge& y) { return key(x) < key(y); });
    std::sort(eb.begin(), eb.end(), [&](const Edge& x, const Edge& y) { return key(x) < key(y); });
    return ea == eb;
  }

 private:
  void check_vertex(VertexId v) const {
    if (v < 1 || v > n_)
      fail(Errc::BadVertexId,
           "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }

  int n_ = 0;
  std::vector<Edge> edges_;
};

// Symmetric n x n matrix of extended weights. Absent edges and the whole
// diagonal hold the infinity sentinel.
class WeightMatrix {
 public:
  WeightMatrix() = default;

  explicit WeightMatrix(int n) : n_(n) {
    if (n < 0) fail(Errc::InvalidArgument, "matrix dimension must be >= 0");
    cells_.assign(static_cast<size_t>(n) * n, kInfiniteWeight);
  }

  // Builds a matrix from raw row-major cells without enforcing symmetry, so
  // that malformed input can be represented and then rejected by
  // graph_from_weight_matrix. Cells must still be inf or finite nonnegative.
  static WeightMatrix from_cells(int n, std::vector<double> cells) {
    if (n < 0 || cells.size() != static_cast<size_t>(n) * n)
      fail(Errc::InvalidArgument, "cell count does not match dimension");
    for (double c : cells)
      if (!(c >= 0.0) && !std::isinf(c))
        fail(Errc::InvalidArgument, "matrix cells must be inf or finite >= 0");
    WeightMatrix m;
    m.n_ = n;
    m.cells_ = std::move(cells);
    return m;
  }

  int dimension() const { return n_; }

  double at(VertexId i, VertexId j) const {
    check_index(i);
    check_index(j);
    return cells_[static_cast<size_t>(i - 1) * n_ + (j - 1)];
  }

  // Writes both (i,j) and (j,i); the diagonal is not assignable.
  void set(VertexId i, VertexId j, double weight) {
    check_index(i);
    check_index(j);
    if (i == j) fail(Errc::FiniteDiagonal, "diagonal cells stay infinite");
    if (!(weight >= 0.0) || !std::isfinite(weight))
      fail(Errc::InvalidArgument, "matrix weight must be finite and >= 0");
    cells_[static_cast<size_t>(i - 1) * n_ + (j - 1)] = weight;
    cells_[static_cast<size_t>(j - 1) * n_ + (i - 1)] = weight;
  }

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  void check_index(VertexId i) const {
    if (i < 1 || i > n_)
      fail(Errc::BadVertexId, "index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
  }

  int n_ = 0;
  std::vector<double> cells_;
};

inline WeightMatrix weight_matrix_from_graph(const WeightedGraph& g) {
  WeightMatrix c(g.vertex_count());
  for (const Edge& e : g.edges()) c.set(e.u, e.v, e.weight);
  return c;
}

inline WeightedGraph graph_from_weight_matrix(const WeightMatrix& c) {
  const int n = c.dimension();
  for (VertexId i = 1; i <= n; ++i)
    if (!std::isinf(c.at(i, i)))
      fail(Errc::FiniteDiagonal, "diagonal cell (" + std::to_string(i) + "," + std::to_string(i) +
                                     ") must be the infinity sentinel");
  for (VertexId i = 1; i <= n; ++i)
    for (VertexId j = i + 1; j <= n; ++j)
      if (c.at(i, j) != c.at(j, i))
        fail(Errc::AsymmetricMatrix,
             "cells (" + std::to_string(i) + "," + std::to_string(j) + ") and (" +
                 std::to_string(j) + "," + std::to_string(i) + ") differ");
  WeightedGraph g(n);
  for (VertexId i = 1; i <= n; ++i)
    for (VertexId j = i + 1; j <= n; ++j)
      if (std::isfinite(c.at(i, j))) g.add_edge(i, j, c.at(i, j));
  return g;
}

}  // namespace opskit
