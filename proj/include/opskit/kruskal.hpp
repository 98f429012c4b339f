#pragma once

#include <algorithm>
#include <tuple>
#include <vector>

#include "opskit/graph.hpp"
#include "opskit/prim.hpp"

namespace opskit {

// Kruskal's algorithm; edges are considered in (weight, u, v) order, which
// fixes the result on weight ties.
inline MstResult kruskal_mst(const WeightedGraph& g) {
  const int n = g.vertex_count();
  MstResult result;
  if (n <= 1) return result;

  std::vector<Edge> sorted = g.edges();
  std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
    return std::tuple(a.weight, a.u, a.v) < std::tuple(b.weight, b.u, b.v);
  });

  detail::DisjointSets sets(n);
  for (const Edge& e : sorted) {
    if (sets.unite(e.u, e.v)) {
      result.edges.push_back(e);
      result.total_weight += e.weight;
      if (static_cast<int>(result.edges.size()) == n - 1) break;
    }
  }
  if (static_cast<int>(result.edges.size()) != n - 1)
    fail(Errc::DisconnectedGraph, "graph has no spanning tree");
  return result;
}

}  // namespace opskit
