#pragma once

#include <numeric>
#include <vector>

#include "opskit/graph.hpp"
#include "opskit/prim.hpp"

namespace opskit {

// Exact minimum over all spanning trees by checking every (n-1)-subset of
// edges. Intended as a cross-check for the other MST routines; capped at
// n <= 10 to keep the subset count sane.
inline MstResult enumerate_spanning_trees_min(const WeightedGraph& g) {
  const int n = g.vertex_count();
  if (n > 10) fail(Errc::TooLarge, "spanning-tree enumeration is capped at 10 vertices");
  MstResult best;
  if (n <= 1) return best;

  const std::vector<Edge>& edges = g.edges();
  const int m = g.edge_count();
  const int k = n - 1;
  if (m < k) fail(Errc::DisconnectedGraph, "graph has no spanning tree");

  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  bool found = false;
  double best_weight = kInfiniteWeight;

  for (;;) {
    detail::DisjointSets sets(n);
    int joins = 0;
    double weight = 0.0;
    for (int idx : pick) {
      const Edge& e = edges[idx];
      if (sets.unite(e.u, e.v)) ++joins;
      weight += e.weight;
    }
    if (joins == k && weight < best_weight) {
      found = true;
      best_weight = weight;
      best.edges.clear();
      for (int idx : pick) best.edges.push_back(edges[idx]);
      best.total_weight = weight;
    }

    // next k-combination of {0..m-1} in lexicographic order
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }

  if (!found) fail(Errc::DisconnectedGraph, "graph has no spanning tree");
  return best;
}

}  // namespace opskit
