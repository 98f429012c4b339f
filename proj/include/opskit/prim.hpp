#pragma once

#include <string>
#include <utility>
#include <vector>

#include "opskit/graph.hpp"

namespace opskit {

struct MstResult {
  // Discovery order. For prim_mst each edge is oriented (tree vertex, added
  // vertex); kruskal_mst keeps the normalized u < v orientation.
  std::vector<Edge> edges;
  double total_weight = 0.0;
};

// Working arrays of the tree-growing loop, observable per iteration.
struct PrimState {
  std::vector<Edge> tree;           // tree.back() is the edge just added
  std::vector<VertexId> remaining;  // vertices not yet spanned, ascending
  std::vector<VertexId> near;       // near[v]: nearest tree vertex (index 0 unused)
  std::vector<double> d;            // d[v]: cheapest connection weight into the tree
  VertexId start = 1;
};

// Grows a minimum spanning tree from `start`. Both loops scan vertices in
// ascending index order with strict comparisons, so the selection picks the
// lowest-index vertex among the minima and a label update never replaces an
// equally cheap earlier `near` assignment. Edge discovery order is therefore
// fully deterministic.
template <class OnIteration>
MstResult prim_mst(const WeightedGraph& g, VertexId start, OnIteration&& on_iteration) {
  const int n = g.vertex_count();
  if (start < 1 || start > n)
    fail(Errc::BadVertexId, "start vertex " + std::to_string(start) + " outside 1.." + std::to_string(n));
  const WeightMatrix c = weight_matrix_from_graph(g);

  PrimState st;
  st.start = start;
  st.near.assign(n + 1, start);
  st.d.assign(n + 1, kInfiniteWeight);
  for (VertexId v = 1; v <= n; ++v) st.d[v] = c.at(v, start);
  st.remaining.reserve(n);
  for (VertexId v = 1; v <= n; ++v)
    if (v != start) st.remaining.push_back(v);

  auto in_remaining = [&st](VertexId v) {
    return std::binary_search(st.remaining.begin(), st.remaining.end(), v);
  };

  for (int i = 1; i < n; ++i) {
    double dmin = kInfiniteWeight;
    VertexId v = 0;
    for (VertexId j = 1; j <= n; ++j)
      if (st.d[j] < dmin && in_remaining(j)) {
        v = j;
        dmin = st.d[j];
      }
    if (v == 0)
      fail(Errc::DisconnectedGraph,
           "no finite connection after " + std::to_string(st.tree.size()) +
               " edges; the graph is disconnected");
    st.tree.push_back({st.near[v], v, dmin});
    st.remaining.erase(std::lower_bound(st.remaining.begin(), st.remaining.end(), v));
    for (VertexId u = 1; u <= n; ++u)
      if (st.d[u] > c.at(u, v) && in_remaining(u)) {
        st.near[u] = v;
        st.d[u] = c.at(u, v);
      }
    on_iteration(static_cast<const PrimState&>(st));
  }

  MstResult result;
  result.edges = std::move(st.tree);
  for (const Edge& e : result.edges) result.total_weight += e.weight;
  return result;
}

inline MstResult prim_mst(const WeightedGraph& g, VertexId start = 1) {
  return prim_mst(g, start, [](const PrimState&) {});
}

}  // namespace opskit
