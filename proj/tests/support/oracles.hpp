#pragma once

// Brute-force reference implementations, deliberately written with different
// algorithms than the library paths they check.

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "opskit/graph.hpp"
#include "opskit/knapsack.hpp"
#include "opskit/max_flow.hpp"

namespace oracles {

// Minimum spanning tree weight by scanning every edge-subset bitmask.
// Requires edge_count <= 20.
inline std::optional<double> brute_mst_weight(const opskit::WeightedGraph& g) {
  const int n = g.vertex_count();
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::optional<double> best;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != n - 1) continue;
    opskit::detail::DisjointSets sets(n);
    int joins = 0;
    double weight = 0.0;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) {
        if (sets.unite(edges[i].u, edges[i].v)) ++joins;
        weight += edges[i].weight;
      }
    if (joins == n - 1 && (!best || weight < *best)) best = weight;
  }
  if (n <= 1) best = 0.0;
  return best;
}

// Cheapest simple path via exhaustive DFS.
inline std::optional<double> brute_shortest_distance(const opskit::WeightedGraph& g,
                                                     int s, int t) {
  if (s == t) return 0.0;
  const int n = g.vertex_count();
  const opskit::WeightMatrix c = opskit::weight_matrix_from_graph(g);
  std::optional<double> best;
  std::vector<bool> seen(n + 1, false);
  seen[s] = true;
  auto dfs = [&](auto&& self, int u, double dist) -> void {
    if (u == t) {
      if (!best || dist < *best) best = dist;
      return;
    }
    for (int v = 1; v <= n; ++v)
      if (!seen[v] && std::isfinite(c.at(u, v))) {
        seen[v] = true;
        self(self, v, dist + c.at(u, v));
        seen[v] = false;
      }
  };
  dfs(dfs, s, 0.0);
  return best;
}

// Minimum cut capacity over every s-side subset; by strong duality this is
// the exact max-flow value. Requires n <= 20.
inline double brute_min_cut(const opskit::FlowNetwork& net, int s, int t) {
  const int n = net.vertex_count();
  double best = opskit::kInfiniteWeight;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const auto in_cut = [&](int v) { return (mask >> (v - 1)) & 1u; };
    if (!in_cut(s) || in_cut(t)) continue;
    double capacity = 0.0;
    for (const opskit::Arc& a : net.arcs())
      if (in_cut(a.from) && !in_cut(a.to)) capacity += a.capacity;
    best = std::min(best, capacity);
  }
  return best;
}

// Exhaustive 0/1 knapsack over item subsets. Requires <= 20 items.
inline double brute_knapsack_value(const std::vector<opskit::KnapsackItem>& items,
                                   int capacity) {
  const int k = static_cast<int>(items.size());
  double best = 0.0;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    long long weight = 0;
    double value = 0.0;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) {
        weight += items[i].weight;
        value += items[i].value;
      }
    if (weight <= capacity) best = std::max(best, value);
  }
  return best;
}

// Random connected graph: a random spanning tree plus random extra edges.
// Integer weights in [1, weight_max]; edge count stays brute-force friendly.
inline opskit::WeightedGraph random_connected_graph(std::mt19937& rng, int min_n, int max_n,
                                                    int max_extra_edges = 8,
                                                    int weight_max = 9) {
  const int n = std::uniform_int_distribution<int>(min_n, max_n)(rng);
  opskit::WeightedGraph g(n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<int> weight(1, weight_max);
  for (int i = 1; i < n; ++i) {
    const int j = std::uniform_int_distribution<int>(0, i - 1)(rng);
    g.add_edge(order[i], order[j], weight(rng));
  }
  if (n >= 2) {
    const int extras = std::uniform_int_distribution<int>(0, max_extra_edges)(rng);
    std::uniform_int_distribution<int> pick(1, n);
    for (int e = 0; e < extras; ++e) {
      const int u = pick(rng), v = pick(rng);
      if (u != v && !g.has_edge(u, v)) g.add_edge(u, v, weight(rng));
    }
  }
  return g;
}

// Random graph that may be disconnected.
inline opskit::WeightedGraph random_graph(std::mt19937& rng, int min_n, int max_n,
                                          double edge_probability = 0.3,
                                          int weight_max = 9) {
  const int n = std::uniform_int_distribution<int>(min_n, max_n)(rng);
  opskit::WeightedGraph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> weight(1, weight_max);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng) < edge_probability) g.add_edge(u, v, weight(rng));
  return g;
}

inline opskit::FlowNetwork random_network(std::mt19937& rng, int min_n, int max_n,
                                          double arc_probability = 0.4, int cap_max = 9) {
  const int n = std::uniform_int_distribution<int>(min_n, max_n)(rng);
  opskit::FlowNetwork net(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> cap(0, cap_max);
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      if (u != v && coin(rng) < arc_probability) net.add_arc(u, v, cap(rng));
  return net;
}

// Random permutation rank rows (every row a permutation of 1..n).
inline std::vector<std::vector<int>> random_rank_rows(std::mt19937& rng, int m, int n) {
  std::vector<std::vector<int>> rows(m);
  for (auto& row : rows) {
    row.resize(n);
    std::iota(row.begin(), row.end(), 1);
    std::shuffle(row.begin(), row.end(), rng);
  }
  return rows;
}

}  // namespace oracles
