#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "opskit/graph.hpp"

namespace opskit {

struct PathResult {
  std::vector<VertexId> path;  // s .. t inclusive
  double distance = 0.0;
};

// Dijkstra over the weight matrix (weights are nonnegative). The next vertex
// is the lowest-index unvisited minimum, and among equal-length routes the
// lowest predecessor index wins, so the returned path is deterministic.
inline PathResult shortest_path(const WeightedGraph& g, VertexId s, VertexId t) {
  const int n = g.vertex_count();
  auto check = [&](VertexId v) {
    if (v < 1 || v > n)
      fail(Errc::BadVertexId, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
  };
  check(s);
  check(t);
  if (s == t) return {{s}, 0.0};

  const WeightMatrix c = weight_matrix_from_graph(g);
  std::vector<double> dist(n + 1, kInfiniteWeight);
  std::vector<VertexId> pred(n + 1, 0);
  std::vector<bool> visited(n + 1, false);
  dist[s] = 0.0;

  for (int step = 0; step < n; ++step) {
    VertexId u = 0;
    double best = kInfiniteWeight;
    for (VertexId j = 1; j <= n; ++j)
      if (!visited[j] && dist[j] < best) {
        u = j;
        best = dist[j];
      }
    if (u == 0) break;  // remaining vertices unreachable
    visited[u] = true;
    if (u == t) break;
    for (VertexId v = 1; v <= n; ++v) {
      if (visited[v]) continue;
      const double w = c.at(u, v);
      if (!std::isfinite(w)) continue;
      const double candidate = dist[u] + w;
      if (candidate < dist[v]) {
        dist[v] = candidate;
        pred[v] = u;
      } else if (candidate == dist[v] && u < pred[v]) {
        pred[v] = u;
      }
    }
  }

  if (!std::isfinite(dist[t]))
    fail(Errc::Unreachable,
         "no path from " + std::to_string(s) + " to " + std::to_string(t));

  PathResult result;
  result.distance = dist[t];
  for (VertexId v = t; v != 0; v = (v == s ? 0 : pred[v])) result.path.push_back(v);
  std::reverse(result.path.begin(), result.path.end());
  return result;
}

}  // namespace opskit
