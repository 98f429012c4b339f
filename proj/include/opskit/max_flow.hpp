#pragma once

#include <deque>
#include <string>
#include <vector>

#include "opskit/graph.hpp"

namespace opskit {

struct Arc {
  VertexId from = 0;
  VertexId to = 0;
  double capacity = 0.0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Directed capacity network. Unlike WeightedGraph, parallel arcs are allowed;
// they simply add capacity.
class FlowNetwork {
 public:
  FlowNetwork() = default;

  explicit FlowNetwork(int n) : n_(n) {
    if (n < 0) fail(Errc::InvalidArgument, "vertex count must be >= 0");
  }

  int vertex_count() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  void add_arc(VertexId from, VertexId to, double capacity) {
    check_vertex(from);
    check_vertex(to);
    if (from == to) fail(Errc::SelfLoop, "self-loop arc on vertex " + std::to_string(from));
    if (!(capacity >= 0.0) || !std::isfinite(capacity))
      fail(Errc::InvalidArgument, "arc capacity must be finite and >= 0");
    arcs_.push_back({from, to, capacity});
  }

  friend bool operator==(const FlowNetwork&, const FlowNetwork&) = default;

 private:
  void check_vertex(VertexId v) const {
    if (v < 1 || v > n_)
      fail(Errc::BadVertexId, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }

  int n_ = 0;
  std::vector<Arc> arcs_;
};

// Expands an undirected graph into the equivalent arc-pair network.
inline FlowNetwork flow_network_from_graph(const WeightedGraph& g) {
  FlowNetwork net(g.vertex_count());
  for (const Edge& e : g.edges()) {
    net.add_arc(e.u, e.v, e.weight);
    net.add_arc(e.v, e.u, e.weight);
  }
  return net;
}

struct FlowResult {
  double value = 0.0;
  std::vector<VertexId> min_cut;   // source side of a minimum cut, ascending
  double cut_capacity = 0.0;       // equals value (max-flow/min-cut certificate)
  std::vector<double> arc_flow;    // per arc, same order as FlowNetwork::arcs()
};

// Edmonds-Karp. BFS explores arcs in insertion order, so augmenting paths,
// the final flow and the returned cut are deterministic.
inline FlowResult max_flow(const FlowNetwork& net, VertexId s, VertexId t) {
  const int n = net.vertex_count();
  auto check = [&](VertexId v) {
    if (v < 1 || v > n)
      fail(Errc::BadVertexId, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
  };
  check(s);
  check(t);
  if (s == t) fail(Errc::InvalidArgument, "source and sink must differ");

  const std::vector<Arc>& arcs = net.arcs();
  const int m = static_cast<int>(arcs.size());

  // residual arcs: 2*i forward, 2*i+1 reverse
  std::vector<double> residual(2 * m, 0.0);
  std::vector<std::vector<int>> out(n + 1);
  for (int i = 0; i < m; ++i) {
    residual[2 * i] = arcs[i].capacity;
    out[arcs[i].from].push_back(2 * i);
    out[arcs[i].to].push_back(2 * i + 1);
  }
  auto head = [&](int rid) { return rid % 2 == 0 ? arcs[rid / 2].to : arcs[rid / 2].from; };

  FlowResult result;
  std::vector<int> parent_arc(n + 1);

  for (;;) {
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    parent_arc[s] = -2;
    std::deque<VertexId> queue{s};
    while (!queue.empty() && parent_arc[t] == -1) {
      const VertexId u = queue.front();
      queue.pop_front();
      for (int rid : out[u]) {
        const VertexId v = head(rid);
        if (parent_arc[v] == -1 && residual[rid] > 0.0) {
          parent_arc[v] = rid;
          queue.push_back(v);
        }
      }
    }
    if (parent_arc[t] == -1) break;

    double bottleneck = kInfiniteWeight;
    for (VertexId v = t; v != s;) {
      const int rid = parent_arc[v];
      bottleneck = std::min(bottleneck, residual[rid]);
      v = rid % 2 == 0 ? arcs[rid / 2].from : arcs[rid / 2].to;
    }
    if (!(bottleneck > 0.0)) break;
    for (VertexId v = t; v != s;) {
      const int rid = parent_arc[v];
      residual[rid] -= bottleneck;
      residual[rid ^ 1] += bottleneck;
      v = rid % 2 == 0 ? arcs[rid / 2].from : arcs[rid / 2].to;
    }
    result.value += bottleneck;
  }

  // cut = vertices reachable in the final residual network
  std::vector<bool> reachable(n + 1, false);
  reachable[s] = true;
  std::deque<VertexId> queue{s};
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (int rid : out[u]) {
      const VertexId v = head(rid);
      if (!reachable[v] && residual[rid] > 0.0) {
        reachable[v] = true;
        queue.push_back(v);
      }
    }
  }
  for (VertexId v = 1; v <= n; ++v)
    if (reachable[v]) result.min_cut.push_back(v);
  for (int i = 0; i < m; ++i)
    if (reachable[arcs[i].from] && !reachable[arcs[i].to]) result.cut_capacity += arcs[i].capacity;

  result.arc_flow.resize(m);
  for (int i = 0; i < m; ++i)
    result.arc_flow[i] = std::max(0.0, arcs[i].capacity - residual[2 * i]);
  return result;
}

}  // namespace opskit
