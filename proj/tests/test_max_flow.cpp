#include <catch2/catch_amalgamated.hpp>

#include "opskit/fixtures.hpp"
#include "opskit/io/graph_io.hpp"
#include "opskit/max_flow.hpp"
#include "support/catch_helpers.hpp"
#include "support/oracles.hpp"

using namespace opskit;

TEST_CASE("max flow on tiny networks") {
  SECTION("parallel arcs add up") {
    FlowNetwork net(2);
    net.add_arc(1, 2, 3);
    net.add_arc(1, 2, 4);
    const FlowResult r = max_flow(net, 1, 2);
    REQUIRE(r.value == 7.0);
    REQUIRE(r.cut_capacity == 7.0);
    REQUIRE(r.min_cut == std::vector<VertexId>{1});
  }
  SECTION("bottleneck on a chain") {
    FlowNetwork net(3);
    net.add_arc(1, 2, 5);
    net.add_arc(2, 3, 2);
    const FlowResult r = max_flow(net, 1, 3);
    REQUIRE(r.value == 2.0);
    REQUIRE(r.cut_capacity == 2.0);
    REQUIRE(r.min_cut == std::vector<VertexId>{1, 2});
  }
  SECTION("unreachable sink gives zero flow") {
    FlowNetwork net(3);
    net.add_arc(1, 2, 5);
    const FlowResult r = max_flow(net, 1, 3);
    REQUIRE(r.value == 0.0);
    REQUIRE(r.cut_capacity == 0.0);
  }
  SECTION("argument validation") {
    FlowNetwork net(3);
    REQUIRE(error_code_of([&] { max_flow(net, 2, 2); }) == Errc::InvalidArgument);
    REQUIRE(error_code_of([&] { max_flow(net, 0, 2); }) == Errc::BadVertexId);
    REQUIRE(error_code_of([&] { net.add_arc(1, 1, 2); }) == Errc::SelfLoop);
    REQUIRE(error_code_of([&] { net.add_arc(1, 2, -1); }) == Errc::InvalidArgument);
  }
}

TEST_CASE("undirected expansion carries edge capacity both ways") {
  const WeightedGraph g = io::parse_graph_file(fixtures::kFig1Graph);
  const FlowNetwork net = flow_network_from_graph(g);
  REQUIRE(net.arcs().size() == 30);
  const FlowResult forward = max_flow(net, 1, 8);
  const FlowResult backward = max_flow(net, 8, 1);
  REQUIRE(forward.value == forward.cut_capacity);
  REQUIRE(forward.value == oracles::brute_min_cut(net, 1, 8));
  REQUIRE(backward.value == forward.value);  // undirected symmetry
}

TEST_CASE("flow value equals the exhaustive minimum cut and respects conservation") {
  std::mt19937 rng(271828);
  for (int trial = 0; trial < 150; ++trial) {
    const FlowNetwork net = oracles::random_network(rng, 2, 6);
    const int n = net.vertex_count();
    std::uniform_int_distribution<int> pick(1, n);
    int s = pick(rng), t = pick(rng);
    if (s == t) t = (t % n) + 1;
    if (s == t) continue;  // n == 1 cannot happen (min_n == 2)

    const FlowResult r = max_flow(net, s, t);
    REQUIRE(r.value == r.cut_capacity);
    REQUIRE(r.value == oracles::brute_min_cut(net, s, t));

    // arc flows are feasible and conserve at interior vertices
    std::vector<double> balance(n + 1, 0.0);
    for (size_t i = 0; i < net.arcs().size(); ++i) {
      const Arc& a = net.arcs()[i];
      REQUIRE(r.arc_flow[i] >= 0.0);
      REQUIRE(r.arc_flow[i] <= a.capacity);
      balance[a.from] -= r.arc_flow[i];
      balance[a.to] += r.arc_flow[i];
    }
    for (int v = 1; v <= n; ++v) {
      if (v == s || v == t) continue;
      REQUIRE(balance[v] == 0.0);
    }
    REQUIRE(balance[t] == r.value);
    REQUIRE(balance[s] == -r.value);
  }
}
