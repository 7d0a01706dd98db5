#include <gtest/gtest.h>

#include <algorithm>

#include "polyclique/flow.hpp"
#include "polyclique/reduction.hpp"
#include "test_support.hpp"

namespace polyclique {
namespace {

using testing::brute_min_cut;
using testing::desk_graph;
using testing::triangle;

void expect_structure(const Graph& g, const LayeredNetwork& net) {
  const auto m = static_cast<std::size_t>(g.edge_count());
  const auto n = static_cast<std::size_t>(g.vertex_count());
  ASSERT_EQ(net.source_arcs.size(), m);
  ASSERT_EQ(net.middle_arcs.size(), m);
  ASSERT_EQ(net.sink_arcs.size(), n);
  for (std::size_t i = 0; i < m; ++i) {
    const Edge& e = g.edge(i);
    EXPECT_EQ(net.source_arcs[i], (Arc{net.source, net.edge_nodes[i], 2}));
    EXPECT_EQ(net.middle_arcs[i][0], (Arc{net.edge_nodes[i], net.vertex_nodes[static_cast<std::size_t>(e.u - 1)], 1}));
    EXPECT_EQ(net.middle_arcs[i][1], (Arc{net.edge_nodes[i], net.vertex_nodes[static_cast<std::size_t>(e.v - 1)], 1}));
  }
  for (std::size_t v = 0; v < n; ++v) EXPECT_EQ(net.sink_arcs[v], (Arc{net.vertex_nodes[v], net.sink, 1}));
}

TEST(ReductionTest, TriangleCounts) {
  LayeredNetwork net = build_network(triangle());
  EXPECT_EQ(net.node_count(), 8);
  EXPECT_EQ(net.arc_count(), 12);
  expect_structure(triangle(), net);
}

TEST(ReductionTest, SingleEdgeCounts) {
  Graph g = Graph::from_edge_list(2, {{1, 2}});
  LayeredNetwork net = build_network(g);
  EXPECT_EQ(net.node_count(), 5);
  EXPECT_EQ(net.arc_count(), 5);
  expect_structure(g, net);
}

TEST(ReductionTest, DeskGraphFirstEdgeNodeFeedsVerticesOneAndTwo) {
  LayeredNetwork net = build_network(desk_graph());
  EXPECT_EQ(net.vertex_of(net.middle_arcs[0][0].to), 1);
  EXPECT_EQ(net.vertex_of(net.middle_arcs[0][1].to), 2);
}

TEST(ReductionTest, Budget) {
  EXPECT_EQ(interdiction_budget(5, 3), 2);
  EXPECT_EQ(interdiction_budget(3, 3), 0);
  EXPECT_EQ(interdiction_budget(4, 4), -2);
  EXPECT_EQ(interdiction_budget(0, 0), 0);
}

TEST(ReductionPropertyTest, StructureAndRoundTrip) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Graph g = gen_gnp(1 + static_cast<int>(seed % 50), 0.3, seed);
    LayeredNetwork net = build_network(g);
    expect_structure(g, net);
    EXPECT_EQ(graph_of(net), g);
  }
}

TEST(ReductionTest, JsonDump) {
  auto j = to_json(build_network(triangle()));
  EXPECT_EQ(j["layers"]["source"], 0);
  EXPECT_EQ(j["layers"]["sink"], 7);
  EXPECT_EQ(j["arcs"].size(), 12U);
  EXPECT_EQ(j["arcs"][0].dump(), R"({"from":0,"to":1,"cap":2})");
}

TEST(FlowTest, TriangleExamples) {
  LayeredNetwork net = build_network(triangle());
  EXPECT_EQ(max_flow(net), 3);
  EXPECT_EQ(max_flow(net, {0, 1, 2}), 0);
}

TEST(FlowTest, DeskGraphWithTriangleLeft) {
  // Edges (1,2) and (1,3) sit at indices 0 and 3.
  EXPECT_EQ(max_flow(build_network(desk_graph()), {0, 3}), 3);
}

TEST(FlowTest, InvalidIndex) {
  try {
    max_flow(build_network(triangle()), {3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArcIndex);
  }
}

TEST(FlowTest, IsolatedVertexCarriesNoFlow) {
  Graph g = Graph::from_edge_list(3, {{1, 2}});
  EXPECT_EQ(max_flow(build_network(g)), 2);
}

TEST(FlowPropertyTest, MatchesBruteForceMinCut) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = gen_gnp(3 + static_cast<int>(seed % 4), 0.5, seed);
    if (g.edge_count() > 8) continue;
    LayeredNetwork net = build_network(g);
    const std::uint64_t masks = std::uint64_t{1} << g.edge_count();
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      std::vector<std::size_t> cut;
      for (std::size_t i = 0; i < static_cast<std::size_t>(g.edge_count()); ++i) {
        if ((mask >> i) & 1U) cut.push_back(i);
      }
      ASSERT_EQ(max_flow(net, InterdictionSet(cut)), brute_min_cut(net, mask)) << "seed " << seed << " mask " << mask;
    }
  }
}

TEST(FlowPropertyTest, MonotoneAndBounded) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = gen_gnp(2 + static_cast<int>(seed % 20), 0.3, seed + 1000);
    LayeredNetwork net = build_network(g);
    std::vector<std::size_t> cut;
    int previous = max_flow(net, {});
    EXPECT_LE(previous, g.vertex_count());
    // Grow the interdiction set one arc at a time in a scrambled order.
    for (std::size_t step = 0; step < static_cast<std::size_t>(g.edge_count()); ++step) {
      cut.push_back((step * 7 + seed) % static_cast<std::size_t>(g.edge_count()));
      InterdictionSet set(cut);
      int f = max_flow(net, set);
      EXPECT_LE(f, previous);
      EXPECT_LE(f, g.vertex_count());
      EXPECT_LE(f, 2 * (g.edge_count() - static_cast<int>(set.size())));
      previous = f;
    }
  }
}

TEST(FlowPropertyTest, NoIsolatedVertexMeansFullFlow) {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 50; ++seed) {
    Graph g = gen_gnp(2 + static_cast<int>(seed % 30), 0.4, seed);
    auto d = degrees(g);
    if (std::find(d.begin(), d.end(), 0) != d.end()) continue;
    EXPECT_EQ(max_flow(build_network(g)), g.vertex_count());
    ++checked;
  }
}

}  // namespace
}  // namespace polyclique
