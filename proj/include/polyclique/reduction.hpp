#ifndef POLYCLIQUE_REDUCTION_HPP
#define POLYCLIQUE_REDUCTION_HPP

// Four-layer capacitated network for the clique-to-interdiction reduction:
//
//   source --2--> edge node --1--> vertex node --1--> sink
//
// One edge node per graph edge (in graph edge order), one vertex node per
// graph vertex. Each edge node feeds the vertex nodes of its two endpoints.

#include <array>
#include <cstdint>
#include <vector>

#include "json.hpp"
#include "polyclique/graph.hpp"

namespace polyclique {

using NodeId = int;

struct Arc {
  NodeId from = 0;
  NodeId to = 0;
  int capacity = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

inline constexpr int kSourceArcCapacity = 2;
inline constexpr int kMiddleArcCapacity = 1;
inline constexpr int kSinkArcCapacity = 1;

struct LayeredNetwork {
  NodeId source = 0;
  NodeId sink = 0;
  std::vector<NodeId> edge_nodes;     // layer 2, indexed like graph edges
  std::vector<NodeId> vertex_nodes;   // layer 3, index v-1 for vertex v
  std::vector<Arc> source_arcs;       // source_arcs[i] feeds edge_nodes[i]
  std::vector<std::array<Arc, 2>> middle_arcs;  // [i] = arcs to both endpoints of edge i
  std::vector<Arc> sink_arcs;         // sink_arcs[v-1] drains vertex v

  int node_count() const noexcept {
    return static_cast<int>(2 + edge_nodes.size() + vertex_nodes.size());
  }
  int arc_count() const noexcept {
    return static_cast<int>(source_arcs.size() + 2 * middle_arcs.size() + sink_arcs.size());
  }
  int edge_count() const noexcept { return static_cast<int>(edge_nodes.size()); }
  int vertex_count() const noexcept { return static_cast<int>(vertex_nodes.size()); }

  /// Graph vertex (1-based) behind a layer-3 node.
  Vertex vertex_of(NodeId node) const { return node - vertex_nodes.front() + 1; }
};

/// Node numbering: source 0, edge nodes 1..|E|, vertex nodes |E|+1..|E|+|V|,
/// sink |E|+|V|+1.
inline LayeredNetwork build_network(const Graph& g) {
  const int m = g.edge_count();
  const int n = g.vertex_count();
  LayeredNetwork net;
  net.source = 0;
  net.sink = m + n + 1;
  net.edge_nodes.reserve(static_cast<std::size_t>(m));
  net.vertex_nodes.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) net.edge_nodes.push_back(1 + i);
  for (int v = 0; v < n; ++v) net.vertex_nodes.push_back(1 + m + v);

  net.source_arcs.reserve(static_cast<std::size_t>(m));
  net.middle_arcs.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const Edge& e = g.edge(static_cast<std::size_t>(i));
    const NodeId en = net.edge_nodes[static_cast<std::size_t>(i)];
    net.source_arcs.push_back({net.source, en, kSourceArcCapacity});
    net.middle_arcs.push_back({Arc{en, net.vertex_nodes[static_cast<std::size_t>(e.u - 1)], kMiddleArcCapacity},
                               Arc{en, net.vertex_nodes[static_cast<std::size_t>(e.v - 1)], kMiddleArcCapacity}});
  }
  net.sink_arcs.reserve(static_cast<std::size_t>(n));
  for (NodeId vn : net.vertex_nodes) net.sink_arcs.push_back({vn, net.sink, kSinkArcCapacity});
  return net;
}

/// Recovers the graph from the middle-arc endpoints.
inline Graph graph_of(const LayeredNetwork& net) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(net.middle_arcs.size());
  for (const auto& pair : net.middle_arcs) {
    pairs.emplace_back(net.vertex_of(pair[0].to), net.vertex_of(pair[1].to));
  }
  return Graph::from_edge_list(net.vertex_count(), pairs);
}

/// |E| - C(k, 2). Negative when a k-clique needs more edges than exist.
constexpr std::int64_t interdiction_budget(std::int64_t edge_count, std::int64_t k) {
  return edge_count - k * (k - 1) / 2;
}

inline nlohmann::ordered_json to_json(const LayeredNetwork& net) {
  using nlohmann::ordered_json;
  ordered_json arcs = ordered_json::array();
  auto push = [&arcs](const Arc& a) {
    arcs.push_back({{"from", a.from}, {"to", a.to}, {"cap", a.capacity}});
  };
  for (const Arc& a : net.source_arcs) push(a);
  for (const auto& pair : net.middle_arcs) {
    push(pair[0]);
    push(pair[1]);
  }
  for (const Arc& a : net.sink_arcs) push(a);
  return {{"layers",
           {{"source", net.source},
            {"edge_nodes", net.edge_nodes},
            {"vertex_nodes", net.vertex_nodes},
            {"sink", net.sink}}},
          {"arcs", std::move(arcs)}};
}

}  // namespace polyclique

#endif  // POLYCLIQUE_REDUCTION_HPP
