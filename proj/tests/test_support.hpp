#ifndef POLYCLIQUE_TEST_SUPPORT_HPP
#define POLYCLIQUE_TEST_SUPPORT_HPP

// Fixtures and brute-force oracles shared by the test binaries. The oracles
// here deliberately avoid the library's algorithms: cliques by scanning all
// vertex subsets, flows by scanning all s-t cuts.

#include <cstdint>
#include <limits>
#include <vector>

#include "polyclique/graph.hpp"
#include "polyclique/reduction.hpp"

namespace polyclique::testing {

inline Graph triangle() { return Graph::from_edge_list(3, {{1, 2}, {2, 3}, {1, 3}}); }

// Four vertices, five edges, degrees (2,3,3,2); triangles {1,2,3} and {2,3,4}.
inline Graph desk_graph() { return Graph::from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}, {1, 3}, {2, 4}}); }

inline Graph path3() { return Graph::from_edge_list(3, {{1, 2}, {2, 3}}); }

inline Graph complete(int n) { return gen_gnp(n, 1.0, 0); }

/// Largest k such that some k-subset is pairwise adjacent, by scanning all
/// 2^n vertex subsets.
inline int naive_clique_number(const Graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    int size = __builtin_popcountll(mask);
    if (size <= best) continue;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (!((mask >> a) & 1U)) continue;
      for (int b = a + 1; b < n && ok; ++b) {
        if ((mask >> b) & 1U) ok = g.adjacent(a + 1, b + 1);
      }
    }
    if (ok) best = size;
  }
  return best;
}

/// Lexicographically smallest maximum clique, by scanning all subsets.
inline std::vector<Vertex> naive_first_max_clique(const Graph& g) {
  const int n = g.vertex_count();
  const int size = naive_clique_number(g);
  std::vector<Vertex> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (__builtin_popcountll(mask) != size) continue;
    std::vector<Vertex> set;
    for (int a = 0; a < n; ++a) {
      if ((mask >> a) & 1U) set.push_back(a + 1);
    }
    bool ok = true;
    for (std::size_t i = 0; i < set.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < set.size() && ok; ++j) ok = g.adjacent(set[i], set[j]);
    }
    if (ok && (best.empty() || set < best)) best = set;
  }
  return best;
}

/// Minimum s-t cut capacity by enumerating which inner nodes sit on the
/// source side. Interdicted source arcs are given by a bitmask over edges.
inline int brute_min_cut(const LayeredNetwork& net, std::uint64_t interdicted_mask) {
  const int inner = net.node_count() - 2;  // nodes 1..inner
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < net.source_arcs.size(); ++i) {
    if ((interdicted_mask >> i) & 1U) continue;
    arcs.push_back(net.source_arcs[i]);
    arcs.push_back(net.middle_arcs[i][0]);
    arcs.push_back(net.middle_arcs[i][1]);
  }
  for (const Arc& a : net.sink_arcs) arcs.push_back(a);

  int best = std::numeric_limits<int>::max();
  for (std::uint64_t side = 0; side < (std::uint64_t{1} << inner); ++side) {
    auto on_source_side = [&](NodeId x) {
      if (x == net.source) return true;
      if (x == net.sink) return false;
      return ((side >> (x - 1)) & 1U) != 0;
    };
    int cut = 0;
    for (const Arc& a : arcs) {
      if (on_source_side(a.from) && !on_source_side(a.to)) cut += a.capacity;
    }
    best = std::min(best, cut);
  }
  return best;
}

}  // namespace polyclique::testing

#endif  // POLYCLIQUE_TEST_SUPPORT_HPP
