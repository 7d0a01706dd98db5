#ifndef POLYCLIQUE_FLOW_HPP
#define POLYCLIQUE_FLOW_HPP

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

#include "polyclique/error.hpp"
#include "polyclique/reduction.hpp"

namespace polyclique {

/// Set of interdicted source arcs, by edge index. Kept sorted and unique.
class InterdictionSet {
 public:
  InterdictionSet() = default;
  InterdictionSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {  // NOLINT
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  }
  InterdictionSet(std::initializer_list<std::size_t> indices)
      : InterdictionSet(std::vector<std::size_t>(indices)) {}

  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  bool contains(std::size_t i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
  }

  friend bool operator==(const InterdictionSet&, const InterdictionSet&) = default;

 private:
  std::vector<std::size_t> indices_;
};

namespace detail {

// Dinic's algorithm over an integer residual graph.
class Dinic {
 public:
  explicit Dinic(int nodes) : adj_(static_cast<std::size_t>(nodes)), level_(adj_.size()), next_(adj_.size()) {}

  void add_arc(int from, int to, int cap) {
    adj_[static_cast<std::size_t>(from)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap});
    adj_[static_cast<std::size_t>(to)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
  }

  int run(int s, int t) {
    int total = 0;
    while (build_levels(s, t)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (int pushed = augment(s, t, std::numeric_limits<int>::max())) total += pushed;
    }
    return total;
  }

 private:
  struct ResidualArc {
    int to;
    int cap;
  };

  bool build_levels(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int id : adj_[static_cast<std::size_t>(x)]) {
        const auto& a = arcs_[static_cast<std::size_t>(id)];
        if (a.cap > 0 && level_[static_cast<std::size_t>(a.to)] < 0) {
          level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(x)] + 1;
          q.push(a.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  int augment(int x, int t, int limit) {
    if (x == t) return limit;
    auto& edges = adj_[static_cast<std::size_t>(x)];
    for (int& i = next_[static_cast<std::size_t>(x)]; i < static_cast<int>(edges.size()); ++i) {
      int id = edges[static_cast<std::size_t>(i)];
      auto& a = arcs_[static_cast<std::size_t>(id)];
      if (a.cap <= 0 || level_[static_cast<std::size_t>(a.to)] != level_[static_cast<std::size_t>(x)] + 1) continue;
      if (int got = augment(a.to, t, std::min(limit, a.cap)); got > 0) {
        a.cap -= got;
        arcs_[static_cast<std::size_t>(id ^ 1)].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<ResidualArc> arcs_;
  std::vector<int> level_;
  std::vector<int> next_;
};

}  // namespace detail

/// Exact integral maximum s-t flow with the interdicted source arcs deleted.
/// Throws InvalidArcIndex for an index outside the network's source arcs.
inline int max_flow(const LayeredNetwork& net, const InterdictionSet& interdicted = {}) {
  if (!interdicted.empty() && interdicted.indices().back() >= net.source_arcs.size()) {
    throw Error(ErrorKind::InvalidArcIndex,
                "index " + std::to_string(interdicted.indices().back()) + " with " +
                    std::to_string(net.source_arcs.size()) + " source arcs");
  }
  detail::Dinic solver(net.node_count());
  for (std::size_t i = 0; i < net.source_arcs.size(); ++i) {
    if (interdicted.contains(i)) continue;
    const Arc& a = net.source_arcs[i];
    solver.add_arc(a.from, a.to, a.capacity);
    for (const Arc& m : net.middle_arcs[i]) solver.add_arc(m.from, m.to, m.capacity);
  }
  for (const Arc& a : net.sink_arcs) solver.add_arc(a.from, a.to, a.capacity);
  return solver.run(net.source, net.sink);
}

}  // namespace polyclique

#endif  // POLYCLIQUE_FLOW_HPP
