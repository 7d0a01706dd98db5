#ifndef POLYCLIQUE_ORACLES_HPP
#define POLYCLIQUE_ORACLES_HPP

// Exact ground truth for small instances: maximum clique (Bron-Kerbosch with
// pivoting), k-clique decision, and exhaustive optimal interdiction.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <limits>
#include <vector>

#include "json.hpp"
#include "polyclique/error.hpp"
#include "polyclique/flow.hpp"
#include "polyclique/graph.hpp"
#include "polyclique/reduction.hpp"

namespace polyclique {

struct CliqueWitness {
  int size = 0;
  std::vector<Vertex> vertices;  // sorted

  friend bool operator==(const CliqueWitness&, const CliqueWitness&) = default;
};

struct InterdictionOptimum {
  int min_flow = 0;
  InterdictionSet witness;
  int budget_used = 0;
};

struct WoodCheck {
  bool clique_exists = false;
  int optimal_flow = 0;
  bool claim_holds = false;
};

inline constexpr std::uint64_t kDefaultEnumerationLimit = 2'000'000;

namespace detail {

inline std::vector<Vertex> intersect(const std::vector<Vertex>& set, std::span<const Vertex> nb) {
  std::vector<Vertex> out;
  std::set_intersection(set.begin(), set.end(), nb.begin(), nb.end(), std::back_inserter(out));
  return out;
}

class BronKerbosch {
 public:
  explicit BronKerbosch(const Graph& g) : g_(g) {}

  CliqueWitness run() {
    std::vector<Vertex> all(static_cast<std::size_t>(g_.vertex_count()));
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Vertex>(i + 1);
    std::vector<Vertex> current;
    expand(current, std::move(all), {});
    std::sort(best_.begin(), best_.end());
    return {static_cast<int>(best_.size()), best_};
  }

 private:
  void expand(std::vector<Vertex>& current, std::vector<Vertex> cand, std::vector<Vertex> excluded) {
    if (cand.empty()) {
      if (excluded.empty()) offer(current);
      return;
    }
    if (current.size() + cand.size() < best_.size()) return;

    // Pivot: the vertex of cand or excluded with most neighbors in cand.
    Vertex pivot = cand.front();
    std::size_t pivot_hits = 0;
    for (const auto* pool : {&cand, &excluded}) {
      for (Vertex u : *pool) {
        std::size_t hits = intersect(cand, g_.neighbors(u)).size();
        if (hits > pivot_hits) {
          pivot = u;
          pivot_hits = hits;
        }
      }
    }
    std::vector<Vertex> branch;
    auto pn = g_.neighbors(pivot);
    std::set_difference(cand.begin(), cand.end(), pn.begin(), pn.end(), std::back_inserter(branch));

    for (Vertex v : branch) {
      auto nb = g_.neighbors(v);
      current.push_back(v);
      expand(current, intersect(cand, nb), intersect(excluded, nb));
      current.pop_back();
      cand.erase(std::lower_bound(cand.begin(), cand.end(), v));
      excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), v), v);
    }
  }

  // Maximal clique found; keep the largest, lexicographically smallest.
  void offer(const std::vector<Vertex>& clique) {
    if (clique.size() < best_.size()) return;
    std::vector<Vertex> sorted = clique;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() > best_.size() || sorted < best_) best_ = std::move(sorted);
  }

  const Graph& g_;
  std::vector<Vertex> best_;
};

inline bool extend_to(const Graph& g, int need, const std::vector<Vertex>& cand) {
  if (need == 0) return true;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (static_cast<int>(cand.size() - i) < need) return false;
    Vertex v = cand[i];
    std::vector<Vertex> later(cand.begin() + static_cast<std::ptrdiff_t>(i) + 1, cand.end());
    std::vector<Vertex> next = intersect(later, g.neighbors(v));
    if (static_cast<int>(next.size()) + 1 >= need && extend_to(g, need - 1, next)) return true;
  }
  return false;
}

// Whether C(n, r) > limit, without overflowing.
inline bool binomial_exceeds(std::uint64_t n, std::uint64_t r, std::uint64_t limit) {
  r = std::min(r, n - r);
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // acc * (n - r + i) / i is exact; C(n-r+i, i) only grows with i.
    const std::uint64_t factor = n - r + i;
    if (acc > std::numeric_limits<std::uint64_t>::max() / factor) return true;
    acc = acc * factor / i;
    if (acc > limit) return true;
  }
  return acc > limit;
}

}  // namespace detail

/// Maximum clique; ties go to the lexicographically smallest vertex set.
inline CliqueWitness max_clique_exact(const Graph& g) {
  return detail::BronKerbosch(g).run();
}

/// True iff some k vertices are pairwise adjacent.
inline bool has_clique_exact(const Graph& g, int k) {
  if (k <= 0) return true;
  if (k > g.vertex_count()) return false;
  std::vector<Vertex> all(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Vertex>(i + 1);
  return detail::extend_to(g, k, all);
}

/// Minimum residual flow over every interdiction set of size min(budget, |E|).
/// Larger sets dominate smaller ones because flow is monotone, so only the
/// largest admissible size is enumerated. Subsets are visited in
/// lexicographic order and the first optimum is the witness.
inline InterdictionOptimum exact_min_interdicted_flow(const LayeredNetwork& net, std::int64_t budget,
                                                      std::uint64_t limit = kDefaultEnumerationLimit) {
  if (budget < 0) throw Error(ErrorKind::NegativeBudget, "budget " + std::to_string(budget));
  const auto m = static_cast<std::size_t>(net.edge_count());
  const auto r = static_cast<std::size_t>(std::min<std::int64_t>(budget, static_cast<std::int64_t>(m)));
  if (detail::binomial_exceeds(m, r, limit)) {
    throw Error(ErrorKind::TooLarge, "C(" + std::to_string(m) + "," + std::to_string(r) +
                                         ") exceeds limit " + std::to_string(limit));
  }

  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  InterdictionOptimum best;
  best.min_flow = -1;
  best.budget_used = static_cast<int>(r);
  while (true) {
    InterdictionSet set(pick);
    int f = max_flow(net, set);
    if (best.min_flow < 0 || f < best.min_flow) {
      best.min_flow = f;
      best.witness = std::move(set);
      if (f == 0) break;
    }
    // Advance to the next r-combination of 0..m-1.
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == m - r + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

/// Checks the clique/interdiction equivalence on one instance: a k-clique
/// exists iff interdicting |E| - C(k,2) source arcs optimally leaves flow k.
inline WoodCheck wood_equivalence(const Graph& g, int k, std::uint64_t limit = kDefaultEnumerationLimit) {
  const std::int64_t budget = interdiction_budget(g.edge_count(), k);
  if (budget < 0) {
    throw Error(ErrorKind::NegativeBudget,
                "C(" + std::to_string(k) + ",2) exceeds |E|=" + std::to_string(g.edge_count()) +
                    "; clique impossible");
  }
  WoodCheck out;
  out.clique_exists = has_clique_exact(g, k);
  out.optimal_flow = exact_min_interdicted_flow(build_network(g), budget, limit).min_flow;
  out.claim_holds = out.clique_exists == (out.optimal_flow == k);
  return out;
}

inline nlohmann::ordered_json to_json(const CliqueWitness& w) {
  return {{"size", w.size}, {"vertices", w.vertices}};
}

inline nlohmann::ordered_json to_json(const InterdictionOptimum& o) {
  return {{"min_flow", o.min_flow}, {"witness", o.witness.indices()}, {"budget_used", o.budget_used}};
}

inline nlohmann::ordered_json to_json(const WoodCheck& w) {
  return {{"clique_exists", w.clique_exists},
          {"optimal_flow", w.optimal_flow},
          {"claim_holds", w.claim_holds}};
}

}  // namespace polyclique

#endif  // POLYCLIQUE_ORACLES_HPP
