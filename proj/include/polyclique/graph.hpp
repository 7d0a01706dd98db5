#ifndef POLYCLIQUE_GRAPH_HPP
#define POLYCLIQUE_GRAPH_HPP

// Simple undirected graphs with a stable edge order.
//
// Vertices are 1-based. Edges are stored normalized (u < v) in the order
// they were supplied; that order is the tie-break source for every ordered
// structure built on top of a graph (network arcs, greedy pair sets,
// interdiction witnesses).

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "polyclique/error.hpp"

namespace polyclique {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;

  /// Builds a graph on vertices 1..n. Pairs are normalized to u < v and keep
  /// their input order. Throws SelfLoop, OutOfRange or DuplicateEdge.
  static Graph from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> pairs) {
    if (n < 0) throw Error(ErrorKind::OutOfRange, "negative vertex count");
    Graph g;
    g.n_ = n;
    g.neighbors_.assign(static_cast<std::size_t>(n) + 1, {});
    g.edges_.reserve(pairs.size());
    for (auto [a, b] : pairs) {
      if (a == b) throw Error(ErrorKind::SelfLoop, "vertex " + std::to_string(a));
      for (Vertex x : {a, b}) {
        if (x < 1 || x > n) {
          throw Error(ErrorKind::OutOfRange,
                      "vertex " + std::to_string(x) + " not in 1.." + std::to_string(n));
        }
      }
      Edge e{std::min(a, b), std::max(a, b)};
      auto& nu = g.neighbors_[static_cast<std::size_t>(e.u)];
      auto pos = std::lower_bound(nu.begin(), nu.end(), e.v);
      if (pos != nu.end() && *pos == e.v) {
        throw Error(ErrorKind::DuplicateEdge,
                    "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
      }
      nu.insert(pos, e.v);
      auto& nv = g.neighbors_[static_cast<std::size_t>(e.v)];
      nv.insert(std::lower_bound(nv.begin(), nv.end(), e.u), e.u);
      g.edges_.push_back(e);
    }
    return g;
  }

  static Graph from_edge_list(int n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
  }

  static Graph from_edge_list(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(pairs));
  }

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  /// Sorted neighbor list of v.
  std::span<const Vertex> neighbors(Vertex v) const {
    return neighbors_.at(static_cast<std::size_t>(v));
  }

  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool adjacent(Vertex a, Vertex b) const {
    if (a < 1 || a > n_ || b < 1 || b > n_) return false;
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  friend bool operator==(const Graph& x, const Graph& y) {
    return x.n_ == y.n_ && x.edges_ == y.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> neighbors_{1};
};

/// Degree of every vertex; index 0 is vertex 1.
inline std::vector<int> degrees(const Graph& g) {
  std::vector<int> out(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Edge& e : g.edges()) {
    ++out[static_cast<std::size_t>(e.u - 1)];
    ++out[static_cast<std::size_t>(e.v - 1)];
  }
  return out;
}

// ---------------------------------------------------------------------------
// DIMACS clq text

namespace detail {

inline bool parse_int_token(std::istringstream& in, long long& out) {
  std::string tok;
  if (!(in >> tok)) return false;
  std::size_t used = 0;
  try {
    out = std::stoll(tok, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == tok.size();
}

inline Error malformed(std::size_t lineno, const std::string& why) {
  return Error(ErrorKind::MalformedLine, "line " + std::to_string(lineno) + ": " + why);
}

}  // namespace detail

/// Reads "c" comments, one "p edge n m" line, then m "e u v" lines.
inline Graph parse_dimacs(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_header) throw detail::malformed(lineno, "second problem line");
      std::string format;
      if (!(ls >> format) || (format != "edge" && format != "col")) {
        throw detail::malformed(lineno, "expected 'p edge n m'");
      }
      if (!detail::parse_int_token(ls, n) || !detail::parse_int_token(ls, m) || n < 0 || m < 0 ||
          n > 1'000'000) {
        throw detail::malformed(lineno, "bad problem counts");
      }
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) throw Error(ErrorKind::MissingProblemLine, "edge before 'p' line");
      long long u = 0;
      long long v = 0;
      if (!detail::parse_int_token(ls, u) || !detail::parse_int_token(ls, v)) {
        throw detail::malformed(lineno, "expected 'e u v'");
      }
      std::string extra;
      if (ls >> extra) throw detail::malformed(lineno, "trailing tokens");
      if (u < 0 || v < 0 || u > n || v > n) {
        throw Error(ErrorKind::OutOfRange, "line " + std::to_string(lineno) + ": vertex outside 1.." +
                                               std::to_string(n));
      }
      pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } else {
      throw detail::malformed(lineno, "unknown line tag '" + tag + "'");
    }
  }
  if (!have_header) throw Error(ErrorKind::MissingProblemLine, "no 'p edge n m' line");
  if (static_cast<long long>(pairs.size()) != m) {
    throw Error(ErrorKind::EdgeCountMismatch,
                "declared " + std::to_string(m) + ", found " + std::to_string(pairs.size()));
  }
  return Graph::from_edge_list(static_cast<int>(n), pairs);
}

inline Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

inline std::string write_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON form: {"n": int, "edges": [[u,v],...]}

inline nlohmann::ordered_json to_json(const Graph& g) {
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const nlohmann::ordered_json& j) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& e : j.at("edges")) pairs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return Graph::from_edge_list(j.at("n").get<int>(), pairs);
}

// ---------------------------------------------------------------------------
// Seeded generators
//
// Randomness comes from std::mt19937_64, whose output sequence is fixed by
// the standard. Library distributions are avoided because their algorithms
// are implementation-defined; the conversions below are spelled out so that
// a given seed yields the same graph on every platform.

namespace detail {

// 53 high bits mapped onto [0, 1).
inline double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by rejection of the biased tail.
inline std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

inline void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::InvalidProbability, "p=" + std::to_string(p));
  }
}

}  // namespace detail

/// Erdos-Renyi G(n, p). Pairs are visited in lexicographic order with one
/// draw each, so edges come out lexicographically sorted.
inline Graph gen_gnp(int n, double p, std::uint64_t seed) {
  detail::check_probability(p);
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (detail::unit_draw(rng) < p) pairs.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, pairs);
}

struct PlantedGraph {
  Graph graph;
  std::vector<Vertex> clique;  // sorted
};

/// G(n, p) with k seeded vertices forced pairwise adjacent. The clique members
/// are chosen first by a partial Fisher-Yates shuffle; then every pair in
/// lexicographic order consumes one draw.
inline PlantedGraph plant_clique(int n, int k, double p, std::uint64_t seed) {
  if (k < 2 || k > n) {
    throw Error(ErrorKind::InvalidK, "k=" + std::to_string(k) + " with n=" + std::to_string(n));
  }
  detail::check_probability(p);
  std::mt19937_64 rng(seed);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
    auto j = i + static_cast<std::size_t>(detail::bounded_draw(rng, order.size() - i));
    std::swap(order[i], order[j]);
  }
  std::vector<Vertex> members(order.begin(), order.begin() + k);
  std::sort(members.begin(), members.end());
  std::vector<bool> planted(static_cast<std::size_t>(n) + 1, false);
  for (Vertex v : members) planted[static_cast<std::size_t>(v)] = true;

  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      bool draw = detail::unit_draw(rng) < p;
      if (draw || (planted[static_cast<std::size_t>(u)] && planted[static_cast<std::size_t>(v)])) {
        pairs.emplace_back(u, v);
      }
    }
  }
  return {Graph::from_edge_list(n, pairs), std::move(members)};
}

inline Graph gen_planted_clique(int n, int k, double p, std::uint64_t seed) {
  return plant_clique(n, k, p, seed).graph;
}

/// The labeled graph on n vertices whose edge set is given by the bits of
/// mask over the lexicographic pair order (bit 0 is (1,2)).
inline Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  int bit = 0;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v, ++bit) {
      if ((mask >> bit) & 1U) pairs.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, pairs);
}

}  // namespace polyclique

#endif  // POLYCLIQUE_GRAPH_HPP
