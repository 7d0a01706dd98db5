#ifndef POLYCLIQUE_GREEDY_HPP
#define POLYCLIQUE_GREEDY_HPP

// Greedy interdiction over vertex "objects" and the Poly-Clique decision and
// maximization procedures built on it.
//
// Objects are graph vertices with static cost = degree. Adjacent pairs cost
// one less than the sum of their endpoint costs because they share the arc of
// their common edge. Each round removes the cheapest affordable pair; failing
// that, the cheapest affordable single object; failing both, it stops. The
// number of objects left is the claimed residual flow, and |T| = K is the
// claimed certificate for a K-clique. Nothing here assumes those claims are
// true; audit_trace and the oracles measure them.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "polyclique/error.hpp"
#include "polyclique/flow.hpp"
#include "polyclique/graph.hpp"
#include "polyclique/reduction.hpp"

namespace polyclique {

/// How a pair removal is charged against the budget.
///   Prose:   c_u + c_v - 1, the pair's own cost.
///   Literal: c_u + c_v, as the printed update line reads.
enum class BudgetVariant { Prose, Literal };

constexpr std::string_view to_string(BudgetVariant v) {
  return v == BudgetVariant::Prose ? "prose" : "literal";
}

inline BudgetVariant parse_variant(std::string_view s) {
  if (s == "prose") return BudgetVariant::Prose;
  if (s == "literal") return BudgetVariant::Literal;
  throw std::invalid_argument("unknown budget variant '" + std::string(s) + "'");
}

struct CostItem {
  Vertex vertex = 0;
  int cost = 0;

  friend bool operator==(const CostItem&, const CostItem&) = default;
};

struct PairItem {
  Vertex u = 0;
  Vertex v = 0;
  int cost = 0;
  std::size_t edge_index = 0;

  friend bool operator==(const PairItem&, const PairItem&) = default;
};

struct GreedyInstance {
  std::vector<CostItem> t_set;  // vertex-id order
  std::vector<PairItem> s_set;  // ascending cost, ties in edge order
  std::int64_t budget = 0;
};

enum class StepKind { Pair, Single };

struct GreedyStep {
  StepKind kind = StepKind::Single;
  std::vector<Vertex> removed;
  std::int64_t charged = 0;
  std::int64_t budget_before = 0;
  std::int64_t budget_after = 0;

  friend bool operator==(const GreedyStep&, const GreedyStep&) = default;
};

struct GreedyTrace {
  BudgetVariant variant = BudgetVariant::Prose;
  std::vector<GreedyStep> steps;
  std::vector<CostItem> final_t;
  std::int64_t final_budget = 0;

  friend bool operator==(const GreedyTrace&, const GreedyTrace&) = default;
};

struct GreedyResult {
  int final_t_size = 0;
  GreedyTrace trace;
};

struct DecisionOutcome {
  int k = 0;
  bool claimed = false;
  int final_t_size = 0;
  std::int64_t initial_budget = 0;
  GreedyTrace trace;
  bool short_circuited = false;
};

struct MaximizeResult {
  int claimed_size = 0;
  std::vector<DecisionOutcome> per_k;
};

struct TraceAudit {
  std::vector<Vertex> removed;  // sorted
  std::int64_t charged_total = 0;
  int true_arc_count = 0;
  int actual_flow = 0;
};

/// Instance with an explicit budget. Costs are degrees at build time.
inline GreedyInstance make_instance(const Graph& g, std::int64_t budget) {
  GreedyInstance inst;
  inst.budget = budget;
  const std::vector<int> deg = degrees(g);
  inst.t_set.reserve(deg.size());
  for (std::size_t i = 0; i < deg.size(); ++i) {
    inst.t_set.push_back({static_cast<Vertex>(i + 1), deg[i]});
  }
  inst.s_set.reserve(static_cast<std::size_t>(g.edge_count()));
  for (std::size_t i = 0; i < static_cast<std::size_t>(g.edge_count()); ++i) {
    const Edge& e = g.edge(i);
    inst.s_set.push_back({e.u, e.v, deg[static_cast<std::size_t>(e.u - 1)] + deg[static_cast<std::size_t>(e.v - 1)] - 1, i});
  }
  std::stable_sort(inst.s_set.begin(), inst.s_set.end(),
                   [](const PairItem& a, const PairItem& b) { return a.cost < b.cost; });
  return inst;
}

/// Instance for the K-clique question: budget |E| - C(K,2). Requires 2 <= K <= n.
inline GreedyInstance build_instance(const Graph& g, int k) {
  if (k < 2 || k > g.vertex_count()) {
    throw Error(ErrorKind::KOutOfRange, "K=" + std::to_string(k) + " with n=" + std::to_string(g.vertex_count()));
  }
  return make_instance(g, interdiction_budget(g.edge_count(), k));
}

/// Runs the greedy to termination. Minimum selection takes the first
/// occurrence in stored order. A pair removal purges every pair touching
/// either endpoint; a single removal purges that object's pairs.
inline GreedyResult greedy_run(const GreedyInstance& inst, BudgetVariant variant) {
  Vertex max_vertex = 0;
  for (const CostItem& c : inst.t_set) max_vertex = std::max(max_vertex, c.vertex);
  const auto slots = static_cast<std::size_t>(max_vertex) + 1;

  std::vector<bool> in_t(slots, false);
  for (const CostItem& c : inst.t_set) in_t[static_cast<std::size_t>(c.vertex)] = true;
  std::vector<bool> pair_alive(inst.s_set.size(), true);
  std::vector<std::vector<std::size_t>> pairs_of(slots);
  for (std::size_t i = 0; i < inst.s_set.size(); ++i) {
    pairs_of[static_cast<std::size_t>(inst.s_set[i].u)].push_back(i);
    pairs_of[static_cast<std::size_t>(inst.s_set[i].v)].push_back(i);
  }

  auto remove_object = [&](Vertex x) {
    in_t[static_cast<std::size_t>(x)] = false;
    for (std::size_t p : pairs_of[static_cast<std::size_t>(x)]) pair_alive[p] = false;
  };

  GreedyTrace trace;
  trace.variant = variant;
  std::int64_t budget = inst.budget;
  std::size_t cursor = 0;  // S is sorted and only shrinks, so its minimum only moves forward

  while (true) {
    while (cursor < inst.s_set.size() && !pair_alive[cursor]) ++cursor;

    if (cursor < inst.s_set.size() && inst.s_set[cursor].cost <= budget) {
      const PairItem& p = inst.s_set[cursor];
      GreedyStep step;
      step.kind = StepKind::Pair;
      step.removed = {p.u, p.v};
      step.charged = variant == BudgetVariant::Prose ? p.cost : std::int64_t{p.cost} + 1;
      step.budget_before = budget;
      budget -= step.charged;
      step.budget_after = budget;
      remove_object(p.u);
      remove_object(p.v);
      trace.steps.push_back(std::move(step));
      continue;
    }

    const CostItem* cheapest = nullptr;
    for (const CostItem& c : inst.t_set) {
      if (in_t[static_cast<std::size_t>(c.vertex)] && (cheapest == nullptr || c.cost < cheapest->cost)) {
        cheapest = &c;
      }
    }
    if (cheapest != nullptr && cheapest->cost <= budget) {
      GreedyStep step;
      step.kind = StepKind::Single;
      step.removed = {cheapest->vertex};
      step.charged = cheapest->cost;
      step.budget_before = budget;
      budget -= step.charged;
      step.budget_after = budget;
      remove_object(cheapest->vertex);
      trace.steps.push_back(std::move(step));
      continue;
    }
    break;
  }

  for (const CostItem& c : inst.t_set) {
    if (in_t[static_cast<std::size_t>(c.vertex)]) trace.final_t.push_back(c);
  }
  trace.final_budget = budget;
  return {static_cast<int>(trace.final_t.size()), std::move(trace)};
}

/// Poly-Clique decision for one K. When C(K,2) > |E| the answer is "no"
/// without running the greedy, and the outcome is marked short-circuited.
inline DecisionOutcome decide(const Graph& g, int k, BudgetVariant variant = BudgetVariant::Prose) {
  if (k < 2 || k > g.vertex_count()) {
    throw Error(ErrorKind::KOutOfRange, "K=" + std::to_string(k) + " with n=" + std::to_string(g.vertex_count()));
  }
  DecisionOutcome out;
  out.k = k;
  out.initial_budget = interdiction_budget(g.edge_count(), k);
  out.trace.variant = variant;
  if (out.initial_budget < 0) {
    out.short_circuited = true;
    out.claimed = false;
    out.final_t_size = g.vertex_count();
    out.trace.final_budget = out.initial_budget;
    return out;
  }
  GreedyResult run = greedy_run(build_instance(g, k), variant);
  out.final_t_size = run.final_t_size;
  out.claimed = run.final_t_size == k;
  out.trace = std::move(run.trace);
  return out;
}

/// Tries K = n, n-1, ..., 2 with a fresh instance each time and stops at the
/// first "yes". With no "yes", the claimed size is 1 (0 for the empty graph).
inline MaximizeResult maximize(const Graph& g, BudgetVariant variant = BudgetVariant::Prose) {
  MaximizeResult out;
  for (int k = g.vertex_count(); k >= 2; --k) {
    out.per_k.push_back(decide(g, k, variant));
    if (out.per_k.back().claimed) {
      out.claimed_size = k;
      return out;
    }
  }
  out.claimed_size = g.vertex_count() >= 1 ? 1 : 0;
  return out;
}

/// Measures what a trace actually did to the network: which vertices it
/// removed, what it charged, how many source arcs those removals really
/// interdict, and the max flow that remains.
inline TraceAudit audit_trace(const Graph& g, const GreedyTrace& trace) {
  const int n = g.vertex_count();
  const std::vector<int> deg = degrees(g);
  auto mismatch = [](const std::string& why) { return Error(ErrorKind::TraceGraphMismatch, why); };

  std::vector<bool> removed(static_cast<std::size_t>(n) + 1, false);
  TraceAudit out;
  for (const GreedyStep& step : trace.steps) {
    std::int64_t cost_sum = 0;
    for (Vertex x : step.removed) {
      if (x < 1 || x > n) throw mismatch("vertex " + std::to_string(x) + " not in graph");
      if (removed[static_cast<std::size_t>(x)]) throw mismatch("vertex " + std::to_string(x) + " removed twice");
      removed[static_cast<std::size_t>(x)] = true;
      out.removed.push_back(x);
      cost_sum += deg[static_cast<std::size_t>(x - 1)];
    }
    std::int64_t expected = cost_sum;
    if (step.kind == StepKind::Pair) {
      if (step.removed.size() != 2 || !g.adjacent(step.removed[0], step.removed[1])) {
        throw mismatch("pair step is not an edge");
      }
      if (trace.variant == BudgetVariant::Prose) expected -= 1;
    } else if (step.removed.size() != 1) {
      throw mismatch("single step removes " + std::to_string(step.removed.size()) + " vertices");
    }
    if (step.charged != expected) throw mismatch("charge does not match degree costs");
    out.charged_total += step.charged;
  }
  for (const CostItem& c : trace.final_t) {
    if (c.vertex < 1 || c.vertex > n || removed[static_cast<std::size_t>(c.vertex)]) {
      throw mismatch("final T holds vertex " + std::to_string(c.vertex));
    }
  }
  if (trace.final_t.size() + out.removed.size() != static_cast<std::size_t>(n)) {
    throw mismatch("remaining and removed vertices do not partition the graph");
  }
  std::sort(out.removed.begin(), out.removed.end());

  std::vector<std::size_t> cut;
  for (std::size_t i = 0; i < static_cast<std::size_t>(g.edge_count()); ++i) {
    const Edge& e = g.edge(i);
    if (removed[static_cast<std::size_t>(e.u)] || removed[static_cast<std::size_t>(e.v)]) cut.push_back(i);
  }
  out.true_arc_count = static_cast<int>(cut.size());
  out.actual_flow = max_flow(build_network(g), InterdictionSet(std::move(cut)));
  return out;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::ordered_json to_json(const GreedyStep& s, std::size_t index) {
  return {{"step", index},
          {"kind", s.kind == StepKind::Pair ? "pair" : "single"},
          {"removed", s.removed},
          {"charged", s.charged},
          {"budget_before", s.budget_before},
          {"budget_after", s.budget_after}};
}

inline nlohmann::ordered_json to_json(const GreedyTrace& t) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < t.steps.size(); ++i) steps.push_back(to_json(t.steps[i], i));
  nlohmann::ordered_json final_t = nlohmann::ordered_json::array();
  for (const CostItem& c : t.final_t) final_t.push_back({{"vertex", c.vertex}, {"cost", c.cost}});
  return {{"variant", to_string(t.variant)},
          {"steps", std::move(steps)},
          {"final_t", std::move(final_t)},
          {"final_budget", t.final_budget}};
}

inline nlohmann::ordered_json to_json(const DecisionOutcome& o, bool with_trace = true) {
  nlohmann::ordered_json j = {{"k", o.k},
                              {"claimed", o.claimed ? "yes" : "no"},
                              {"final_t_size", o.final_t_size},
                              {"initial_budget", o.initial_budget},
                              {"short_circuited", o.short_circuited}};
  if (with_trace) j["trace"] = to_json(o.trace);
  return j;
}

inline nlohmann::ordered_json to_json(const MaximizeResult& r, bool with_trace = false) {
  nlohmann::ordered_json per_k = nlohmann::ordered_json::array();
  for (const DecisionOutcome& o : r.per_k) per_k.push_back(to_json(o, with_trace));
  return {{"claimed_size", r.claimed_size}, {"per_k", std::move(per_k)}};
}

inline nlohmann::ordered_json to_json(const TraceAudit& a) {
  return {{"removed", a.removed},
          {"charged_total", a.charged_total},
          {"true_arc_count", a.true_arc_count},
          {"actual_flow", a.actual_flow}};
}

}  // namespace polyclique

#endif  // POLYCLIQUE_GREEDY_HPP
