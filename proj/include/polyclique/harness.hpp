#ifndef POLYCLIQUE_HARNESS_HPP
#define POLYCLIQUE_HARNESS_HPP

// Batch comparison of the greedy clique decision against the exact oracle.
// Disagreements are data, not failures.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "polyclique/error.hpp"
#include "polyclique/graph.hpp"
#include "polyclique/greedy.hpp"
#include "polyclique/oracles.hpp"

namespace polyclique {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// Graphs above this size are referenced by generator parameters instead of
/// being embedded in records.
inline constexpr int kInlineGraphLimit = 10;

/// Generator parameters for a graph that is not embedded.
struct GraphRef {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

struct VerificationRecord {
  int n = 0;
  std::optional<Graph> graph;   // set when n <= kInlineGraphLimit
  std::optional<GraphRef> ref;  // set otherwise, when known
  int k = 0;
  bool claimed = false;
  bool oracle = false;
  bool agree = false;
  bool short_circuited = false;
  BudgetVariant variant = BudgetVariant::Prose;
};

struct Tally {
  std::uint64_t total = 0;
  std::uint64_t agreements = 0;
  std::uint64_t disagreements = 0;
  std::uint64_t false_yes = 0;  // claimed yes, oracle no
  std::uint64_t false_no = 0;   // claimed no, oracle yes
  std::uint64_t short_circuited = 0;

  void add(const VerificationRecord& r) {
    ++total;
    if (r.agree) {
      ++agreements;
    } else {
      ++disagreements;
      if (r.claimed) {
        ++false_yes;
      } else {
        ++false_no;
      }
    }
    if (r.short_circuited) ++short_circuited;
  }

  friend bool operator==(const Tally&, const Tally&) = default;
};

struct ReportSummary {
  Tally overall;
  std::map<int, Tally> by_k;
  std::map<std::pair<int, int>, Tally> by_n_k;
  std::optional<std::size_t> first_disagreement;

  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct ExhaustiveMode {
  int n_max = 0;
};

struct RandomMode {
  int n = 0;
  double p = 0.5;
  int trials = 0;
  std::uint64_t seed = 0;
};

using HuntMode = std::variant<ExhaustiveMode, RandomMode>;

struct HuntLimits {
  int exhaustive_n_max = 6;  // 2^C(6,2) = 32768 labeled graphs
  std::uint64_t max_records = 50'000'000;
};

struct VerificationReport {
  HuntMode mode;
  BudgetVariant variant = BudgetVariant::Prose;
  HuntLimits limits;
  std::vector<VerificationRecord> records;
  ReportSummary summary;
};

inline ReportSummary summarize(const std::vector<VerificationRecord>& records) {
  ReportSummary s;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const VerificationRecord& r = records[i];
    s.overall.add(r);
    s.by_k[r.k].add(r);
    s.by_n_k[{r.n, r.k}].add(r);
    if (!r.agree && !s.first_disagreement) s.first_disagreement = i;
  }
  return s;
}

/// Greedy decision vs exact decision for one (graph, K). Requires 2 <= K <= n.
inline VerificationRecord verify_graph(const Graph& g, int k, BudgetVariant variant = BudgetVariant::Prose) {
  DecisionOutcome outcome = decide(g, k, variant);
  VerificationRecord r;
  r.n = g.vertex_count();
  if (r.n <= kInlineGraphLimit) r.graph = g;
  r.k = k;
  r.claimed = outcome.claimed;
  r.oracle = has_clique_exact(g, k);
  r.agree = r.claimed == r.oracle;
  r.short_circuited = outcome.short_circuited;
  r.variant = variant;
  return r;
}

/// Exhaustive: every labeled graph on exactly n_max vertices (edge masks in
/// ascending order), each with K = 2..n_max. Random: trial i is G(n, p) with
/// seed + i, each with K = 2..n. Records come out in that order.
inline VerificationReport hunt(const HuntMode& mode, BudgetVariant variant = BudgetVariant::Prose,
                               const HuntLimits& limits = {}) {
  VerificationReport report;
  report.mode = mode;
  report.variant = variant;
  report.limits = limits;

  auto add_all_k = [&](const Graph& g, const std::optional<GraphRef>& ref) {
    for (int k = 2; k <= g.vertex_count(); ++k) {
      VerificationRecord r = verify_graph(g, k, variant);
      if (!r.graph) r.ref = ref;
      report.records.push_back(std::move(r));
    }
  };

  if (const auto* ex = std::get_if<ExhaustiveMode>(&mode)) {
    if (ex->n_max < 0 || ex->n_max > limits.exhaustive_n_max) {
      throw Error(ErrorKind::TooLarge, "exhaustive n=" + std::to_string(ex->n_max) + " exceeds " +
                                           std::to_string(limits.exhaustive_n_max));
    }
    const int pairs = ex->n_max * (ex->n_max - 1) / 2;
    const std::uint64_t graphs = std::uint64_t{1} << pairs;
    if (graphs * static_cast<std::uint64_t>(std::max(ex->n_max - 1, 0)) > limits.max_records) {
      throw Error(ErrorKind::TooLarge, "record count exceeds " + std::to_string(limits.max_records));
    }
    report.records.reserve(graphs * static_cast<std::uint64_t>(std::max(ex->n_max - 1, 0)));
    for (std::uint64_t mask = 0; mask < graphs; ++mask) add_all_k(graph_from_mask(ex->n_max, mask), std::nullopt);
  } else {
    const auto& rnd = std::get<RandomMode>(mode);
    detail::check_probability(rnd.p);
    if (rnd.n < 0 || rnd.trials < 0) throw Error(ErrorKind::InvalidK, "negative size or trial count");
    if (static_cast<std::uint64_t>(rnd.trials) * static_cast<std::uint64_t>(std::max(rnd.n - 1, 0)) >
        limits.max_records) {
      throw Error(ErrorKind::TooLarge, "record count exceeds " + std::to_string(limits.max_records));
    }
    for (int t = 0; t < rnd.trials; ++t) {
      const std::uint64_t seed = rnd.seed + static_cast<std::uint64_t>(t);
      add_all_k(gen_gnp(rnd.n, rnd.p, seed), GraphRef{rnd.n, rnd.p, seed});
    }
  }
  report.summary = summarize(report.records);
  return report;
}

// ---------------------------------------------------------------------------
// Emission

enum class ReportFormat { Json, Csv };

namespace detail {

inline nlohmann::ordered_json tally_json(const Tally& t) {
  return {{"total", t.total},
          {"agreements", t.agreements},
          {"disagreements", t.disagreements},
          {"false_yes", t.false_yes},
          {"false_no", t.false_no},
          {"short_circuited", t.short_circuited}};
}

inline nlohmann::ordered_json ref_json(const GraphRef& ref) {
  return {{"generator", "gnp"}, {"n", ref.n}, {"p", ref.p}, {"seed", ref.seed}};
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

inline nlohmann::ordered_json to_json(const VerificationRecord& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  if (r.graph) {
    j["edges"] = to_json(*r.graph)["edges"];
  } else {
    j["edges"] = nullptr;
    if (r.ref) j["graph_ref"] = detail::ref_json(*r.ref);
  }
  j["k"] = r.k;
  j["claimed"] = detail::yes_no(r.claimed);
  j["oracle"] = detail::yes_no(r.oracle);
  j["agree"] = r.agree;
  j["short_circuited"] = r.short_circuited;
  j["variant"] = to_string(r.variant);
  return j;
}

inline nlohmann::ordered_json meta_json(const VerificationReport& r) {
  nlohmann::ordered_json meta;
  meta["version"] = kToolVersion;
  nlohmann::ordered_json limits;
  limits["exhaustive_n_max"] = r.limits.exhaustive_n_max;
  limits["max_records"] = r.limits.max_records;
  if (const auto* ex = std::get_if<ExhaustiveMode>(&r.mode)) {
    meta["mode"] = "exhaustive";
    meta["seed"] = nullptr;
    meta["variant"] = to_string(r.variant);
    meta["params"] = {{"n", ex->n_max}};
  } else {
    const auto& rnd = std::get<RandomMode>(r.mode);
    meta["mode"] = "random";
    meta["seed"] = rnd.seed;
    meta["variant"] = to_string(r.variant);
    meta["params"] = {{"n", rnd.n}, {"p", rnd.p}, {"trials", rnd.trials}};
  }
  meta["limits"] = std::move(limits);
  return meta;
}

inline nlohmann::ordered_json summary_json(const ReportSummary& s) {
  nlohmann::ordered_json j = detail::tally_json(s.overall);
  nlohmann::ordered_json by_k = nlohmann::ordered_json::object();
  for (const auto& [k, t] : s.by_k) by_k[std::to_string(k)] = detail::tally_json(t);
  j["by_k"] = std::move(by_k);
  nlohmann::ordered_json by_n_k = nlohmann::ordered_json::array();
  for (const auto& [nk, t] : s.by_n_k) {
    nlohmann::ordered_json row = {{"n", nk.first}, {"k", nk.second}};
    row.update(detail::tally_json(t));
    by_n_k.push_back(std::move(row));
  }
  j["by_n_k"] = std::move(by_n_k);
  if (s.first_disagreement) {
    j["first_disagreement"] = *s.first_disagreement;
  } else {
    j["first_disagreement"] = nullptr;
  }
  return j;
}

/// JSON: one document, one record per line. CSV: fixed header, one row per
/// record. Output depends only on the report contents.
inline std::string emit_report(const VerificationReport& r, ReportFormat format) {
  std::string out;
  if (format == ReportFormat::Json) {
    out += "{\"meta\":" + meta_json(r).dump() + ",\n\"records\":[";
    for (std::size_t i = 0; i < r.records.size(); ++i) {
      out += i == 0 ? "\n" : ",\n";
      out += to_json(r.records[i]).dump();
    }
    out += r.records.empty() ? "],\n" : "\n],\n";
    out += "\"summary\":" + summary_json(r.summary).dump() + "}\n";
    return out;
  }

  out += "index,n,k,claimed,oracle,agree,short_circuited,variant,edges\n";
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    const VerificationRecord& rec = r.records[i];
    std::string edges;
    if (rec.graph) {
      for (const Edge& e : rec.graph->edges()) {
        if (!edges.empty()) edges += ' ';
        edges += std::to_string(e.u) + "-" + std::to_string(e.v);
      }
    } else if (rec.ref) {
      edges = "gnp(n=" + std::to_string(rec.ref->n) + ";p=" + nlohmann::json(rec.ref->p).dump() +
              ";seed=" + std::to_string(rec.ref->seed) + ")";
    }
    out += std::to_string(i) + "," + std::to_string(rec.n) + "," + std::to_string(rec.k) + "," +
           detail::yes_no(rec.claimed) + "," + detail::yes_no(rec.oracle) + "," +
           (rec.agree ? "true" : "false") + "," + (rec.short_circuited ? "true" : "false") + "," +
           std::string(to_string(rec.variant)) + "," + edges + "\n";
  }
  return out;
}

}  // namespace polyclique

#endif  // POLYCLIQUE_HARNESS_HPP
