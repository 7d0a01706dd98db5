// Command-line front end for the greedy clique procedure, its oracles and the
// verification harness.
//
// Exit codes: 0 success, 1 usage error, 2 input parse error,
// 3 expectation failure (--expect-agreement).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polyclique/polyclique.hpp"

namespace {

using namespace polyclique;

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitExpectation = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph read_graph(const std::string& path) {
  if (path == "-") return parse_dimacs(std::cin);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_dimacs(in);
}

InterdictionSet parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 0) throw CLI::ValidationError("--interdict", "bad index '" + item + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  return InterdictionSet(std::move(out));
}

ReportFormat parse_format(const std::string& s) { return s == "csv" ? ReportFormat::Csv : ReportFormat::Json; }

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

void print_trace_lines(const GreedyTrace& trace) {
  for (std::size_t i = 0; i < trace.steps.size(); ++i) std::cout << to_json(trace.steps[i], i).dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy clique decision via max-flow interdiction, with exact oracles"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string input = "-";
  std::string variant_name = "prose";
  std::string format = "json";
  std::string output;
  int k = 0;
  bool trace = false;
  bool expect_agreement = false;
  std::uint64_t limit = kDefaultEnumerationLimit;
  const std::vector<std::string> variants{"prose", "literal"};
  const std::vector<std::string> formats{"json", "csv"};

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", input, "DIMACS graph file, '-' for stdin")->capture_default_str();
  };
  auto add_variant = [&](CLI::App* sub) {
    sub->add_option("--variant", variant_name, "Pair budget charge: prose (c_u+c_v-1) or literal (c_u+c_v)")
        ->check(CLI::IsMember(variants))
        ->capture_default_str();
  };

  auto* decide_cmd = app.add_subcommand("decide", "Greedy K-clique decision");
  add_input(decide_cmd);
  decide_cmd->add_option("--k", k, "Clique size")->required();
  add_variant(decide_cmd);
  decide_cmd->add_flag("--trace", trace, "Emit one JSON line per greedy step before the outcome");

  auto* maximize_cmd = app.add_subcommand("maximize", "Greedy maximum clique size (K = n down to 2)");
  add_input(maximize_cmd);
  add_variant(maximize_cmd);
  maximize_cmd->add_flag("--trace", trace, "Include per-K traces");

  auto* reduce_cmd = app.add_subcommand("reduce", "Dump the layered network as JSON");
  add_input(reduce_cmd);

  std::string interdict;
  auto* flow_cmd = app.add_subcommand("flow", "Max flow after interdicting source arcs");
  add_input(flow_cmd);
  flow_cmd->add_option("--interdict", interdict, "Comma-separated 0-based edge indices");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact oracles");
  oracle_cmd->require_subcommand(1);
  auto* oracle_clique = oracle_cmd->add_subcommand("max-clique", "Exact maximum clique");
  add_input(oracle_clique);
  std::int64_t budget = 0;
  auto* oracle_interdiction = oracle_cmd->add_subcommand("interdiction", "Exhaustive optimal interdiction");
  add_input(oracle_interdiction);
  oracle_interdiction->add_option("--budget", budget, "Number of source arcs to interdict")->required();
  oracle_interdiction->add_option("--limit", limit, "Maximum subsets to enumerate")->capture_default_str();
  auto* oracle_wood = oracle_cmd->add_subcommand("wood", "Check the clique/interdiction equivalence for one K");
  add_input(oracle_wood);
  oracle_wood->add_option("--k", k, "Clique size")->required();
  oracle_wood->add_option("--limit", limit, "Maximum subsets to enumerate")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Compare the greedy decision with the exact oracle");
  add_input(verify_cmd);
  verify_cmd->add_option("--k", k, "Clique size")->required();
  add_variant(verify_cmd);
  verify_cmd->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();
  verify_cmd->add_flag("--expect-agreement", expect_agreement, "Exit 3 on disagreement");

  std::string mode = "exhaustive";
  int n = 0;
  double p = 0.5;
  int trials = 100;
  std::uint64_t seed = 0;
  int max_exhaustive = HuntLimits{}.exhaustive_n_max;
  auto* hunt_cmd = app.add_subcommand("hunt", "Search for disagreements between greedy and oracle");
  hunt_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "random"}))->capture_default_str();
  hunt_cmd->add_option("--n", n, "Vertex count")->required();
  hunt_cmd->add_option("--p", p, "Edge probability (random mode)")->capture_default_str();
  hunt_cmd->add_option("--trials", trials, "Graph count (random mode)")->capture_default_str();
  hunt_cmd->add_option("--seed", seed, "Base seed (random mode)")->capture_default_str();
  hunt_cmd->add_option("--max-exhaustive-n", max_exhaustive, "Raise the exhaustive size guard")->capture_default_str();
  add_variant(hunt_cmd);
  hunt_cmd->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();
  hunt_cmd->add_option("--output", output, "Write the report here instead of stdout");
  hunt_cmd->add_flag("--expect-agreement", expect_agreement, "Exit 3 on any disagreement");

  auto* audit_cmd = app.add_subcommand("audit", "Run the greedy and measure what its trace really interdicts");
  add_input(audit_cmd);
  auto* audit_k = audit_cmd->add_option("--k", k, "Clique size (budget |E| - C(K,2))");
  auto* audit_budget = audit_cmd->add_option("--budget", budget, "Explicit budget instead of --k");
  audit_k->excludes(audit_budget);
  add_variant(audit_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "Write a seeded random graph as DIMACS");
  int planted = 0;
  gen_cmd->add_option("--n", n, "Vertex count")->required();
  gen_cmd->add_option("--p", p, "Edge probability")->capture_default_str();
  gen_cmd->add_option("--seed", seed)->capture_default_str();
  gen_cmd->add_option("--planted", planted, "Plant a clique of this size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const BudgetVariant variant = parse_variant(variant_name);

    if (*decide_cmd) {
      DecisionOutcome out = decide(read_graph(input), k, variant);
      if (trace) print_trace_lines(out.trace);
      std::cout << to_json(out, false).dump() << "\n";
    } else if (*maximize_cmd) {
      std::cout << to_json(maximize(read_graph(input), variant), trace).dump() << "\n";
    } else if (*reduce_cmd) {
      std::cout << to_json(build_network(read_graph(input))).dump() << "\n";
    } else if (*flow_cmd) {
      Graph g = read_graph(input);
      std::cout << max_flow(build_network(g), parse_indices(interdict)) << "\n";
    } else if (*oracle_clique) {
      std::cout << to_json(max_clique_exact(read_graph(input))).dump() << "\n";
    } else if (*oracle_interdiction) {
      std::cout << to_json(exact_min_interdicted_flow(build_network(read_graph(input)), budget, limit)).dump() << "\n";
    } else if (*oracle_wood) {
      std::cout << to_json(wood_equivalence(read_graph(input), k, limit)).dump() << "\n";
    } else if (*verify_cmd) {
      VerificationReport report;
      report.mode = ExhaustiveMode{0};
      report.variant = variant;
      report.records.push_back(verify_graph(read_graph(input), k, variant));
      report.summary = summarize(report.records);
      if (parse_format(format) == ReportFormat::Csv) {
        std::cout << emit_report(report, ReportFormat::Csv);
      } else {
        std::cout << to_json(report.records.front()).dump() << "\n";
      }
      if (expect_agreement && !report.records.front().agree) return kExitExpectation;
    } else if (*hunt_cmd) {
      HuntLimits limits;
      limits.exhaustive_n_max = max_exhaustive;
      HuntMode hm = mode == "exhaustive" ? HuntMode{ExhaustiveMode{n}} : HuntMode{RandomMode{n, p, trials, seed}};
      VerificationReport report = hunt(hm, variant, limits);
      write_output(emit_report(report, parse_format(format)), output);
      if (expect_agreement && report.summary.overall.disagreements > 0) return kExitExpectation;
    } else if (*audit_cmd) {
      Graph g = read_graph(input);
      GreedyInstance inst = audit_budget->count() > 0 ? make_instance(g, budget) : build_instance(g, k);
      GreedyResult run = greedy_run(inst, variant);
      nlohmann::ordered_json j;
      j["budget"] = inst.budget;
      j["final_t_size"] = run.final_t_size;
      j["audit"] = to_json(audit_trace(g, run.trace));
      j["trace"] = to_json(run.trace);
      std::cout << j.dump() << "\n";
    } else if (*gen_cmd) {
      Graph g = planted > 0 ? gen_planted_clique(n, planted, p, seed) : gen_gnp(n, p, seed);
      std::cout << write_dimacs(g);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_input_error() ? kExitInput : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
