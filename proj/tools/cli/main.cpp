#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include <abchrom/error.hpp>
#include <abchrom/exact.hpp>
#include <abchrom/families.hpp>
#include <abchrom/fixtures.hpp>
#include <abchrom/io.hpp>
#include <abchrom/recolor.hpp>

#include "abchrom_app/io.hpp"
#include "abchrom_app/reports.hpp"
#include "abchrom_app/suites.hpp"

namespace {

using namespace abchrom;
using abchrom::app::json;

enum Exit { ok = 0, verify_failed = 1, input_error = 2, mismatch = 3, budget = 4 };

struct Options {
  app::GraphSource source;
  std::string format = "edgelist";
  std::string output;
  std::string coloring;
  std::string fixture_coloring;
  bool reference = false;
  std::uint64_t budget_nodes = 50'000'000;
  std::uint64_t seed = 1;
  std::uint64_t verify_seed = app::SuiteOptions{}.seed;
  std::string strategy = "lowest-index";
  std::string variant = "acyclic";
  std::string color_choice = "smallest";
  std::string cc_rule = "alternating";
  int runs = 1;
  unsigned threads = 0;
  bool no_ma = false;
  std::string suite = "all";
  std::size_t random_graphs = 1000;
  int library_max_n = 6;
};

void emit(const Options& o, const std::string& text) {
  if (o.output.empty() || o.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw ParseError(0, "cannot write " + o.output);
  out << text;
}

Strategy parse_strategy(const std::string& s) {
  if (s == "lowest-index") return Strategy::lowest_index;
  if (s == "random") return Strategy::random;
  if (s == "largest-class") return Strategy::largest_class;
  throw ParseError(0, "unknown strategy '" + s + "'");
}

Coloring chosen_coloring(const Options& o, const app::LoadedGraph& loaded) {
  const int picked = !o.coloring.empty() + o.reference + !o.fixture_coloring.empty();
  if (picked != 1) throw ParseError(0, "give exactly one of --coloring, --reference, --fixture-coloring");
  if (!o.coloring.empty()) return app::load_coloring(o.coloring);
  if (!loaded.spec) throw ParseError(0, "--reference and --fixture-coloring need --family");
  if (o.reference) return reference_coloring(*loaded.spec);
  if (loaded.spec->family != Family::figure) throw ParseError(0, "--fixture-coloring needs a figure family");
  return fixtures::by_name(loaded.spec->name).coloring(o.fixture_coloring);
}

int cmd_gen(const Options& o) {
  auto loaded = app::load_graph(o.source);
  const auto& lg = loaded.graph;
  std::optional<Coloring> ref;
  if (loaded.spec && has_reference_coloring(*loaded.spec)) ref = reference_coloring(*loaded.spec);
  if (o.format == "json") {
    emit(o, app::graph_json(lg, ref ? &*ref : nullptr).dump(2) + "\n");
  } else if (o.format == "dot") {
    emit(o, to_dot(lg.graph, lg.labels, ref ? &*ref : nullptr));
  } else {
    std::vector<std::string> comments;
    if (loaded.spec) comments.push_back("family " + loaded.spec->to_string());
    for (Vertex v = 0; v < lg.graph.order(); ++v)
      comments.push_back("label " + std::to_string(v + 1) + " " + lg.labels[static_cast<std::size_t>(v)]);
    emit(o, serialize_graph(lg.graph, app::parse_format(o.format), comments));
  }
  return ok;
}

WitnessOptions witness_options(const Options& o) {
  WitnessOptions w;
  if (o.cc_rule == "strict")
    w.rule = CriticalCycleRule::strict;
  else if (o.cc_rule != "alternating")
    throw ParseError(0, "unknown critical cycle rule '" + o.cc_rule + "'");
  w.cycle_budget = o.budget_nodes;
  w.recolor_budget = o.budget_nodes;
  return w;
}

int cmd_check(const Options& o) {
  auto loaded = app::load_graph(o.source);
  auto c = chosen_coloring(o, loaded);
  auto report = app::check_report(loaded.graph.graph, loaded.graph.labels, c, witness_options(o), o.budget_nodes);
  emit(o, report.dump(2) + "\n");
  return ok;
}

int cmd_invariants(const Options& o) {
  auto loaded = app::load_graph(o.source);
  ExactOptions e;
  e.partition_budget = e.path_budget = o.budget_nodes;
  e.with_m_a = !o.no_ma;
  auto report = app::invariants_json(exact_invariants(loaded.graph.graph, e));
  if (loaded.spec) {
    report["family"] = loaded.spec->to_string();
    try {
      auto f = formula_ab(*loaded.spec);
      report["formula_A_b"] = f.exact() ? json(f.lo) : json::array({f.lo, f.hi});
    } catch (const InvalidFamily&) {
    }
  }
  report["budget_nodes"] = o.budget_nodes;
  emit(o, report.dump(2) + "\n");
  return ok;
}

int cmd_heuristic(const Options& o) {
  auto loaded = app::load_graph(o.source);
  const auto& g = loaded.graph.graph;
  AlgorithmOptions a;
  a.variant = o.variant == "proper" ? Variant::proper : Variant::acyclic;
  if (o.variant != "proper" && o.variant != "acyclic") throw ParseError(0, "unknown variant '" + o.variant + "'");
  a.strategy = parse_strategy(o.strategy);
  if (o.color_choice == "random")
    a.choice = ColorChoice::random;
  else if (o.color_choice != "smallest")
    throw ParseError(0, "unknown color choice '" + o.color_choice + "'");
  a.step_budget = o.budget_nodes;
  Coloring start = trivial_coloring(g);
  if (!o.coloring.empty()) start = app::load_coloring(o.coloring);
  json runs = json::array();
  int lo = g.order(), hi = 0;
  bool all_minimal = true;
  for (int run = 0; run < o.runs; ++run) {
    a.seed = o.seed + static_cast<std::uint64_t>(run);
    auto trace = run_recoloring_algorithm(g, start, a);
    auto entry = app::trace_json(trace);
    entry["seed"] = a.seed;
    entry["minimal"] = is_minimal_by_definition(g, trace.result, a.variant, o.budget_nodes);
    lo = std::min(lo, trace.result.num_colors());
    hi = std::max(hi, trace.result.num_colors());
    all_minimal = all_minimal && entry["minimal"].get<bool>();
    runs.push_back(entry);
  }
  json out{{"variant", to_string(a.variant)}, {"strategy", to_string(a.strategy)}, {"min_colors", lo},
           {"max_colors", hi},       {"all_minimal", all_minimal},          {"runs", runs}};
  emit(o, out.dump(2) + "\n");
  return ok;
}

int cmd_verify(const Options& o) {
  app::SuiteOptions s;
  s.threads = o.threads;
  s.seed = o.verify_seed;
  s.budget = o.budget_nodes;
  s.random_graphs = o.random_graphs;
  s.library_max_n = o.library_max_n;
  std::vector<std::string> names = o.suite == "all" ? app::suite_names() : std::vector<std::string>{o.suite};
  bool all_passed = true;
  for (const auto& name : names) {
    auto result = app::run_suite(name, s);
    std::cout << "== " << result.name << ": " << result.title << " (" << std::fixed << std::setprecision(2) << result.seconds
              << " s)\n";
    for (const auto& check : result.checks)
      std::cout << "  " << (result.observational ? "info" : check.passed ? "pass" : "FAIL") << "  " << check.name
                << (check.detail.empty() ? "" : "  [" + check.detail + "]") << "\n";
    for (const auto& note : result.notes) std::cout << "  note  " << note << "\n";
    all_passed = all_passed && result.passed();
  }
  std::cout << (all_passed ? "all checks passed\n" : "verification FAILED\n");
  return all_passed ? ok : verify_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Acyclic b-chromatic number toolkit"};
  cli.require_subcommand(1);
  Options o;

  auto graph_input = [&](CLI::App* sub) {
    auto* file = sub->add_option("graph", o.source.path, "graph file (edge list or DIMACS), - for stdin");
    auto* family = sub->add_option("--family", o.source.family, "family spec, e.g. path:7, join(cycle:5,cycle:5), roof:2, fig2");
    file->excludes(family);
    sub->add_option("--input-format", o.source.format, "edgelist or dimacs (default: from file name)");
    sub->add_option("-o,--output", o.output, "output file (default stdout)");
    sub->add_option("--budget-nodes", o.budget_nodes, "search node budget")->check(CLI::PositiveNumber);
  };

  auto* gen = cli.add_subcommand("gen", "generate a family graph");
  gen->add_option("spec", o.source.family, "family spec")->required();
  gen->add_option("--format", o.format, "edgelist, dimacs, json or dot")
      ->check(CLI::IsMember({"edgelist", "dimacs", "json", "dot"}));
  gen->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* check = cli.add_subcommand("check", "validate a coloring and report witnesses");
  graph_input(check);
  check->add_option("--coloring", o.coloring, "coloring file: k, then n colors");
  check->add_flag("--reference", o.reference, "use the family's reference coloring");
  check->add_option("--fixture-coloring", o.fixture_coloring, "named coloring of a figure fixture");
  check->add_option("--cc-rule", o.cc_rule, "alternating or strict");

  auto* inv = cli.add_subcommand("invariants", "exact invariants by brute force");
  graph_input(inv);
  inv->add_flag("--no-ma", o.no_ma, "skip the acyclic degree bound");

  auto* heur = cli.add_subcommand("heuristic", "run the recoloring algorithm");
  graph_input(heur);
  heur->add_option("--variant", o.variant, "acyclic or proper");
  heur->add_option("--strategy", o.strategy, "lowest-index, random or largest-class");
  heur->add_option("--color-choice", o.color_choice, "smallest or random");
  heur->add_option("--seed", o.seed, "seed of the first run");
  heur->add_option("--runs", o.runs, "number of runs")->check(CLI::PositiveNumber);
  heur->add_option("--coloring", o.coloring, "start coloring (default trivial)");

  auto* verify = cli.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", o.suite, "suite name or all");
  verify->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  verify->add_option("--seed", o.verify_seed, "random corpus seed");
  verify->add_option("--budget-nodes", o.budget_nodes, "search node budget")->check(CLI::PositiveNumber);
  verify->add_option("--random-graphs", o.random_graphs, "size of the random corpus");
  verify->add_option("--library-max-n", o.library_max_n, "largest order in the connected-graph library")
      ->check(CLI::Range(1, 8));

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? ok : input_error;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*check) return cmd_check(o);
    if (*inv) return cmd_invariants(o);
    if (*heur) return cmd_heuristic(o);
    if (*verify) return cmd_verify(o);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return budget;
  } catch (const SizeMismatch& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    return mismatch;
  } catch (const PreconditionError& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    return mismatch;
  } catch (const Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return input_error;
  }
  return ok;
}
