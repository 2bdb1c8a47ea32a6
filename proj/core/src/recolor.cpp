#include "abchrom/recolor.hpp"

#include <algorithm>
#include <numeric>

#include "abchrom/error.hpp"

namespace abchrom {

const char* to_string(Variant v) { return v == Variant::proper ? "proper" : "acyclic"; }

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::lowest_index: return "lowest-index";
    case Strategy::random: return "random";
    case Strategy::largest_class: return "largest-class";
  }
  return "?";
}

namespace {

Coloring drop_color(const Coloring& c, Color i, const std::vector<std::pair<Vertex, Color>>& log) {
  std::vector<Color> colors = c.assignment();
  for (auto [v, col] : log) colors[static_cast<std::size_t>(v)] = col;
  for (auto& col : colors)
    if (col > i) --col;
  return Coloring(std::move(colors), c.num_colors() - 1);
}

void check_color(const Coloring& c, Color i) {
  if (i < 1 || i > c.num_colors()) throw PreconditionError("color " + std::to_string(i) + " is not in use");
}

std::mt19937_64& require_rng(const StepOptions& opts) {
  if (!opts.rng) throw PreconditionError("random color choice needs a generator");
  return *opts.rng;
}

}  // namespace

RecoloringOutcome recoloring_step(const Graph& g, const Coloring& c, Color i, const StepOptions& opts) {
  require_paired(g, c);
  check_color(c, i);
  RecoloringOutcome out;
  out.removed_color = i;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (c[v] != i) continue;
    auto missing = missing_colors(g, c, v);
    if (missing.empty()) {
      out.assignment_log.clear();
      return out;
    }
    Color pick = missing.front();
    if (opts.choice == ColorChoice::random) {
      std::uniform_int_distribution<std::size_t> dist(0, missing.size() - 1);
      pick = missing[dist(require_rng(opts))];
    }
    out.assignment_log.emplace_back(v, pick);
  }
  out.result = drop_color(c, i, out.assignment_log);
  return out;
}

RecoloringOutcome acyclic_recoloring_step(const Graph& g, const Coloring& c, Color i, const StepOptions& opts) {
  require_paired(g, c);
  check_color(c, i);
  RecoloringOutcome out;
  out.removed_color = i;
  std::vector<Vertex> targets;
  std::vector<std::vector<Color>> candidates;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (c[v] != i) continue;
    // A blocked color closes a cycle avoiding class i, so it can never be used.
    auto options = available_colors(g, c, v);
    if (options.empty()) return out;
    if (opts.choice == ColorChoice::random) std::shuffle(options.begin(), options.end(), require_rng(opts));
    targets.push_back(v);
    candidates.push_back(std::move(options));
  }
  SearchBudget budget(opts.budget, "acyclic recoloring step");
  auto found = find_acyclic_reassignment(g, c.assignment(), targets, candidates, budget);
  if (!found) return out;
  for (std::size_t t = 0; t < targets.size(); ++t) out.assignment_log.emplace_back(targets[t], (*found)[t]);
  out.result = drop_color(c, i, out.assignment_log);
  return out;
}

RecoloringOutcome step(const Graph& g, const Coloring& c, Color i, Variant variant, const StepOptions& opts) {
  return variant == Variant::proper ? recoloring_step(g, c, i, opts) : acyclic_recoloring_step(g, c, i, opts);
}

RecoloringTrace run_recoloring_algorithm(const Graph& g, const Coloring& start, const AlgorithmOptions& opts) {
  require_paired(g, start);
  if (!is_proper(g, start)) throw PreconditionError("recoloring needs a proper start coloring");
  if (opts.variant == Variant::acyclic && !is_acyclic(g, start))
    throw PreconditionError("the acyclic recoloring algorithm needs an acyclic start coloring");

  std::mt19937_64 rng(opts.seed);
  StepOptions step_opts{opts.choice, &rng, opts.step_budget};
  RecoloringTrace trace{start, {}};
  while (true) {
    const Coloring& c = trace.result;
    std::vector<Color> order(static_cast<std::size_t>(c.num_colors()));
    std::iota(order.begin(), order.end(), 1);
    if (opts.strategy == Strategy::random) {
      std::shuffle(order.begin(), order.end(), rng);
    } else if (opts.strategy == Strategy::largest_class) {
      std::vector<int> sizes(static_cast<std::size_t>(c.num_colors()) + 1, 0);
      for (auto col : c.assignment()) ++sizes[static_cast<std::size_t>(col)];
      std::stable_sort(order.begin(), order.end(), [&](Color a, Color b) {
        return sizes[static_cast<std::size_t>(a)] > sizes[static_cast<std::size_t>(b)];
      });
    }
    std::optional<RecoloringOutcome> taken;
    for (auto i : order) {
      auto outcome = step(g, c, i, opts.variant, step_opts);
      if (outcome.result) {
        taken = std::move(outcome);
        break;
      }
    }
    if (!taken) return trace;
    trace.result = *taken->result;
    trace.steps.push_back(std::move(*taken));
  }
}

RecoloringTrace run_recoloring_algorithm(const Graph& g, const AlgorithmOptions& opts) {
  return run_recoloring_algorithm(g, trivial_coloring(g), opts);
}

bool is_minimal_by_definition(const Graph& g, const Coloring& c, Variant variant, std::uint64_t step_budget) {
  require_paired(g, c);
  if (variant == Variant::acyclic && !is_acyclic(g, c))
    throw PreconditionError("acyclic minimality is defined for acyclic colorings only");
  StepOptions opts;
  opts.budget = step_budget;
  for (Color i = 1; i <= c.num_colors(); ++i)
    if (step(g, c, i, variant, opts).result) return false;
  return true;
}

bool is_minimal_by_witnesses(const Graph& g, const Coloring& c, const WitnessOptions& opts) {
  WitnessAnalysis analysis(g, c, opts);
  return analysis.every_class_certified();
}

}  // namespace abchrom
