#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "abchrom/coloring.hpp"
#include "abchrom/witness.hpp"

namespace abchrom {

enum class Variant { proper, acyclic };
enum class Strategy { lowest_index, random, largest_class };
enum class ColorChoice { smallest, random };

const char* to_string(Variant v);
const char* to_string(Strategy s);

/// Result of removing one color class.
struct RecoloringOutcome {
  /// k - 1 colors; colors above removed_color are shifted down by one.
  std::optional<Coloring> result;
  Color removed_color = 0;
  /// (vertex, new color) for each vertex of the removed class, colors in the original labelling.
  std::vector<std::pair<Vertex, Color>> assignment_log;
};

struct StepOptions {
  ColorChoice choice = ColorChoice::smallest;
  std::mt19937_64* rng = nullptr;             ///< required when choice is random
  std::uint64_t budget = 10'000'000;           ///< backtracking nodes, acyclic steps only
};

/// Present iff class i has no b-vertex.
RecoloringOutcome recoloring_step(const Graph& g, const Coloring& c, Color i, const StepOptions& opts = {});

/// Present iff some joint choice of missing colors for the class keeps the coloring acyclic.
/// Vertices are assigned in index order. Throws BudgetExceeded rather than answering "absent".
RecoloringOutcome acyclic_recoloring_step(const Graph& g, const Coloring& c, Color i, const StepOptions& opts = {});

RecoloringOutcome step(const Graph& g, const Coloring& c, Color i, Variant variant, const StepOptions& opts = {});

struct AlgorithmOptions {
  Variant variant = Variant::acyclic;
  Strategy strategy = Strategy::lowest_index;
  ColorChoice choice = ColorChoice::smallest;
  std::uint64_t seed = 0;
  std::uint64_t step_budget = 10'000'000;
};

struct RecoloringTrace {
  Coloring result;
  std::vector<RecoloringOutcome> steps;
};

/// Applies steps until none is possible. Defaults to the trivial coloring as a start.
RecoloringTrace run_recoloring_algorithm(const Graph& g, const Coloring& start, const AlgorithmOptions& opts = {});
RecoloringTrace run_recoloring_algorithm(const Graph& g, const AlgorithmOptions& opts = {});

/// No class admits a step of the given variant. For the proper variant this is "c is a b-coloring".
bool is_minimal_by_definition(const Graph& g, const Coloring& c, Variant variant,
                              std::uint64_t step_budget = 10'000'000);

/// Every class contains an acyclic b-vertex. Requires an acyclic coloring.
bool is_minimal_by_witnesses(const Graph& g, const Coloring& c, const WitnessOptions& opts = {});

}  // namespace abchrom
