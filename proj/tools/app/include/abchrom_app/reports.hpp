#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <abchrom/exact.hpp>
#include <abchrom/families.hpp>
#include <abchrom/recolor.hpp>
#include <abchrom/witness.hpp>

namespace abchrom::app {

using nlohmann::json;

json coloring_json(const Coloring& c);
json graph_json(const LabeledGraph& g, const Coloring* reference = nullptr);

/// Properness, acyclicity, per-class witnesses, CCS inventory and both minimality verdicts.
json check_report(const Graph& g, const std::vector<std::string>& labels, const Coloring& c,
                  const WitnessOptions& opts = {}, std::uint64_t step_budget = 10'000'000);

json invariants_json(const InvariantReport& r);

json trace_json(const RecoloringTrace& trace);

}  // namespace abchrom::app
