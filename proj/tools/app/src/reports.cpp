#include "abchrom_app/reports.hpp"

#include <abchrom/error.hpp>

namespace abchrom::app {

json coloring_json(const Coloring& c) { return {{"k", c.num_colors()}, {"colors", c.assignment()}}; }

json graph_json(const LabeledGraph& g, const Coloring* reference) {
  json edges = json::array();
  for (auto [u, v] : g.graph.edges()) edges.push_back({u, v});
  json out{{"n", g.graph.order()}, {"m", g.graph.size()}, {"edges", edges}, {"labels", g.labels}};
  if (reference) out["reference_coloring"] = coloring_json(*reference);
  return out;
}

json check_report(const Graph& g, const std::vector<std::string>& labels, const Coloring& c,
                  const WitnessOptions& opts, std::uint64_t step_budget) {
  require_paired(g, c);
  const bool proper = is_proper(g, c);
  const bool acyclic = proper && is_acyclic(g, c);
  json out{{"n", g.order()}, {"k", c.num_colors()}, {"proper", proper}, {"acyclic", acyclic}};
  auto name = [&](Vertex v) { return v < static_cast<Vertex>(labels.size()) ? labels[static_cast<std::size_t>(v)] : std::to_string(v); };
  if (proper) out["b_coloring"] = is_minimal_by_definition(g, c, Variant::proper);
  if (!acyclic) return out;

  WitnessAnalysis analysis(g, c, opts);
  json classes = json::array();
  json systems = json::array();
  bool all_certified = true;
  for (Color i = 1; i <= c.num_colors(); ++i) {
    json entry{{"color", i}};
    json certified = json::array();
    for (Vertex v = 0; v < g.order(); ++v) {
      if (c[v] != i) continue;
      auto cert = analysis.certify(v);
      if (cert != Certificate::none) certified.push_back({{"vertex", v}, {"label", name(v)}, {"certificate", to_string(cert)}});
    }
    if (certified.empty()) all_certified = false;
    entry["acyclic_b_vertices"] = certified;
    classes.push_back(entry);

    const auto& list = analysis.systems(i);
    for (std::size_t idx = 0; idx < list.size(); ++idx) {
      json cycles = json::array();
      for (const auto& cyc : list[idx].cycles) {
        json labelled = json::array();
        for (auto v : cyc.cycle) labelled.push_back(name(v));
        cycles.push_back({{"cycle", labelled}, {"colors", cyc.colors}, {"principal", cyc.principal}});
      }
      json principal = json::array();
      for (auto v : list[idx].principal_vertices) principal.push_back(name(v));
      systems.push_back({{"principal_color", i},
                         {"cycles", cycles},
                         {"principal_vertices", principal},
                         {"recolorable", analysis.system_recolorable(i, idx)}});
    }
  }
  out["classes"] = classes;
  out["critical_cycle_systems"] = systems;
  out["cc_rule"] = to_string(opts.rule);
  out["minimal_by_witnesses"] = all_certified;
  out["minimal_by_definition"] = is_minimal_by_definition(g, c, Variant::acyclic, step_budget);
  out["minimal"] = out["minimal_by_definition"];
  return out;
}

json invariants_json(const InvariantReport& r) {
  json out{{"n", r.n},
           {"max_degree", r.max_degree},
           {"omega", r.omega},
           {"chi", r.chi},
           {"A", r.acyclic_chromatic},
           {"phi", r.phi},
           {"A_b", r.ab},
           {"m", r.m},
           {"partitions", r.partitions},
           {"seconds", r.seconds}};
  if (r.m_a >= 0) out["m_a"] = r.m_a;
  json witnesses{{"omega", r.clique}};
  auto put = [&](const char* key, const Coloring& c) {
    if (c.size() > 0 || r.n == 0) witnesses[key] = c.assignment();
  };
  put("chi", r.chi_witness);
  put("A", r.acyclic_witness);
  put("phi", r.phi_witness);
  put("A_b", r.ab_witness);
  out["witnesses"] = witnesses;
  return out;
}

json trace_json(const RecoloringTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    json log = json::array();
    for (auto [v, col] : s.assignment_log) log.push_back({v, col});
    steps.push_back({{"removed_color", s.removed_color}, {"assignment_log", log}});
  }
  return {{"colors", trace.result.num_colors()}, {"result", trace.result.assignment()}, {"steps", steps}};
}

}  // namespace abchrom::app
