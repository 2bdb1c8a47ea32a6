#include "abchrom/witness.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include <boost/pending/disjoint_sets.hpp>

#include "abchrom/error.hpp"

namespace abchrom {

const char* to_string(Certificate cert) {
  switch (cert) {
    case Certificate::b_vertex: return "b-vertex";
    case Certificate::weak_acyclic: return "weak-acyclic-b-vertex";
    case Certificate::non_recolorable_system: return "non-recolorable-ccs";
    case Certificate::none: break;
  }
  return "none";
}

const char* to_string(CriticalCycleRule rule) {
  return rule == CriticalCycleRule::strict ? "strict" : "alternating";
}

bool is_b_vertex(const Graph& g, const Coloring& c, Vertex v) {
  require_paired(g, c);
  return missing_colors(g, c, v).empty();
}

std::vector<Color> blocked_colors(const Graph& g, const Coloring& c, Vertex v) {
  require_paired(g, c);
  std::vector<Color> out;
  for (auto l : missing_colors(g, c, v))
    if (closes_bicolored_cycle(g, c.assignment(), v, l)) out.push_back(l);
  return out;
}

bool is_weak_acyclic_b_vertex(const Graph& g, const Coloring& c, Vertex v) {
  if (!is_acyclic(g, c)) throw PreconditionError("weak acyclic b-vertices are defined for acyclic colorings only");
  return available_colors(g, c, v).empty();
}

std::vector<Color> available_colors(const Graph& g, const Coloring& c, Vertex v) {
  require_paired(g, c);
  std::vector<Color> out;
  for (auto l : missing_colors(g, c, v))
    if (!closes_bicolored_cycle(g, c.assignment(), v, l)) out.push_back(l);
  return out;
}

namespace {

// Principal colors of an even cycle with exactly three colors, empty if not critical.
std::vector<Color> principal_colors(const std::vector<Color>& along, const std::array<Color, 3>& palette,
                                    CriticalCycleRule rule) {
  std::vector<Color> principal;
  for (auto p : palette) {
    int count = 0;
    Color even = 0, odd = 0;
    bool ok = true, p_even = false, p_odd = false;
    for (std::size_t pos = 0; pos < along.size() && ok; ++pos) {
      const auto col = along[pos];
      auto& slot = pos % 2 ? odd : even;
      if (col == p) {
        ++count;
        (pos % 2 ? p_odd : p_even) = true;
        continue;
      }
      if (slot == 0)
        slot = col;
      else if (slot != col)
        ok = false;
    }
    if (!ok || count < 2 || even == 0 || odd == 0) continue;
    if (rule == CriticalCycleRule::strict && p_even && p_odd) continue;
    principal.push_back(p);
  }
  return principal;
}

}  // namespace

std::vector<CriticalCycle> find_critical_cycles(const Graph& g, const Coloring& c, const WitnessOptions& opts) {
  require_paired(g, c);
  const int n = g.order();
  SearchBudget budget(opts.cycle_budget, "critical cycle enumeration");
  std::vector<CriticalCycle> found;
  std::vector<Vertex> path;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  std::vector<int> color_count(static_cast<std::size_t>(c.num_colors()) + 1, 0);
  int distinct = 0;

  auto push = [&](Vertex v) {
    path.push_back(v);
    on_path[static_cast<std::size_t>(v)] = 1;
    if (color_count[static_cast<std::size_t>(c[v])]++ == 0) ++distinct;
  };
  auto pop = [&]() {
    auto v = path.back();
    path.pop_back();
    on_path[static_cast<std::size_t>(v)] = 0;
    if (--color_count[static_cast<std::size_t>(c[v])] == 0) --distinct;
  };

  Vertex start = 0;
  std::function<void()> extend = [&]() {
    const Vertex tail = path.back();
    for (auto w : g.neighbors(tail)) {
      if (w == start) {
        // Report each cycle once: the second vertex must be smaller than the last one.
        if (path.size() >= 6 && path.size() % 2 == 0 && distinct == 3 && path[1] < path.back()) {
          std::vector<Color> along;
          along.reserve(path.size());
          for (auto v : path) along.push_back(c[v]);
          std::array<Color, 3> palette{};
          std::size_t filled = 0;
          for (Color col = 1; col <= c.num_colors() && filled < 3; ++col)
            if (color_count[static_cast<std::size_t>(col)]) palette[filled++] = col;
          auto principal = principal_colors(along, palette, opts.rule);
          if (!principal.empty()) found.push_back({path, palette, std::move(principal)});
        }
        continue;
      }
      if (w < start || on_path[static_cast<std::size_t>(w)]) continue;
      if (opts.max_cycle_length > 0 && static_cast<int>(path.size()) >= opts.max_cycle_length) continue;
      if (color_count[static_cast<std::size_t>(c[w])] == 0 && distinct == 3) continue;
      budget.charge();
      push(w);
      extend();
      pop();
    }
  };

  for (start = 0; start < n; ++start) {
    push(start);
    extend();
    pop();
  }
  return found;
}

std::vector<CriticalCycleSystem> build_ccs(const Graph& g, const Coloring& c, Color i,
                                           std::span<const CriticalCycle> cycles) {
  require_paired(g, c);
  std::vector<std::size_t> members;
  for (std::size_t idx = 0; idx < cycles.size(); ++idx)
    if (std::binary_search(cycles[idx].principal.begin(), cycles[idx].principal.end(), i)) members.push_back(idx);

  boost::disjoint_sets_with_storage<> sets(members.size());
  for (std::size_t a = 0; a < members.size(); ++a) sets.make_set(a);
  // Link cycles through each i-colored vertex they share.
  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (auto v : cycles[members[a]].cycle) {
      if (c[v] != i) continue;
      auto& o = owner[static_cast<std::size_t>(v)];
      if (o < 0)
        o = static_cast<int>(a);
      else
        sets.union_set(static_cast<std::size_t>(o), a);
    }
  }

  std::vector<CriticalCycleSystem> systems;
  std::vector<int> system_of_root(members.size(), -1);
  for (std::size_t a = 0; a < members.size(); ++a) {
    auto root = sets.find_set(a);
    if (system_of_root[root] < 0) {
      system_of_root[root] = static_cast<int>(systems.size());
      systems.push_back({});
      systems.back().principal_color = i;
    }
    systems[static_cast<std::size_t>(system_of_root[root])].cycles.push_back(cycles[members[a]]);
  }
  for (auto& s : systems) {
    for (const auto& cyc : s.cycles) s.vertex_set.insert(s.vertex_set.end(), cyc.cycle.begin(), cyc.cycle.end());
    std::sort(s.vertex_set.begin(), s.vertex_set.end());
    s.vertex_set.erase(std::unique(s.vertex_set.begin(), s.vertex_set.end()), s.vertex_set.end());
    for (auto v : s.vertex_set)
      if (c[v] == i) s.principal_vertices.push_back(v);
  }
  return systems;
}

std::vector<CriticalCycleSystem> build_ccs(const Graph& g, const Coloring& c, Color i, const WitnessOptions& opts) {
  auto cycles = find_critical_cycles(g, c, opts);
  return build_ccs(g, c, i, cycles);
}

bool is_ccs_recolorable(const Graph& g, const Coloring& c, const CriticalCycleSystem& system, std::uint64_t budget) {
  require_paired(g, c);
  std::vector<std::vector<Color>> candidates;
  candidates.reserve(system.principal_vertices.size());
  for (auto v : system.principal_vertices) {
    candidates.push_back(available_colors(g, c, v));
    if (candidates.back().empty()) return false;
  }
  SearchBudget nodes(budget, "CCS recoloring search");
  return find_acyclic_reassignment(g, c.assignment(), system.principal_vertices, candidates, nodes)
      .has_value();
}

bool is_acyclic_b_vertex(const Graph& g, const Coloring& c, Vertex v, const WitnessOptions& opts) {
  WitnessAnalysis analysis(g, c, opts);
  return analysis.is_acyclic_b_vertex(v);
}

WitnessAnalysis::WitnessAnalysis(const Graph& g, const Coloring& c, WitnessOptions opts)
    : g_(g), c_(c), opts_(opts), weak_(static_cast<std::size_t>(g.order())) {
  if (!is_acyclic(g, c)) throw PreconditionError("witness analysis needs an acyclic coloring");
}

const std::vector<CriticalCycle>& WitnessAnalysis::critical_cycles() {
  if (!cycles_) cycles_ = find_critical_cycles(g_, c_, opts_);
  return *cycles_;
}

const std::vector<CriticalCycleSystem>& WitnessAnalysis::systems(Color i) {
  auto it = systems_.find(i);
  if (it == systems_.end()) it = systems_.emplace(i, build_ccs(g_, c_, i, critical_cycles())).first;
  return it->second;
}

bool WitnessAnalysis::system_recolorable(Color i, std::size_t index) {
  auto key = std::make_pair(i, index);
  auto it = recolorable_.find(key);
  if (it == recolorable_.end())
    it = recolorable_.emplace(key, is_ccs_recolorable(g_, c_, systems(i).at(index), opts_.recolor_budget)).first;
  return it->second;
}

Certificate WitnessAnalysis::certify(Vertex v) {
  auto& weak = weak_[static_cast<std::size_t>(v)];
  if (!weak) weak = available_colors(g_, c_, v).empty();
  if (*weak) return missing_colors(g_, c_, v).empty() ? Certificate::b_vertex : Certificate::weak_acyclic;
  const Color i = c_[v];
  const auto& list = systems(i);
  for (std::size_t idx = 0; idx < list.size(); ++idx) {
    if (!std::binary_search(list[idx].principal_vertices.begin(), list[idx].principal_vertices.end(), v)) continue;
    if (!system_recolorable(i, idx)) return Certificate::non_recolorable_system;
  }
  return Certificate::none;
}

std::optional<std::pair<Vertex, Certificate>> WitnessAnalysis::class_witness(Color i) {
  std::optional<std::pair<Vertex, Certificate>> best;
  std::vector<Vertex> members;
  for (Vertex v = 0; v < g_.order(); ++v)
    if (c_[v] == i) members.push_back(v);
  // Cheap certificates first so cycle enumeration only runs when nothing weaker settles the class.
  for (auto v : members) {
    auto& weak = weak_[static_cast<std::size_t>(v)];
    if (!weak) weak = available_colors(g_, c_, v).empty();
    if (*weak) {
      auto cert = missing_colors(g_, c_, v).empty() ? Certificate::b_vertex : Certificate::weak_acyclic;
      if (cert == Certificate::b_vertex) return std::make_pair(v, cert);
      if (!best) best = std::make_pair(v, cert);
    }
  }
  if (best) return best;
  for (auto v : members)
    if (auto cert = certify(v); cert != Certificate::none) return std::make_pair(v, cert);
  return std::nullopt;
}

bool WitnessAnalysis::every_class_certified() {
  for (Color i = 1; i <= c_.num_colors(); ++i)
    if (!class_witness(i)) return false;
  return true;
}

}  // namespace abchrom
