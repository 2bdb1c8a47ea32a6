#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "abchrom/coloring.hpp"

namespace abchrom {

/// Which even 3-colored cycles count as critical for a principal color i.
enum class CriticalCycleRule {
  /// Once the i-colored vertices are removed, the remaining vertices on even positions share one
  /// color and those on odd positions share another, so some recoloring of the i vertices can
  /// turn the cycle bicolored. Includes every strict cycle.
  alternating,
  /// Additionally one non-principal color sits on every second vertex (i occupies one parity only).
  strict,
};

/// An even cycle on exactly three colors, at least one of them principal.
struct CriticalCycle {
  std::vector<Vertex> cycle;       ///< distinct vertices in cyclic order, starting at the smallest
  std::array<Color, 3> colors{};   ///< ascending
  std::vector<Color> principal;    ///< ascending; one or two colors
};

/// Critical cycle system for one principal color: critical cycles glued together through shared
/// vertices of the principal color.
struct CriticalCycleSystem {
  Color principal_color = 0;
  std::vector<CriticalCycle> cycles;
  std::vector<Vertex> vertex_set;          ///< union of the cycles, ascending
  std::vector<Vertex> principal_vertices;  ///< members colored principal_color, ascending
};

struct WitnessOptions {
  CriticalCycleRule rule = CriticalCycleRule::alternating;
  int max_cycle_length = 0;                    ///< 0 = unbounded
  std::uint64_t cycle_budget = 50'000'000;     ///< DFS nodes for cycle enumeration
  std::uint64_t recolor_budget = 10'000'000;   ///< backtracking nodes per recolorability test
};

/// Why a vertex certifies its color class, strongest reason first.
enum class Certificate { b_vertex, weak_acyclic, non_recolorable_system, none };

const char* to_string(Certificate cert);
const char* to_string(CriticalCycleRule rule);

bool is_b_vertex(const Graph& g, const Coloring& c, Vertex v);

/// Missing colors l of v for which some j in CN(v) has a cycle in G[V_j ∪ V_l ∪ {v}],
/// i.e. a (j,l)-alternating even path joins two j-colored neighbors of v.
std::vector<Color> blocked_colors(const Graph& g, const Coloring& c, Vertex v);

/// Every missing color is blocked. Throws PreconditionError if c is not acyclic.
bool is_weak_acyclic_b_vertex(const Graph& g, const Coloring& c, Vertex v);

/// Missing colors that are not blocked.
std::vector<Color> available_colors(const Graph& g, const Coloring& c, Vertex v);

/// Exhaustive over simple cycles of length >= 6; each cycle reported once.
std::vector<CriticalCycle> find_critical_cycles(const Graph& g, const Coloring& c, const WitnessOptions& opts = {});

/// Partition of the i-principal cycles into systems; two cycles land in one system when a chain of
/// cycles links them, consecutive cycles sharing an i-colored vertex. Ordered by first member.
std::vector<CriticalCycleSystem> build_ccs(const Graph& g, const Coloring& c, Color i,
                                           std::span<const CriticalCycle> cycles);
std::vector<CriticalCycleSystem> build_ccs(const Graph& g, const Coloring& c, Color i, const WitnessOptions& opts = {});

/// Some choice of available colors for the principal-color vertices of the system keeps the
/// coloring acyclic (only those vertices move).
bool is_ccs_recolorable(const Graph& g, const Coloring& c, const CriticalCycleSystem& system,
                        std::uint64_t budget = 10'000'000);

bool is_acyclic_b_vertex(const Graph& g, const Coloring& c, Vertex v, const WitnessOptions& opts = {});

/// Cached witness queries for one (graph, coloring) pair. Critical cycles are enumerated on first
/// need only, so colorings certified by (weak) b-vertices never pay for it.
class WitnessAnalysis {
 public:
  /// Throws PreconditionError unless c is an acyclic coloring of g.
  WitnessAnalysis(const Graph& g, const Coloring& c, WitnessOptions opts = {});

  Certificate certify(Vertex v);
  bool is_acyclic_b_vertex(Vertex v) { return certify(v) != Certificate::none; }

  /// First vertex of the class with the strongest certificate, if any.
  std::optional<std::pair<Vertex, Certificate>> class_witness(Color i);
  bool every_class_certified();

  const std::vector<CriticalCycle>& critical_cycles();
  const std::vector<CriticalCycleSystem>& systems(Color i);
  bool system_recolorable(Color i, std::size_t index);

  const Graph& graph() const noexcept { return g_; }
  const Coloring& coloring() const noexcept { return c_; }

 private:
  const Graph& g_;
  const Coloring& c_;
  WitnessOptions opts_;
  std::vector<std::optional<bool>> weak_;
  std::optional<std::vector<CriticalCycle>> cycles_;
  std::map<Color, std::vector<CriticalCycleSystem>> systems_;
  std::map<std::pair<Color, std::size_t>, bool> recolorable_;
};

}  // namespace abchrom
