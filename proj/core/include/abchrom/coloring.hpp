#pragma once

#include <optional>
#include <set>
#include <span>
#include <vector>

#include "abchrom/budget.hpp"
#include "abchrom/graph.hpp"

namespace abchrom {

/// Colors are 1-based.
using Color = int;

/// Total map vertex -> color in [1..k] with every color in [1..k] used.
class Coloring {
 public:
  Coloring() = default;

  /// k is taken as the largest color. Throws InvalidColoring if a color is < 1 or some color in [1..k] is unused.
  explicit Coloring(std::vector<Color> assignment);
  /// As above, but k is given and checked against the assignment.
  Coloring(std::vector<Color> assignment, int k);

  int num_colors() const noexcept { return k_; }
  int size() const noexcept { return static_cast<int>(colors_.size()); }
  Color operator[](Vertex v) const { return colors_[static_cast<std::size_t>(v)]; }
  const std::vector<Color>& assignment() const noexcept { return colors_; }

  /// classes()[i - 1] is the sorted vertex list of color i.
  std::vector<std::vector<Vertex>> classes() const;

  /// Relabels colors by order of first appearance (vertex 0 gets 1, ...).
  Coloring canonical() const;

  bool operator==(const Coloring&) const = default;

 private:
  std::vector<Color> colors_;
  int k_ = 0;
};

struct ColorNeighborhood {
  std::set<Color> open;    ///< colors on N(v)
  std::set<Color> closed;  ///< open plus c(v)
};

/// Throws SizeMismatch unless c has one color per vertex of g.
void require_paired(const Graph& g, const Coloring& c);

bool is_proper(const Graph& g, const Coloring& c);

/// Every pair of color classes induces a forest. Throws PreconditionError on an improper coloring.
bool is_acyclic(const Graph& g, const Coloring& c);

/// Vertex v gets color v + 1.
Coloring trivial_coloring(const Graph& g);

ColorNeighborhood color_neighborhood(const Graph& g, const Coloring& c, Vertex v);

/// [k] minus the closed color neighborhood, ascending.
std::vector<Color> missing_colors(const Graph& g, const Coloring& c, Vertex v);

/// Searches for new colors for `targets` (pairwise non-adjacent) so that the resulting coloring is
/// proper and acyclic. Targets count as uncolored until placed; every other vertex keeps its color.
///
/// Targets are assigned in the given order and candidates tried in the given order; the first
/// complete assignment found is returned (aligned with `targets`). Each placement is checked
/// incrementally: a new bicolored cycle must pass through the vertex just placed.
std::optional<std::vector<Color>> find_acyclic_reassignment(const Graph& g, const std::vector<Color>& colors,
                                                            std::span<const Vertex> targets,
                                                            const std::vector<std::vector<Color>>& candidates,
                                                            SearchBudget& budget);

/// True when placing color `color` on v (all other colors as in `colors`) closes a cycle that
/// uses only `color` and one other color. Entries equal to 0 mark uncolored vertices.
bool closes_bicolored_cycle(const Graph& g, const std::vector<Color>& colors, Vertex v, Color color);

}  // namespace abchrom
