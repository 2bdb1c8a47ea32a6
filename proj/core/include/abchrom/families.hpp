#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "abchrom/coloring.hpp"
#include "abchrom/graph.hpp"

namespace abchrom {

enum class Family {
  empty,
  path,
  cycle,
  complete,
  complete_bipartite,
  star,
  wheel,
  fan,
  complete_split,
  star_of_stars,
  roof,
  quad_extremal,
  join_of,
  figure,
};

/// A family with its integer parameters, e.g. path:7, complete_bipartite:2,3, join(cycle:5,cycle:5).
/// Figures carry their fixture name in `name`.
struct FamilySpec {
  Family family = Family::empty;
  std::vector<int> params;
  std::vector<FamilySpec> parts;  ///< the two factors of a join
  std::string name;

  std::string to_string() const;
};

/// Grammar: NAME ":" INT ("," INT)* | "join(" SPEC "," SPEC ")" | figure name (fig1-c8, fig1-g, fig2, fig4, fig7).
/// Names: empty path cycle complete complete_bipartite star wheel fan complete_split star_of_stars roof quad.
/// Throws InvalidFamily.
FamilySpec parse_family(std::string_view text);

struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;  ///< labels[v] names vertex v
};

/// Throws InvalidFamily on parameters the construction does not accept.
LabeledGraph generate(const FamilySpec& spec);

/// The explicit witness coloring for roof, quad, path (l >= 5, c(v_i) = i mod 3 + 1), cycle (k >= 3) and figure fixtures.
/// Throws InvalidFamily for other specs.
Coloring reference_coloring(const FamilySpec& spec);
bool has_reference_coloring(const FamilySpec& spec);

/// Closed-form A_b, possibly an interval [lo, hi].
struct AbValue {
  int lo = 0;
  int hi = 0;
  bool exact() const noexcept { return lo == hi; }
};

/// Throws InvalidFamily when the parameters are outside the range the closed form is proven for.
AbValue formula_ab(const FamilySpec& spec);

/// [m(T) - 1, m(T)]; throws PreconditionError unless g is a tree.
AbValue tree_ab_interval(const Graph& g);

}  // namespace abchrom
