#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abchrom/coloring.hpp"
#include "abchrom/families.hpp"

namespace abchrom::fixtures {

/// A figure graph with its named colorings.
struct Fixture {
  std::string name;
  LabeledGraph graph;
  std::vector<std::pair<std::string, Coloring>> colorings;

  const Coloring& coloring(std::string_view key) const;
  Vertex vertex(std::string_view label) const;
};

/// 8-cycle colored 1,3,1,3,1,2,1,2; coloring "c".
Fixture figure1_c8();
/// 13-vertex graph with colorings "z2" (c(z) = 2) and "z4" (c(z) = 4).
Fixture figure1_g();
/// 20-vertex critical cycle system example; coloring "c".
Fixture figure2();
/// H_2^1 with the two extra leaves u and y_1^2; coloring "c" (column 1 of the roof(2) reference coloring).
Fixture figure4();
/// 14-vertex graph; "c" with c(x) = 6 and "c-prime" with c(x) = 3.
Fixture figure7();

/// fig1-c8, fig1-g, fig2, fig4, fig7.
std::vector<std::string> names();
/// Throws InvalidFamily on an unknown name.
Fixture by_name(std::string_view name);

}  // namespace abchrom::fixtures
