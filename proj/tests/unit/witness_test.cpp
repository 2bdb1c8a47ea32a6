#include <gtest/gtest.h>

#include <abchrom/corpus.hpp>
#include <abchrom/exact.hpp>
#include <abchrom/families.hpp>
#include <abchrom/fixtures.hpp>
#include <abchrom/io.hpp>
#include <abchrom/recolor.hpp>
#include <abchrom/witness.hpp>

#include "oracles.hpp"

namespace {

using namespace abchrom;
namespace fx = abchrom::fixtures;

Graph c4() { return Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

bool contains(const std::vector<Color>& v, Color c) { return std::find(v.begin(), v.end(), c) != v.end(); }

TEST(BVertex, Examples) {
  auto p5 = generate(parse_family("path:5")).graph;
  EXPECT_TRUE(is_b_vertex(p5, Coloring({1, 2, 3, 1, 2}), 2));
  EXPECT_TRUE(is_b_vertex(Graph::build(3, {}), Coloring({1, 1, 1}), 1));
  auto star = generate(parse_family("star:3")).graph;
  Coloring c({1, 2, 3, 2});
  ASSERT_TRUE(is_proper(star, c));
  for (Vertex v = 1; v < 4; ++v) EXPECT_FALSE(is_b_vertex(star, c, v));
}

TEST(WeakAcyclic, FigureOneCycle) {
  auto f = fx::figure1_c8();
  const auto& g = f.graph.graph;
  const auto& c = f.coloring("c");
  int weak_in_one = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (c[v] == 1) {
      if (is_weak_acyclic_b_vertex(g, c, v)) ++weak_in_one;
      if (is_b_vertex(g, c, v)) EXPECT_TRUE(is_weak_acyclic_b_vertex(g, c, v));
    } else {
      EXPECT_FALSE(is_weak_acyclic_b_vertex(g, c, v)) << f.graph.labels[static_cast<std::size_t>(v)];
    }
  }
  EXPECT_GT(weak_in_one, 0);
}

TEST(WeakAcyclic, FigureFourTopVertex) {
  auto f = fx::figure4();
  EXPECT_TRUE(is_weak_acyclic_b_vertex(f.graph.graph, f.coloring("c"), f.vertex("y1^1")));
}

TEST(WeakAcyclic, RequiresAcyclicColoring) {
  EXPECT_THROW(is_weak_acyclic_b_vertex(c4(), Coloring({1, 2, 1, 2}), 0), PreconditionError);
}

// Weak acyclic b-vertices and available colors against recolor-and-enumerate-cycles.
TEST(WeakAcyclic, MatchesOracleOnSmallGraphs) {
  auto graphs = corpus::connected_graphs_up_to(5);
  for (const auto& g : corpus::random_graphs(40, 6, 7, 31)) graphs.push_back(g);
  int vertices = 0;
  for (const auto& g : graphs) {
    const auto cycles = oracle::simple_cycles(g);
    for (const auto& c : all_colorings(g, {ColoringFilter::acyclic})) {
      for (Vertex v = 0; v < g.order(); ++v) {
        const bool weak = oracle::weak_acyclic_b_vertex(g, c.assignment(), v, cycles);
        ASSERT_EQ(is_weak_acyclic_b_vertex(g, c, v), weak);
        if (is_b_vertex(g, c, v)) EXPECT_TRUE(weak);
        EXPECT_EQ(available_colors(g, c, v).empty(), weak);
        ++vertices;
      }
    }
  }
  EXPECT_GT(vertices, 10000);
}

TEST(AvailableColors, FigureTwo) {
  auto f = fx::figure2();
  const auto& g = f.graph.graph;
  const auto& c = f.coloring("c");
  EXPECT_EQ(available_colors(g, c, f.vertex("a")), (std::vector<Color>{3}));
  EXPECT_EQ(available_colors(g, c, f.vertex("d")), (std::vector<Color>{3, 5}));
  EXPECT_EQ(available_colors(g, c, f.vertex("f")), (std::vector<Color>{5}));
}

TEST(AvailableColors, FigureOneCycleAndBVertex) {
  auto f = fx::figure1_c8();
  const auto& g = f.graph.graph;
  const auto& c = f.coloring("c");
  EXPECT_EQ(available_colors(g, c, f.vertex("x")), (std::vector<Color>{2}));
  EXPECT_EQ(available_colors(g, c, f.vertex("y")), (std::vector<Color>{2}));
  for (Vertex v = 0; v < g.order(); ++v)
    if (is_b_vertex(g, c, v)) EXPECT_TRUE(available_colors(g, c, v).empty());
}

TEST(CriticalCycles, FigureOneCycleIsDoublyPrincipal) {
  auto f = fx::figure1_c8();
  auto cycles = find_critical_cycles(f.graph.graph, f.coloring("c"));
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_EQ(cycles[0].cycle.size(), 8u);
  EXPECT_EQ(cycles[0].principal, (std::vector<Color>{2, 3}));
  for (Color i : {2, 3}) {
    auto systems = build_ccs(f.graph.graph, f.coloring("c"), i);
    ASSERT_EQ(systems.size(), 1u);
    EXPECT_EQ(systems[0].cycles.size(), 1u);
    EXPECT_FALSE(is_ccs_recolorable(f.graph.graph, f.coloring("c"), systems[0]));
  }
}

TEST(CriticalCycles, FigureTwoSystems) {
  auto f = fx::figure2();
  const auto& g = f.graph.graph;
  const auto& c = f.coloring("c");
  auto one = build_ccs(g, c, 1);
  ASSERT_EQ(one.size(), 1u);
  ASSERT_EQ(one[0].cycles.size(), 2u);
  int single = 0, dual = 0;
  for (const auto& cyc : one[0].cycles) {
    if (cyc.principal == std::vector<Color>{1}) ++single;
    if (cyc.principal == (std::vector<Color>{1, 5})) ++dual;
  }
  EXPECT_EQ(single, 1);
  EXPECT_EQ(dual, 1);
  EXPECT_FALSE(is_ccs_recolorable(g, c, one[0]));
  auto five = build_ccs(g, c, 5);
  ASSERT_EQ(five.size(), 1u);
  ASSERT_EQ(five[0].cycles.size(), 1u);
  EXPECT_EQ(five[0].cycles[0].principal, (std::vector<Color>{1, 5}));
}

TEST(CriticalCycles, FigureOneGraphFirstColoringRecolorable) {
  auto f = fx::figure1_g();
  const auto& g = f.graph.graph;
  auto systems = build_ccs(g, f.coloring("z2"), 3);
  ASSERT_FALSE(systems.empty());
  bool any = false;
  for (const auto& s : systems) {
    if (s.vertex_set.size() >= 8 && is_ccs_recolorable(g, f.coloring("z2"), s)) any = true;
  }
  EXPECT_TRUE(any);
}

TEST(CriticalCycles, TreesAndEmptyResults) {
  auto t = generate(parse_family("star_of_stars:2")).graph;
  auto c = trivial_coloring(t);
  EXPECT_TRUE(find_critical_cycles(t, c).empty());
  EXPECT_TRUE(build_ccs(t, c, 1).empty());
  auto p = generate(parse_family("path:6")).graph;
  EXPECT_TRUE(find_critical_cycles(p, Coloring({1, 2, 3, 1, 2, 3})).empty());
}

// Critical cycles against a filter over all simple cycles.
TEST(CriticalCycles, MatchesOracleUnderBothRules) {
  for (auto rule : {CriticalCycleRule::alternating, CriticalCycleRule::strict}) {
    int found = 0;
    for (const auto& g : corpus::random_graphs(60, 6, 8, 41)) {
      const auto cycles = oracle::simple_cycles(g);
      auto colorings = all_colorings(g, {ColoringFilter::acyclic, 4});
      for (std::size_t idx = 0; idx < colorings.size(); idx += 7) {
        const auto& c = colorings[idx];
        const auto& col = c.assignment();
        std::set<std::pair<oracle::Cycle, std::vector<Color>>> expected;
        for (const auto& cyc : cycles) {
          if (cyc.size() < 6 || cyc.size() % 2 || oracle::distinct_colors(col, cyc) != 3) continue;
          std::vector<Color> principal;
          for (Color p = 1; p <= c.num_colors(); ++p) {
            std::vector<Color> even, odd;
            std::set<std::size_t> parities;
            for (std::size_t t = 0; t < cyc.size(); ++t) {
              const Color x = col[static_cast<std::size_t>(cyc[t])];
              if (x == p)
                parities.insert(t % 2);
              else
                (t % 2 ? odd : even).push_back(x);
            }
            auto uniform = [](const std::vector<Color>& s) {
              return std::all_of(s.begin(), s.end(), [&](Color x) { return x == s.front(); });
            };
            const std::size_t count = cyc.size() - even.size() - odd.size();
            if (count < 2 || !uniform(even) || !uniform(odd)) continue;
            if (rule == CriticalCycleRule::strict && parities.size() != 1) continue;
            principal.push_back(p);
          }
          if (!principal.empty()) expected.emplace(cyc, principal);
        }
        std::set<std::pair<oracle::Cycle, std::vector<Color>>> got;
        for (const auto& cc : find_critical_cycles(g, c, {rule})) {
          auto cyc = cc.cycle;
          if (cyc[1] > cyc.back()) std::reverse(cyc.begin() + 1, cyc.end());
          got.emplace(cyc, cc.principal);
        }
        EXPECT_EQ(got, expected);
        found += static_cast<int>(expected.size());
      }
    }
    EXPECT_GT(found, 0) << to_string(rule);
  }
}

TEST(AcyclicBVertex, FigureOneGraph) {
  auto f = fx::figure1_g();
  const auto& g = f.graph.graph;
  auto class_three = [&](const Coloring& c) {
    bool any = false;
    for (Vertex v = 0; v < g.order(); ++v)
      if (c[v] == 3 && is_acyclic_b_vertex(g, c, v)) any = true;
    return any;
  };
  EXPECT_TRUE(class_three(f.coloring("z4")));
  EXPECT_FALSE(class_three(f.coloring("z2")));
}

TEST(AcyclicBVertex, ImplicationChain) {
  for (const auto& g : corpus::random_graphs(60, 4, 7, 43)) {
    for (const auto& c : all_colorings(g, {ColoringFilter::acyclic})) {
      WitnessAnalysis analysis(g, c);
      for (Vertex v = 0; v < g.order(); ++v) {
        const bool b = is_b_vertex(g, c, v);
        const bool weak = is_weak_acyclic_b_vertex(g, c, v);
        const bool acyclic_b = analysis.is_acyclic_b_vertex(v);
        if (b) EXPECT_TRUE(weak);
        if (weak) EXPECT_TRUE(acyclic_b);
      }
    }
  }
}

TEST(WitnessAnalysis, CertificatesOnFigureSeven) {
  auto f = fx::figure7();
  const auto& g = f.graph.graph;
  const auto& cp = f.coloring("c-prime");
  WitnessAnalysis analysis(g, cp);
  EXPECT_EQ(analysis.certify(f.vertex("v")), Certificate::weak_acyclic);
  EXPECT_TRUE(contains(blocked_colors(g, cp, f.vertex("v")), cp[f.vertex("y")]));
  EXPECT_TRUE(analysis.every_class_certified());
  EXPECT_THROW(WitnessAnalysis(g, f.coloring("c")), PreconditionError);
}

// Theorem 3 spot check against the naive minimality oracle.
TEST(MinimalByWitnesses, MatchesNaiveDefinition) {
  auto graphs = corpus::connected_graphs_up_to(5);
  for (const auto& g : corpus::random_graphs(30, 6, 7, 47)) graphs.push_back(g);
  int checked = 0;
  for (const auto& g : graphs) {
    const auto cycles = oracle::simple_cycles(g);
    for (const auto& c : all_colorings(g, {ColoringFilter::acyclic})) {
      ASSERT_EQ(is_minimal_by_witnesses(g, c), oracle::minimal(g, c.assignment(), true, cycles))
          << serialize_coloring(c);
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(MinimalByWitnesses, StrictRuleMissesAlternatingCycle) {
  auto c6 = generate(parse_family("cycle:6")).graph;
  Coloring c({1, 2, 3, 1, 3, 2});
  ASSERT_TRUE(is_acyclic(c6, c));
  EXPECT_TRUE(oracle::minimal_acyclic(c6, c.assignment()));
  EXPECT_TRUE(is_minimal_by_witnesses(c6, c));
  WitnessOptions strict;
  strict.rule = CriticalCycleRule::strict;
  EXPECT_FALSE(is_minimal_by_witnesses(c6, c, strict));
}

// Graphs where every maximum minimal acyclic coloring needs a non-recolorable system.
TEST(MinimalByWitnesses, SystemDisjunctNeededAtMaximum) {
  const std::vector<std::pair<Graph, int>> cases{
      {Graph::build(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 6}, {4, 6}, {5, 7}, {6, 7}}), 4},
      {Graph::build(9, {{0, 1}, {0, 8}, {1, 3}, {1, 7}, {2, 4}, {2, 6}, {2, 8}, {4, 5}, {5, 7}, {5, 8}, {6, 7}}), 4}};
  for (const auto& [g, want] : cases) {
    const auto cycles = oracle::simple_cycles(g);
    int ab = 0, weak_only = 0;
    oracle::for_each_partition(g.order(), [&](const oracle::Colors& col) {
      if (!oracle::acyclic(g, col, cycles) || !oracle::minimal(g, col, true, cycles)) return;
      const int k = oracle::num_colors(col);
      ab = std::max(ab, k);
      for (int i = 1; i <= k; ++i) {
        bool weak = false;
        for (int v = 0; v < g.order(); ++v)
          if (col[static_cast<std::size_t>(v)] == i && oracle::weak_acyclic_b_vertex(g, col, v, cycles)) weak = true;
        if (!weak) return;
      }
      weak_only = std::max(weak_only, k);
    });
    EXPECT_EQ(ab, want);
    EXPECT_EQ(weak_only, want - 1);
    EXPECT_EQ(exact_invariants(g, {.with_m_a = false}).ab, want);
  }
}

}  // namespace
