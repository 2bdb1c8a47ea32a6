#include <gtest/gtest.h>

#include <abchrom/corpus.hpp>
#include <abchrom/exact.hpp>
#include <abchrom/families.hpp>
#include <abchrom/fixtures.hpp>
#include <abchrom/recolor.hpp>

#include "oracles.hpp"

namespace {

using namespace abchrom;
namespace fx = abchrom::fixtures;

Graph family(const char* spec) { return generate(parse_family(spec)).graph; }
Graph c4() { return family("cycle:4"); }

TEST(RecoloringStep, FourCycleTrivial) {
  auto out = recoloring_step(c4(), Coloring({1, 2, 3, 4}), 4);
  ASSERT_TRUE(out.result.has_value());
  EXPECT_EQ(out.result->num_colors(), 3);
  EXPECT_TRUE(is_proper(c4(), *out.result));
  ASSERT_EQ(out.assignment_log.size(), 1u);
  EXPECT_EQ(out.assignment_log[0].first, 3);
  EXPECT_EQ(out.assignment_log[0].second, 2);
}

TEST(RecoloringStep, AbsentWhenClassHasBVertex) {
  auto k3 = family("complete:3");
  for (Color i = 1; i <= 3; ++i) EXPECT_FALSE(recoloring_step(k3, Coloring({1, 2, 3}), i).result);
  EXPECT_FALSE(recoloring_step(family("path:3"), Coloring({1, 2, 1}), 2).result);
}

TEST(RecoloringStep, ShiftsHigherColorsDown) {
  auto g = Graph::build(3, {{0, 1}});
  auto out = recoloring_step(g, Coloring({1, 2, 3}), 2);
  ASSERT_TRUE(out.result);
  EXPECT_EQ(out.removed_color, 2);
  EXPECT_EQ(*out.result, Coloring({1, 2, 2}));
}

TEST(AcyclicRecoloringStep, FigureOneGraph) {
  auto f = fx::figure1_g();
  const auto& g = f.graph.graph;
  auto first = acyclic_recoloring_step(g, f.coloring("z2"), 3);
  ASSERT_TRUE(first.result);
  EXPECT_TRUE(is_acyclic(g, *first.result));
  EXPECT_EQ(first.result->num_colors(), 3);
  EXPECT_FALSE(acyclic_recoloring_step(g, f.coloring("z4"), 3).result);
}

TEST(AcyclicRecoloringStep, FourCycleWitness) {
  for (Color i = 1; i <= 3; ++i) EXPECT_FALSE(acyclic_recoloring_step(c4(), Coloring({1, 2, 1, 3}), i).result);
  // The proper step can merge classes 2 and 3 but only by closing a bicolored 4-cycle.
  EXPECT_TRUE(recoloring_step(c4(), Coloring({1, 2, 1, 3}), 3).result);
}

TEST(AcyclicRecoloringStep, BudgetIsHard) {
  auto f = fx::figure1_g();
  StepOptions opts;
  opts.budget = 1;
  EXPECT_THROW(acyclic_recoloring_step(f.graph.graph, f.coloring("z4"), 3, opts), BudgetExceeded);
}

TEST(Algorithm, Examples) {
  EXPECT_EQ(run_recoloring_algorithm(family("empty:5")).result.num_colors(), 1);
  EXPECT_EQ(run_recoloring_algorithm(c4()).result.num_colors(), 3);
  auto k5 = run_recoloring_algorithm(family("complete:5"));
  EXPECT_EQ(k5.result.num_colors(), 5);
  EXPECT_TRUE(k5.steps.empty());
}

TEST(Algorithm, DeterministicPerSeed) {
  auto g = fx::figure2().graph.graph;
  AlgorithmOptions opts;
  opts.strategy = Strategy::random;
  opts.choice = ColorChoice::random;
  opts.seed = 99;
  auto a = run_recoloring_algorithm(g, opts);
  auto b = run_recoloring_algorithm(g, opts);
  EXPECT_EQ(a.result, b.result);
  EXPECT_EQ(a.steps.size(), b.steps.size());
}

// Seeded runs on P7 land in [A, A_b] computed by the partition oracle, and every output is minimal.
TEST(Algorithm, PathSevenSandwich) {
  auto p7 = family("path:7");
  auto inv = oracle::invariants(p7);
  ASSERT_EQ(inv.acyclic_chromatic, 2);
  ASSERT_EQ(inv.ab, 3);
  const auto cycles = oracle::simple_cycles(p7);
  const Strategy strategies[] = {Strategy::lowest_index, Strategy::random, Strategy::largest_class};
  for (int run = 0; run < 100; ++run) {
    AlgorithmOptions opts;
    opts.strategy = strategies[run % 3];
    opts.choice = ColorChoice::random;
    opts.seed = static_cast<std::uint64_t>(run);
    auto out = run_recoloring_algorithm(p7, opts).result;
    EXPECT_GE(out.num_colors(), inv.acyclic_chromatic);
    EXPECT_LE(out.num_colors(), inv.ab);
    EXPECT_TRUE(oracle::minimal(p7, out.assignment(), true, cycles));
  }
}

TEST(MinimalByDefinition, Fixtures) {
  auto c8 = fx::figure1_c8();
  EXPECT_TRUE(is_minimal_by_definition(c8.graph.graph, c8.coloring("c"), Variant::acyclic));
  auto f2 = fx::figure2();
  EXPECT_TRUE(is_minimal_by_definition(f2.graph.graph, f2.coloring("c"), Variant::acyclic));
  for (const auto& name : fx::names()) {
    auto f = fx::by_name(name);
    for (const auto& [key, c] : f.colorings) {
      if (!is_acyclic(f.graph.graph, c)) continue;
      EXPECT_EQ(is_minimal_by_definition(f.graph.graph, c, Variant::acyclic), is_minimal_by_witnesses(f.graph.graph, c))
          << name << " " << key;
    }
    EXPECT_FALSE(is_minimal_by_definition(f.graph.graph, trivial_coloring(f.graph.graph), Variant::acyclic)) << name;
  }
}

TEST(MinimalByWitnesses, Examples) {
  EXPECT_TRUE(is_minimal_by_witnesses(family("empty:4"), Coloring({1, 1, 1, 1})));
  EXPECT_TRUE(is_minimal_by_witnesses(c4(), Coloring({1, 2, 1, 3})));
}

TEST(MinimalByDefinition, MatchesOracleForBothVariants) {
  auto graphs = corpus::connected_graphs_up_to(5);
  for (const auto& g : corpus::random_graphs(30, 6, 7, 53)) graphs.push_back(g);
  for (const auto& g : graphs) {
    const auto cycles = oracle::simple_cycles(g);
    for (const auto& c : all_colorings(g)) {
      EXPECT_EQ(is_minimal_by_definition(g, c, Variant::proper), oracle::minimal(g, c.assignment(), false, cycles));
      if (oracle::acyclic(g, c.assignment(), cycles))
        EXPECT_EQ(is_minimal_by_definition(g, c, Variant::acyclic), oracle::minimal(g, c.assignment(), true, cycles));
    }
  }
}

TEST(Names, ToString) {
  EXPECT_STREQ(to_string(Variant::acyclic), "acyclic");
  EXPECT_STREQ(to_string(Strategy::largest_class), "largest-class");
}

}  // namespace
