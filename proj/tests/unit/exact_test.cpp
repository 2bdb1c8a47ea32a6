#include <gtest/gtest.h>

#include <abchrom/corpus.hpp>
#include <abchrom/exact.hpp>
#include <abchrom/families.hpp>

#include "oracles.hpp"

namespace {

using namespace abchrom;

Graph family(const std::string& spec) { return generate(parse_family(spec)).graph; }

std::size_t count(const Graph& g, ColoringFilter f) { return all_colorings(g, {f}).size(); }

TEST(Enumerate, SmallExamples) {
  auto k2 = family("complete:2");
  auto parts = all_colorings(k2);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0], Coloring({1, 2}));
  EXPECT_EQ(count(family("path:3"), ColoringFilter::proper), 2u);
  auto c4 = family("cycle:4");
  auto proper = all_colorings(c4);
  auto acyclic = all_colorings(c4, {ColoringFilter::acyclic});
  EXPECT_EQ(proper.size(), acyclic.size() + 1);
  EXPECT_EQ(std::find(acyclic.begin(), acyclic.end(), Coloring({1, 2, 1, 2})), acyclic.end());
}

TEST(Enumerate, BellNumbersOnEmptyGraphs) {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (int n = 0; n < 8; ++n) EXPECT_EQ(count(Graph::build(n, {}), ColoringFilter::proper), bell[n]);
}

TEST(Enumerate, LexicographicAndCapped) {
  auto g = family("path:4");
  auto all = all_colorings(g);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), [](const Coloring& a, const Coloring& b) {
    return a.assignment() < b.assignment();
  }));
  for (const auto& c : all_colorings(g, {ColoringFilter::proper, 2})) EXPECT_LE(c.num_colors(), 2);
  int seen = 0;
  enumerate_colorings(g, {}, [&](const Coloring&) { return ++seen < 3; });
  EXPECT_EQ(seen, 3);
  EXPECT_THROW(all_colorings(family("empty:8"), {ColoringFilter::proper, 0, 100}), BudgetExceeded);
}

TEST(Enumerate, CountsMatchOracle) {
  for (const auto& g : corpus::random_graphs(80, 1, 7, 61)) {
    const auto cycles = oracle::simple_cycles(g);
    std::size_t proper = 0, acyclic = 0;
    oracle::for_each_partition(g.order(), [&](const oracle::Colors& c) {
      if (!oracle::proper(g, c)) return;
      ++proper;
      if (oracle::acyclic(g, c, cycles)) ++acyclic;
    });
    EXPECT_EQ(count(g, ColoringFilter::proper), proper);
    EXPECT_EQ(count(g, ColoringFilter::acyclic), acyclic);
  }
}

TEST(ExactInvariants, MatchOracle) {
  auto graphs = corpus::connected_graphs_up_to(5);
  for (const auto& g : corpus::random_graphs(60, 1, 7, 67)) graphs.push_back(g);
  for (const auto& g : graphs) {
    auto r = exact_invariants(g, {.with_m_a = false});
    auto o = oracle::invariants(g);
    EXPECT_EQ(r.chi, o.chi);
    EXPECT_EQ(r.acyclic_chromatic, o.acyclic_chromatic);
    EXPECT_EQ(r.phi, o.phi);
    EXPECT_EQ(r.ab, o.ab);
    EXPECT_EQ(r.m_a, -1);
    EXPECT_EQ(r.chi_witness.num_colors(), r.chi);
    EXPECT_EQ(r.ab_witness.num_colors(), r.ab);
    EXPECT_EQ(r.phi_witness.num_colors(), r.phi);
  }
}

TEST(ExactInvariants, PathsAndCompleteGraphs) {
  for (int l = 5; l <= 8; ++l) EXPECT_EQ(exact_invariants(family("path:" + std::to_string(l))).ab, 3) << l;
  for (int n = 1; n <= 6; ++n) {
    auto r = exact_invariants(family("complete:" + std::to_string(n)));
    EXPECT_EQ(r.ab, n);
    EXPECT_EQ(r.omega, n);
  }
}

TEST(ExactInvariants, BalancedCompleteBipartite) {
  for (int n = 1; n <= 4; ++n) {
    auto r = exact_invariants(family("complete_bipartite:" + std::to_string(n) + "," + std::to_string(n)),
                              {.with_m_a = false});
    EXPECT_EQ(r.phi, 2) << n;
    EXPECT_EQ(r.ab, n + 1) << n;
  }
}

TEST(ExactInvariants, BudgetIsHard) {
  EXPECT_THROW(exact_invariants(family("empty:9"), {.partition_budget = 1000}), BudgetExceeded);
}

TEST(CliqueNumber, MatchesSubsetSearch) {
  for (const auto& g : corpus::random_graphs(100, 1, 10, 71)) {
    int best = 0;
    const int n = g.order();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> s;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1u) s.push_back(v);
      bool clique = true;
      for (std::size_t a = 0; a < s.size() && clique; ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
          if (!g.adjacent(s[a], s[b])) clique = false;
      if (clique) best = std::max(best, static_cast<int>(s.size()));
    }
    std::vector<Vertex> witness;
    EXPECT_EQ(clique_number(g, &witness), best);
    EXPECT_EQ(static_cast<int>(witness.size()), best);
  }
}

TEST(MDegree, Examples) {
  EXPECT_EQ(m_degree(family("path:5")), 3);
  for (int n = 1; n <= 3; ++n) {
    EXPECT_EQ(m_degree(family("star_of_stars:" + std::to_string(n))), n + 2);
    EXPECT_EQ(m_degree(family("roof:" + std::to_string(n))), n + 4);
  }
  std::vector<int> empty;
  EXPECT_EQ(m_degree(empty), 0);
  for (const auto& g : corpus::random_graphs(50, 1, 9, 73)) {
    std::vector<int> deg;
    for (int v = 0; v < g.order(); ++v) deg.push_back(g.degree(v));
    EXPECT_EQ(m_degree(g), oracle::m_from(deg));
  }
}

}  // namespace

namespace {

// Seven vertices with a b-coloring on 4 colors while every acyclic 4-coloring admits an acyclic step.
TEST(ExactInvariants, AcyclicBChromaticBelowBChromatic) {
  auto g = Graph::build(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 5}, {4, 5}, {0, 6}, {2, 6}, {3, 6}, {4, 6}});
  auto o = oracle::invariants(g);
  EXPECT_EQ(o.phi, 4);
  EXPECT_EQ(o.ab, 3);
  oracle::Colors b{1, 2, 3, 4, 1, 4, 2};
  EXPECT_TRUE(oracle::every_class_has_b_vertex(g, b));
  EXPECT_FALSE(oracle::acyclic(g, b));
  auto r = exact_invariants(g);
  EXPECT_EQ(r.phi, 4);
  EXPECT_EQ(r.ab, 3);
  EXPECT_LE(r.ab, r.m_a);
}

}  // namespace
