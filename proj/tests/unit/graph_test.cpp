#include <gtest/gtest.h>

#include <abchrom/corpus.hpp>
#include <abchrom/error.hpp>
#include <abchrom/families.hpp>
#include <abchrom/graph.hpp>

#include "oracles.hpp"

namespace {

using abchrom::Edge;
using abchrom::Graph;
using abchrom::InvalidGraph;

Graph family(const char* spec) { return abchrom::generate(abchrom::parse_family(spec)).graph; }

TEST(Graph, SingleEdge) {
  auto g = Graph::build(2, {{0, 1}});
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(g.size(), 1);
  EXPECT_EQ(abchrom::degree_stats(g).max_degree, 1);
}

TEST(Graph, FourCycleIsTwoRegular) {
  auto g = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  for (int v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 2);
  EXPECT_EQ(g.edges().back(), Edge(0, 3));
  EXPECT_TRUE(g.adjacent(3, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(Graph, RejectsBadInput) {
  auto kind = [](int n, std::initializer_list<Edge> e) {
    try {
      Graph::build(n, e);
    } catch (const InvalidGraph& err) {
      return err.kind();
    }
    ADD_FAILURE() << "no error";
    return InvalidGraph::Kind::negative_order;
  };
  EXPECT_EQ(kind(3, {{0, 0}}), InvalidGraph::Kind::self_loop);
  EXPECT_EQ(kind(3, {{0, 3}}), InvalidGraph::Kind::vertex_out_of_range);
  EXPECT_EQ(kind(3, {{0, 1}, {1, 0}}), InvalidGraph::Kind::duplicate_edge);
  EXPECT_EQ(kind(-1, {}), InvalidGraph::Kind::negative_order);
}

TEST(Graph, NeighborsSorted) {
  auto g = Graph::build(4, {{3, 0}, {0, 1}, {2, 0}});
  auto nb = g.neighbors(0);
  EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
  EXPECT_EQ(g.edges().front(), Edge(0, 3));
}

TEST(DegreeStats, PathAndComplete) {
  auto s = abchrom::degree_stats(family("path:5"));
  EXPECT_EQ(s.max_degree, 2);
  EXPECT_EQ(s.min_degree, 1);
  EXPECT_EQ(s.sequence, (std::vector<int>{2, 2, 2, 1, 1}));
  auto k = abchrom::degree_stats(family("complete:4"));
  EXPECT_EQ(k.max_degree, 3);
  EXPECT_EQ(k.min_degree, 3);
}

TEST(DegreeStats, StarOfStars) {
  auto s = abchrom::degree_stats(family("star_of_stars:2"));
  EXPECT_EQ(std::count(s.sequence.begin(), s.sequence.end(), 3), 4);
  EXPECT_EQ(std::count(s.sequence.begin(), s.sequence.end(), 1), 6);
  EXPECT_EQ(s.sequence.size(), 10u);
}

TEST(Join, WheelFromCycle) {
  auto w = abchrom::join(family("complete:1"), family("cycle:5"));
  EXPECT_EQ(w.order(), 6);
  EXPECT_EQ(w.size(), 10);
  EXPECT_EQ(w.degree(0), 5);
}

TEST(Join, CompleteBipartiteFromEmpties) {
  auto g = abchrom::join(Graph::build(2, {}), Graph::build(3, {}));
  EXPECT_EQ(g.size(), 6);
  EXPECT_FALSE(g.adjacent(0, 1));
  EXPECT_FALSE(g.adjacent(2, 4));
  for (int a = 0; a < 2; ++a)
    for (int b = 2; b < 5; ++b) EXPECT_TRUE(g.adjacent(a, b));
  auto k2 = abchrom::join(Graph::build(1, {}), Graph::build(1, {}));
  EXPECT_EQ(k2.size(), 1);
}

TEST(Join, DegreesAddOtherOrder) {
  for (const auto& g : abchrom::corpus::random_graphs(20, 1, 6, 7)) {
    for (const auto& h : abchrom::corpus::random_graphs(3, 1, 5, 11)) {
      auto j = abchrom::join(g, h);
      for (int v = 0; v < g.order(); ++v) EXPECT_EQ(j.degree(v), g.degree(v) + h.order());
      for (int v = 0; v < h.order(); ++v) EXPECT_EQ(j.degree(v + g.order()), h.degree(v) + g.order());
    }
  }
}

TEST(OddCycleGraph, Examples) {
  EXPECT_TRUE(abchrom::is_odd_cycle_graph(family("cycle:5")));
  EXPECT_FALSE(abchrom::is_odd_cycle_graph(family("cycle:4")));
  auto bowtie = Graph::build(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  auto diamond = Graph::build(4, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}});
  EXPECT_TRUE(abchrom::is_odd_cycle_graph(bowtie));
  EXPECT_FALSE(abchrom::is_odd_cycle_graph(diamond));
  EXPECT_TRUE(abchrom::is_cactus(bowtie));
  EXPECT_FALSE(abchrom::is_cactus(diamond));
}

TEST(OddCycleGraph, MatchesCycleEnumeration) {
  for (const auto& g : abchrom::corpus::connected_graphs_up_to(6)) {
    auto cycles = oracle::simple_cycles(g);
    bool no_even = std::none_of(cycles.begin(), cycles.end(), [](const auto& c) { return c.size() % 2 == 0; });
    EXPECT_EQ(abchrom::is_odd_cycle_graph(g), no_even);
  }
}

TEST(Biconnected, BowtieHasTwoBlocks) {
  auto bowtie = Graph::build(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  EXPECT_EQ(abchrom::biconnected_components(bowtie).size(), 2u);
  EXPECT_TRUE(abchrom::biconnected_components(Graph::build(3, {})).empty());
}

TEST(Graph, InducedSubgraphAndConnectivity) {
  auto c5 = family("cycle:5");
  EXPECT_TRUE(abchrom::is_connected(c5));
  std::vector<int> keep{0, 1, 3};
  auto sub = abchrom::induced_subgraph(c5, keep);
  EXPECT_EQ(sub.order(), 3);
  EXPECT_EQ(sub.size(), 1);
  EXPECT_FALSE(abchrom::is_connected(sub));
}

}  // namespace
