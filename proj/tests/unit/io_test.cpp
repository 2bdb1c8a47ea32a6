#include <gtest/gtest.h>

#include <abchrom/corpus.hpp>
#include <abchrom/error.hpp>
#include <abchrom/io.hpp>

namespace {

using abchrom::Graph;
using abchrom::GraphFormat;

TEST(ParseGraph, DimacsPath) {
  auto g = abchrom::parse_graph("p edge 3 2\ne 1 2\ne 2 3\n", GraphFormat::dimacs);
  EXPECT_EQ(g, Graph::build(3, {{0, 1}, {1, 2}}));
}

TEST(ParseGraph, DimacsCommentsAndColKeyword) {
  auto g = abchrom::parse_graph("c hello\np col 2 1\nc mid\ne 2 1\n", GraphFormat::dimacs);
  EXPECT_EQ(g.size(), 1);
  EXPECT_TRUE(g.adjacent(0, 1));
}

TEST(ParseGraph, DimacsEdgeCountMismatch) {
  EXPECT_THROW(abchrom::parse_graph("p edge 3 3\ne 1 2\ne 2 3\n", GraphFormat::dimacs), abchrom::ParseError);
}

TEST(ParseGraph, ErrorsCarryLineNumbers) {
  try {
    abchrom::parse_graph("3\n0 1\n1 x\n", GraphFormat::edge_list);
    FAIL();
  } catch (const abchrom::ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  try {
    abchrom::parse_graph("p edge 3 1\nq 1 2\n", GraphFormat::dimacs);
    FAIL();
  } catch (const abchrom::ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(abchrom::parse_graph("3\n0 5\n", GraphFormat::edge_list), abchrom::ParseError);
  EXPECT_THROW(abchrom::parse_graph("", GraphFormat::edge_list), abchrom::ParseError);
  EXPECT_THROW(abchrom::parse_graph("e 1 2\n", GraphFormat::dimacs), abchrom::ParseError);
}

TEST(ParseGraph, ValidationErrorsPassThrough) {
  EXPECT_THROW(abchrom::parse_graph("3\n1 1\n", GraphFormat::edge_list), abchrom::InvalidGraph);
  EXPECT_THROW(abchrom::parse_graph("3\n0 1\n1 0\n", GraphFormat::edge_list), abchrom::InvalidGraph);
}

TEST(SerializeGraph, FourCycleEdgeList) {
  auto c4 = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(abchrom::serialize_graph(c4, GraphFormat::edge_list), "4\n0 1\n1 2\n2 3\n0 3\n");
  EXPECT_EQ(abchrom::serialize_graph(c4, GraphFormat::dimacs, {"c4"}),
            "c c4\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n");
}

TEST(SerializeGraph, RoundTripsRandomGraphs) {
  for (const auto& g : abchrom::corpus::random_graphs(50, 0, 9, 3)) {
    for (auto f : {GraphFormat::edge_list, GraphFormat::dimacs})
      EXPECT_EQ(abchrom::parse_graph(abchrom::serialize_graph(g, f), f), g);
  }
}

TEST(Coloring, TextRoundTrip) {
  auto c = abchrom::parse_coloring("3\n1 2 1 3\n");
  EXPECT_EQ(c.num_colors(), 3);
  EXPECT_EQ(abchrom::serialize_coloring(c), "3\n1 2 1 3\n");
  EXPECT_THROW(abchrom::parse_coloring("3\n1 2 1\n"), abchrom::ParseError);
  EXPECT_THROW(abchrom::parse_coloring("2\n1 2\n1 2\n"), abchrom::ParseError);
  EXPECT_THROW(abchrom::parse_coloring(""), abchrom::ParseError);
}

TEST(Dot, LabelsAndColors) {
  auto g = Graph::build(2, {{0, 1}});
  abchrom::Coloring c({1, 2});
  auto dot = abchrom::to_dot(g, {"a", "b"}, &c);
  EXPECT_NE(dot.find("label=\"a c=1\""), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1;"), std::string::npos);
}

TEST(Format, FromPath) {
  EXPECT_EQ(abchrom::format_from_path("x/roof2.dimacs"), GraphFormat::dimacs);
  EXPECT_EQ(abchrom::format_from_path("a.col"), GraphFormat::dimacs);
  EXPECT_EQ(abchrom::format_from_path("a.txt"), GraphFormat::edge_list);
}

}  // namespace
