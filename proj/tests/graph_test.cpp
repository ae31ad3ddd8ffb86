#include <gtest/gtest.h>

#include <cstdlib>

#include "oddramsey/graph.hpp"

using namespace oddramsey;

namespace {
ColouredGraph path_graph() { return ColouredGraph(4, 2, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}}); }
}  // namespace

TEST(ColouredGraph, BasicQueries) {
  auto g = path_graph();
  EXPECT_EQ(g.n(), 4);
  EXPECT_EQ(g.r(), 2);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.colour(1, 2), 2);
  EXPECT_EQ(g.colour(2, 1), 2);
  EXPECT_EQ(g.colour(0, 3), 0);
  EXPECT_EQ(g.colour(0, 9), 0);
  EXPECT_TRUE(g.adjacent(2, 3));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.min_degree(), 1);
  EXPECT_FALSE(g.is_complete());
  EXPECT_EQ(g.neighbours(1), (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(g.used_colours(), (std::vector<Colour>{1, 2}));
}

TEST(ColouredGraph, CompleteFactory) {
  auto g = ColouredGraph::complete(5, 3, [](Vertex u, Vertex v) { return (u + v) % 3 + 1; });
  EXPECT_TRUE(g.is_complete());
  EXPECT_EQ(g.edge_count(), 10u);
  EXPECT_EQ(g.min_degree(), 4);
  EXPECT_EQ(g.colour(1, 4), (1 + 4) % 3 + 1);
  EXPECT_TRUE(validate(g).empty());
}

TEST(ColouredGraph, NeighbourBitsBeyondOneWord) {
  auto g = ColouredGraph::complete(70, 1, [](Vertex, Vertex) { return 1; });
  auto bits = g.neighbour_bits(3);
  ASSERT_EQ(bits.size(), 2u);
  EXPECT_EQ(std::popcount(bits[0]) + std::popcount(bits[1]), 69);
  EXPECT_FALSE(bits[0] >> 3 & 1u);
}

TEST(ColouredGraph, RejectsBadSizes) {
  EXPECT_THROW(ColouredGraph(-1, 1, {}), ParameterError);
  EXPECT_THROW(ColouredGraph(3, 0, {}), ParameterError);
}

TEST(ColouredGraph, VertexLimitFromEnvironment) {
  ::setenv("ODDRAMSEY_VERTEX_LIMIT", "10", 1);
  EXPECT_EQ(vertex_limit(), 10);
  EXPECT_THROW(ColouredGraph(11, 1, {}), ParameterError);
  ::unsetenv("ODDRAMSEY_VERTEX_LIMIT");
  EXPECT_EQ(vertex_limit(), 4096);
}

TEST(Validate, ReportsEveryProblem) {
  ColouredGraph g(3, 2, {{0, 1, 1}, {1, 1, 1}, {0, 5, 1}, {1, 0, 2}, {1, 2, 3}});
  auto v = validate(g);
  ASSERT_EQ(v.size(), 4u);
  EXPECT_EQ(v[0].kind, ViolationKind::SelfLoop);
  EXPECT_EQ(v[0].edge_index, 1u);
  EXPECT_EQ(v[1].kind, ViolationKind::VertexRange);
  EXPECT_EQ(v[2].kind, ViolationKind::ColourRange);
  EXPECT_EQ(v[2].edge_index, 4u);
  EXPECT_EQ(v[3].kind, ViolationKind::ParallelEdge);
  EXPECT_EQ(v[3].edge_index, 3u);
  EXPECT_THROW(require_valid(g), InvalidGraphError);
  // The first occurrence of a repeated pair wins.
  EXPECT_EQ(g.colour(0, 1), 1);
}

TEST(Validate, CompletenessFlag) {
  ColouredGraph g(3, 1, {{0, 1, 1}, {1, 2, 1}}, true);
  auto v = validate(g);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::Completeness);
}

TEST(ParityOfEdges, CountsColoursModTwo) {
  auto g = path_graph();
  auto p = parity_vector(g, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(p.set_colours(), (std::vector<Colour>{2}));
  EXPECT_TRUE(parity_vector(g, {{0, 1}, {2, 3}}).none());
}

TEST(ParityOfEdges, MissingEdgeNamesThePair) {
  auto g = path_graph();
  try {
    parity_vector(g, {{0, 1}, {0, 3}});
    FAIL();
  } catch (const MissingEdgeError& e) {
    EXPECT_EQ(e.u(), 0);
    EXPECT_EQ(e.v(), 3);
  }
}
