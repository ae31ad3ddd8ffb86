#include <gtest/gtest.h>

#include "oddramsey/io.hpp"
#include "oddramsey/random.hpp"

using namespace oddramsey;

TEST(Occ, ParsesTextFormat) {
  auto g = parse_occ("3 3 2\n0 1 1\n2 1 2\n0 2 1\n");
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.r(), 2);
  EXPECT_EQ(g.colour(1, 2), 2);
  EXPECT_TRUE(g.complete_flag());
  EXPECT_TRUE(validate(g).empty());
}

TEST(Occ, IncompleteGraphHasNoCompleteFlag) {
  auto g = parse_occ("4 2 1\n0 1 1\n2 3 1\n");
  EXPECT_FALSE(g.complete_flag());
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(Occ, RejectsMalformedInput) {
  EXPECT_THROW(parse_occ(""), FormatError);
  EXPECT_THROW(parse_occ("3 2"), FormatError);
  EXPECT_THROW(parse_occ("3 2 1\n0 1 1\n"), FormatError);
  EXPECT_THROW(parse_occ("3 1 1\n0 1 1\n1 2 1\n"), FormatError);
  EXPECT_THROW(parse_occ("3 1 1\n0 x 1\n"), FormatError);
  EXPECT_THROW(parse_occ("-1 0 1\n"), FormatError);
}

TEST(Occ, InvalidContentSurvivesParsingForValidation) {
  auto g = parse_occ("3 2 1\n0 0 1\n0 1 5\n");
  auto v = validate(g);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].kind, ViolationKind::SelfLoop);
  EXPECT_EQ(v[1].kind, ViolationKind::ColourRange);
}

TEST(Occ, CanonicalWriteIsSorted) {
  ColouredGraph g(3, 2, {{2, 1, 2}, {1, 0, 1}});
  EXPECT_EQ(to_occ(g), "3 2 2\n0 1 1\n1 2 2\n");
}

TEST(Occ, RoundTripIsExact) {
  auto g = random_complete_colouring(9, 4, 3);
  auto text = to_occ(g);
  auto h = parse_occ(text);
  EXPECT_EQ(to_occ(h), text);
  for (Vertex a = 0; a < 9; ++a)
    for (Vertex b = 0; b < 9; ++b) EXPECT_EQ(g.colour(a, b), h.colour(a, b));
}

TEST(Json, ReadsAndWrites) {
  auto g = parse_occ(R"({"n": 3, "r": 2, "edges": [[0, 1, 1], [1, 2, 2]]})");
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.colour(2, 1), 2);
  EXPECT_FALSE(g.complete_flag());
  auto doc = to_json(g);
  EXPECT_EQ(doc["n"], 3);
  EXPECT_EQ(doc["edges"].size(), 2u);
  auto back = parse_occ(doc.dump());
  EXPECT_EQ(to_occ(back), to_occ(g));
}

TEST(Json, RejectsMalformed) {
  EXPECT_THROW(parse_occ("{\"n\": 3"), FormatError);
  EXPECT_THROW(parse_occ(R"({"n": 3, "edges": []})"), FormatError);
  EXPECT_THROW(parse_occ(R"({"n": 3, "r": 1, "edges": [[0, 1]]})"), FormatError);
}

TEST(Random, CompleteColouringIsDeterministic) {
  auto a = random_complete_colouring(12, 3, 42);
  auto b = random_complete_colouring(12, 3, 42);
  auto c = random_complete_colouring(12, 3, 43);
  EXPECT_EQ(to_occ(a), to_occ(b));
  EXPECT_NE(to_occ(a), to_occ(c));
  EXPECT_TRUE(a.is_complete());
  for (Colour col : a.used_colours()) EXPECT_LE(col, 3);
}

TEST(Random, DenseColouringMeetsMinimumDegree) {
  auto g = random_dense_colouring(20, 2, 14, 0.85, 5);
  EXPECT_GE(g.min_degree(), 14);
  EXPECT_THROW(random_dense_colouring(10, 2, 9, 0.1, 1, 5), SearchFailure);
}

TEST(Random, BelowIsInRangeAndRoughlyUniform) {
  CounterRng rng(1, 0);
  std::vector<int> hist(5, 0);
  for (int i = 0; i < 5000; ++i) ++hist[rng.below(5)];
  for (int h : hist) {
    EXPECT_GT(h, 850);
    EXPECT_LT(h, 1150);
  }
}
