#include <gtest/gtest.h>

#include <cmath>

#include "oddramsey/constructions.hpp"
#include "oddramsey/io.hpp"
#include "oddramsey/oracle.hpp"
#include "reference.hpp"

using namespace oddramsey;

TEST(FieldLayout, IdsRoundTrip) {
  FieldLayout layout(3, 2);
  EXPECT_EQ(layout.order(), 12);
  EXPECT_EQ(layout.palette(), 6);
  EXPECT_EQ(layout.special(), 8);
  for (Vertex v = 0; v < 12; ++v) EXPECT_EQ(layout.id(layout.point(v)), v);
  EXPECT_EQ(layout.point(5), (FieldPoint{1, 2}));
  EXPECT_EQ(layout.index_colour(1), layout.vector_colour(0));
  EXPECT_EQ(layout.index_colour(3), 6);
  EXPECT_THROW(FieldLayout(0, 1), ParameterError);
  EXPECT_THROW(FieldLayout(1, 25), ParameterError);
}

TEST(FieldColouring, ColourCountIsExact) {
  for (int m = 1; m <= 4; ++m)
    for (int t = 0; t <= 3; ++t) {
      auto g = build_field_colouring(m, t);
      EXPECT_EQ(g.n(), m << t);
      EXPECT_EQ(g.r(), (1 << t) + m - 1);
      EXPECT_TRUE(g.is_complete());
      if (t >= 1 && g.n() >= 4) {
        EXPECT_EQ(static_cast<int>(g.used_colours().size()), g.r());
      }
    }
}

TEST(FieldColouring, NoEvenHamiltonCycle) {
  for (auto [m, t] : {std::pair{2, 1}, {3, 1}, {4, 1}, {2, 2}}) {
    auto g = build_field_colouring(m, t);
    EXPECT_EQ(find_even_coloured_hc(g).status, SearchStatus::None) << m << " " << t;
  }
}

TEST(FieldColouring, PathColoursTelescope) {
  const int m = 3, t = 3;
  FieldLayout layout(m, t);
  auto g = build_field_colouring(m, t);
  CounterRng rng(17, 0);
  std::vector<Vertex> others;
  for (Vertex v = 0; v < g.n(); ++v)
    if (v != layout.special()) others.push_back(v);
  for (int trial = 0; trial < 300; ++trial) {
    rng.shuffle(others);
    const int len = 2 + static_cast<int>(rng.below(10));
    std::vector<Vertex> path(others.begin(), others.begin() + len);
    // Move the last vertex into the index class of the first.
    const int x = layout.point(path.front()).index;
    Vertex last = -1;
    for (Vertex v : others)
      if (std::find(path.begin(), path.end() - 1, v) == path.end() - 1 && layout.point(v).index == x) {
        last = v;
        break;
      }
    ASSERT_GE(last, 0);
    path.back() = last;
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) acc ^= static_cast<std::uint32_t>(g.colour(path[i], path[i + 1]) - 1);
    EXPECT_EQ(acc, layout.point(path.front()).vec ^ layout.point(path.back()).vec);
  }
}

TEST(GeneralN, Parameters) {
  EXPECT_EQ(general_parameters(4).t, 1);
  EXPECT_EQ(general_parameters(4).m, 2);
  EXPECT_EQ(general_parameters(6).m, 3);
  EXPECT_EQ(general_parameters(8).t, 1);  // log2(8)/2 = 1.5 ties to the smaller t
  EXPECT_EQ(general_parameters(8).m, 4);
  EXPECT_EQ(general_parameters(10).t, 2);
  EXPECT_EQ(general_parameters(12).m, 3);
  EXPECT_EQ(general_parameters(32).t, 2);
  EXPECT_EQ(general_parameters(33).t, 3);
}

TEST(GeneralN, ColourCountsAndBound) {
  const int expected[] = {3, 4, 5, 6, 6};
  for (int i = 0, n = 4; n <= 12; n += 2, ++i) {
    auto g = build_general_n(n);
    EXPECT_EQ(g.r(), expected[i]) << n;
    EXPECT_LE(g.r(), std::floor(1.5 * std::sqrt(2.0) * std::sqrt(n))) << n;
    EXPECT_TRUE(g.is_complete());
  }
  for (int n = 14; n <= 400; n += 2) EXPECT_LE(build_general_n(n).r(), 1.5 * std::sqrt(2.0 * n) + 1e-9) << n;
}

TEST(GeneralN, InducedOnFirstIds) {
  auto full = build_field_colouring(3, 2);
  auto g = build_general_n(10);
  for (Vertex a = 0; a < 10; ++a)
    for (Vertex b = a + 1; b < 10; ++b) EXPECT_EQ(g.colour(a, b), full.colour(a, b));
  EXPECT_THROW(build_general_n(7), ParameterError);
  EXPECT_THROW(build_general_n(2), ParameterError);
}

TEST(GeneralN, NoEvenHamiltonCycleUpToTen) {
  for (int n = 4; n <= 10; n += 2) {
    auto g = build_general_n(n);
    EXPECT_EQ(find_even_coloured_hc(g, {.parallel_width = 4}).status, SearchStatus::None) << n;
    if (n <= 8) {
      EXPECT_FALSE(ref::has_even_hc(g)) << n;
    }
  }
}

TEST(ThreeBlock, ShapeAndDegree) {
  auto g = build_three_block(6, 1);
  EXPECT_EQ(g.r(), 2);
  EXPECT_EQ(g.min_degree(), 3);
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.colour(2, 4), 1);
  EXPECT_EQ(g.colour(2, 5), 2);
  EXPECT_EQ(g.colour(0, 5), 1);
  for (int n = 4; n <= 30; n += 2)
    for (int k = 1; k < n / 2; ++k) EXPECT_EQ(build_three_block(n, k).min_degree(), n / 2 + k - 1) << n << " " << k;
  EXPECT_THROW(build_three_block(8, 4), ParameterError);
  EXPECT_THROW(build_three_block(7, 1), ParameterError);
  EXPECT_THROW(build_three_block(8, 0), ParameterError);
}

TEST(ThreeBlock, NoEvenHamiltonCycle) {
  for (auto [n, k] : {std::pair{6, 1}, {8, 1}, {8, 2}, {10, 2}, {12, 3}}) {
    auto g = build_three_block(n, k);
    EXPECT_EQ(find_even_coloured_hc(g).status, SearchStatus::None) << n << " " << k;
  }
}

TEST(SparseCayley, FullDensityMatchesGeneral) {
  for (int n = 4; n <= 40; n += 2) EXPECT_EQ(to_occ(build_sparse_cayley(n, 1.0, 3)), to_occ(build_general_n(n)));
}

TEST(SparseCayley, SetIsSeededAndContainsZero) {
  auto a = sparse_cayley_set(4, 0.5, 1);
  EXPECT_EQ(a.size(), 8u);
  EXPECT_EQ(a.front(), 0u);
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
  EXPECT_EQ(a, sparse_cayley_set(4, 0.5, 1));
  bool differs = false;
  for (std::uint64_t seed = 2; seed < 10; ++seed) differs |= sparse_cayley_set(4, 0.5, seed) != a;
  EXPECT_TRUE(differs);
}

TEST(SparseCayley, ColourCountAndDegree) {
  for (int n = 4; n <= 200; n += 2)
    for (double c : {0.5, 0.6, 0.75, 0.9}) {
      auto g = build_sparse_cayley(n, c, 11);
      auto [t, m] = general_parameters(n);
      const int block = 1 << t;
      EXPECT_LE(g.r(), static_cast<int>(std::ceil(c * block - 1e-9) + std::ceil(c * m - 1e-9)) - 1) << n << " " << c;
      EXPECT_LE(g.r(), c * (m + block) + 1 + 1e-9) << n << " " << c;
      const int bound = static_cast<int>(std::ceil(c * n - 1e-9)) - 1 - (m * block - n);
      FieldLayout layout(m, t);
      const auto set = sparse_cayley_set(t, c, 11);
      const int cap = static_cast<int>(std::ceil(c * m - 1e-9));
      for (Vertex v = 0; v < n; ++v) {
        // (v, x) with v in S and x > ceil(cm) loses its edge to the special vertex.
        auto p = layout.point(v);
        const bool cut_off = v != layout.special() && std::ranges::find(set, p.vec) != set.end() && p.index > cap;
        EXPECT_GE(g.degree(v), bound - (cut_off ? 1 : 0)) << n << " " << c << " " << v;
      }
      EXPECT_TRUE(validate(g).empty());
    }
  EXPECT_THROW(build_sparse_cayley(10, 0.4, 1), ParameterError);
  EXPECT_THROW(build_sparse_cayley(9, 0.5, 1), ParameterError);
}

TEST(SparseCayley, ZeroVectorVerticesBeyondTheCapLoseOneEdge) {
  // n = 8, c = 1/2: t = 1, m = 4, S = {0}, cap 2. Vertex (0, 3) sees only
  // (0, 1) and (0, 2), one below c m 2^t - 1 = 3.
  auto g = build_sparse_cayley(8, 0.5, 0);
  FieldLayout layout(4, 1);
  const Vertex v = layout.id({0, 3});
  EXPECT_EQ(g.degree(v), 2);
  EXPECT_EQ(g.neighbours(v), (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(g.min_degree(), 2);
}

TEST(SparseCayley, ColoursComeFromTheFieldColouring) {
  const int n = 24;
  auto g = build_sparse_cayley(n, 0.6, 5);
  auto full = build_general_n(n);
  // The relabelling is monotone, so equal field colours stay equal and
  // distinct ones stay distinct.
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = 0; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) {
          if (!g.adjacent(a, b) || !g.adjacent(c, d)) continue;
          EXPECT_EQ(g.colour(a, b) == g.colour(c, d), full.colour(a, b) == full.colour(c, d));
        }
}

TEST(SparseCayley, SmallInstancesHaveNoEvenHamiltonCycle) {
  for (int n : {8, 10, 12})
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      auto g = build_sparse_cayley(n, 0.5, seed);
      EXPECT_NE(find_even_coloured_hc(g, {.parallel_width = 4}).status, SearchStatus::Witness) << n << " " << seed;
    }
}
