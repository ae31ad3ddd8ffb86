#include <gtest/gtest.h>

#include "oddramsey/gf2.hpp"
#include "oddramsey/parity.hpp"

using namespace oddramsey;

TEST(ParityVector, StartsEmpty) {
  ParityVector p(5);
  EXPECT_EQ(p.size(), 5);
  EXPECT_TRUE(p.none());
  EXPECT_EQ(p.count(), 0);
  EXPECT_EQ(p.lowest(), 0);
  EXPECT_EQ(p.to_string(), "00000");
}

TEST(ParityVector, FlipTogglesOneColour) {
  ParityVector p(3);
  p.flip(2);
  EXPECT_TRUE(p.test(2));
  EXPECT_FALSE(p.test(1));
  p.flip(2);
  EXPECT_TRUE(p.none());
}

TEST(ParityVector, SetColoursAcrossWords) {
  ParityVector p(130);
  p.flip(1);
  p.flip(64);
  p.flip(65);
  p.flip(130);
  EXPECT_EQ(p.set_colours(), (std::vector<Colour>{1, 64, 65, 130}));
  EXPECT_EQ(p.count(), 4);
  EXPECT_EQ(p.lowest(), 1);
}

TEST(ParityVector, XorIsAddition) {
  ParityVector a(4), b(4);
  a.flip(1);
  a.flip(3);
  b.flip(3);
  b.flip(4);
  auto c = a ^ b;
  EXPECT_EQ(c.set_colours(), (std::vector<Colour>{1, 4}));
  EXPECT_EQ(c ^ b, a);
}

TEST(ParityVector, RejectsOutOfRange) {
  ParityVector p(3);
  EXPECT_THROW(p.flip(0), ParameterError);
  EXPECT_THROW(p.flip(4), ParameterError);
  EXPECT_THROW(p ^= ParityVector(4), ParameterError);
}

namespace {
ParityVector vec(int size, std::initializer_list<Colour> bits) {
  ParityVector p(size);
  for (Colour c : bits) p.flip(c);
  return p;
}
}  // namespace

TEST(Dependency, EqualRowsGiveThePair) {
  std::vector<ParityVector> rows{vec(3, {1, 2}), vec(3, {1, 2})};
  auto j = find_dependency(rows);
  ASSERT_TRUE(j);
  EXPECT_EQ(*j, (std::vector<int>{0, 1}));
}

TEST(Dependency, ZeroRowAlone) {
  std::vector<ParityVector> rows{vec(1, {})};
  auto j = find_dependency(rows);
  ASSERT_TRUE(j);
  EXPECT_EQ(*j, (std::vector<int>{0}));
}

TEST(Dependency, IndependentRows) {
  std::vector<ParityVector> rows{vec(3, {1}), vec(3, {2}), vec(3, {3})};
  EXPECT_FALSE(find_dependency(rows));
}

TEST(Dependency, EvenWeightRowsAlwaysDependent) {
  // s even-weight vectors in F_2^s span at most s - 1 dimensions.
  std::vector<ParityVector> rows{vec(3, {1, 2}), vec(3, {2, 3}), vec(3, {1, 3})};
  auto j = find_dependency(rows);
  ASSERT_TRUE(j);
  ParityVector sum(3);
  for (int i : *j) sum ^= rows[i];
  EXPECT_TRUE(sum.none());
  EXPECT_EQ(j->size(), 3u);
}

TEST(Dependency, RandomSumsVanish) {
  std::uint64_t state = 7;
  auto next = [&] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const int size = 1 + static_cast<int>(next() % 12);
    const int count = 1 + static_cast<int>(next() % 14);
    std::vector<ParityVector> rows;
    for (int i = 0; i < count; ++i) {
      ParityVector p(size);
      for (Colour c = 1; c <= size; ++c)
        if (next() % 2) p.flip(c);
      rows.push_back(p);
    }
    auto j = find_dependency(rows);
    if (count > size) {
      ASSERT_TRUE(j);
    }
    if (!j) continue;
    ParityVector sum(size);
    for (int i : *j) sum ^= rows[i];
    EXPECT_TRUE(sum.none());
    // The prefix before the last index is independent.
    std::vector<ParityVector> prefix(rows.begin(), rows.begin() + j->back());
    EXPECT_FALSE(find_dependency(prefix));
  }
}
