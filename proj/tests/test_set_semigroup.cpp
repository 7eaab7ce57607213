#include <gtest/gtest.h>

#include <iostream>

#include "generators.hpp"
#include "horo/set_semigroup.hpp"

using namespace horo;

namespace {

FiniteSet set1(std::initializer_list<long> xs) {
  std::vector<LatticeVector> pts;
  for (long x : xs) pts.push_back({x});
  return FiniteSet(pts);
}

FiniteSet set(std::vector<LatticeVector> pts) { return FiniteSet(std::move(pts)); }

FiniteSet random_set(gen::Rng& rng, std::size_t dim, long hi = 4) {
  return set(gen::int_points(rng, dim, static_cast<std::size_t>(gen::between(rng, 1, 5)), 0, hi));
}

}  // namespace

TEST(FiniteSet, DeduplicatesAndRejectsEmpty) {
  EXPECT_EQ(set1({2, 0, 2}).size(), 2u);
  EXPECT_THROW(FiniteSet(std::vector<LatticeVector>{}), DomainError);
  AffineLattice even(QVec{Rational(0)}, {{2}});
  EXPECT_THROW(FiniteSet({{1}}, even), DomainError);
}

TEST(Sumset, Examples) {
  auto a = set1({1, 5, 7});
  EXPECT_EQ(sumset(a, set1({0})), a);
  EXPECT_EQ(sumset(set1({0, 2}), set1({0, 1, 2})), set1({0, 1, 2, 3, 4}));
  EXPECT_EQ(sumset(set({{0, 0}, {1, 2}}), set({{0, 0}, {1, 2}, {2, 4}})), set({{0, 0}, {1, 2}, {2, 4}, {3, 6}}));
}

TEST(Sumset, LatticeMismatchIsDomainError) {
  AffineLattice even(QVec{Rational(0)}, {{2}});
  EXPECT_THROW(sumset(FiniteSet({{0}, {2}}, even), set1({0, 1})), DomainError);
}

TEST(Completion, Examples) {
  EXPECT_EQ(completion_set(set1({0, 3})), set1({0, 1, 2, 3}));
  EXPECT_EQ(completion_set(set({{0, 0}, {1, 2}})), set({{0, 0}, {1, 2}}));
  EXPECT_EQ(completion_set(set({{0, 0}, {0, 1}, {1, 1}})), set({{0, 0}, {0, 1}, {1, 1}}));
}

TEST(Completion, RespectsCosetLattice) {
  AffineLattice coset(QVec{Rational(1)}, {{2}});
  EXPECT_EQ(completion_set(FiniteSet({{1}, {7}}, coset)), set1({1, 3, 5, 7}));
}

TEST(Analogous, Examples) {
  auto a = set({{0, 0}, {3, 1}, {1, 2}});
  EXPECT_TRUE(analogous(a, completion_set(a)));
  EXPECT_TRUE(analogous(set1({0, 2}), set1({0, 1, 2})));
  EXPECT_FALSE(analogous(set1({0, 2}), set1({0, 3})));
}

TEST(Saturation, Examples) {
  EXPECT_TRUE(saturation_check(set1({0, 2}), 1));
  EXPECT_EQ(sumset(set1({0, 2}), set1({0, 1, 2})), set1({0, 1, 2, 3, 4}));
  EXPECT_TRUE(saturation_check(set({{0, 0}, {1, 2}}), 2));
  for (long n = 0; n <= 3; ++n) EXPECT_TRUE(saturation_check(set1({0}), n));
  EXPECT_THROW(saturation_check(set1({0}), -1), DomainError);
}

TEST(Saturation, RandomSetsProperty) {
  gen::Rng rng(31);
  int disagreements = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t dim = static_cast<std::size_t>(gen::between(rng, 1, 3));
    auto a = random_set(rng, dim);
    EXPECT_TRUE(saturation_check(a, static_cast<long>(dim)));
    if (!saturation_check_sumset_reading(a, static_cast<long>(dim))) ++disagreements;
  }
  // The sumset reading is only reported, never asserted.
  std::cout << "sumset reading disagreed on " << disagreements << " of 60 sets\n";
}

TEST(Semigroup, HullIsHomomorphismProperty) {
  gen::Rng rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t dim = static_cast<std::size_t>(gen::between(rng, 1, 3));
    auto a = random_set(rng, dim), b = random_set(rng, dim);
    EXPECT_EQ(sumset(a, b).hull(), minkowski_sum(a.hull(), b.hull()));
  }
}

TEST(Semigroup, AnalogyRespectsAdditionProperty) {
  gen::Rng rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t dim = static_cast<std::size_t>(gen::between(rng, 1, 3));
    auto a = random_set(rng, dim), c = random_set(rng, dim);
    auto b = completion_set(a);  // analogous to a by construction
    ASSERT_TRUE(analogous(a, b));
    EXPECT_TRUE(analogous(sumset(a, c), sumset(b, c)));
  }
}

TEST(Semigroup, CompletionIdempotentAndExtensiveProperty) {
  gen::Rng rng(34);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t dim = static_cast<std::size_t>(gen::between(rng, 1, 3));
    auto a = random_set(rng, dim);
    auto c = completion_set(a);
    EXPECT_EQ(completion_set(c), c);
    for (const auto& p : a.points())
      EXPECT_TRUE(std::binary_search(c.points().begin(), c.points().end(), p));
  }
}

TEST(Semigroup, IteratedSumsetAndDilation) {
  auto a = set1({0, 3});
  EXPECT_EQ(iterated_sumset(a, 0), set1({0}));
  EXPECT_EQ(iterated_sumset(a, 2), set1({0, 3, 6}));
  EXPECT_EQ(dilated_completion(a, 2), set1({0, 1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(dilated_completion(a, 0), set1({0}));
}
