#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using rqa::CompactInterval;
using rqa::Configuration;
using rqa::Rational;
using rqa::make_rational;

namespace {

CompactInterval<Rational> iv(std::int64_t a, std::int64_t b, std::int64_t den) {
  return {make_rational(a, den), make_rational(b, den)};
}

}  // namespace

TEST(IntervalDist, Examples) {
  EXPECT_EQ(rqa::interval_dist(iv(0, 2, 10), iv(6, 10, 10)), make_rational(2, 5));
  EXPECT_EQ(rqa::interval_dist(iv(0, 5, 10), iv(3, 8, 10)), Rational(0));
  EXPECT_EQ(rqa::interval_dist(iv(0, 4, 100), iv(16, 20, 100)), make_rational(12, 100));
  EXPECT_EQ(rqa::interval_dist(iv(6, 10, 10), iv(0, 2, 10)), make_rational(2, 5));
}

TEST(UnionDiam, Examples) {
  EXPECT_EQ(rqa::union_diam(iv(0, 4, 100), iv(16, 20, 100)), make_rational(1, 5));
  auto j = iv(3, 7, 10);
  EXPECT_EQ(rqa::union_diam(j, j), j.diam());
  EXPECT_EQ(rqa::union_diam(iv(0, 2, 10), iv(6, 10, 10)), Rational(1));
}

TEST(CompactInterval, RejectsReversedEndpoints) {
  EXPECT_THROW(iv(3, 1, 10), std::invalid_argument);
  EXPECT_NO_THROW(iv(1, 1, 10));
}

TEST(Configuration, RequiresStrictOrder) {
  EXPECT_THROW(Configuration<Rational>({iv(0, 3, 10), iv(3, 5, 10)}), std::invalid_argument);
  EXPECT_THROW(Configuration<Rational>({iv(4, 5, 10), iv(0, 1, 10)}), std::invalid_argument);
  Configuration<Rational> c({iv(0, 1, 10), iv(2, 3, 10)});
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c.at(1), iv(0, 1, 10));
  EXPECT_THROW(c.at(0), std::out_of_range);
  EXPECT_THROW(c.at(3), std::out_of_range);
}

TEST(EpsilonPairs, SingleInterval) {
  const Rational half = make_rational(1, 2);
  EXPECT_EQ(rqa::epsilon_pairs(Configuration<Rational>({iv(0, 3, 10)}), half).size(), 0u);
  auto big = rqa::epsilon_pairs(Configuration<Rational>({iv(0, 8, 10)}), half);
  ASSERT_EQ(big.size(), 1u);
  EXPECT_TRUE(big.contains(1, 1));
  // diam exactly eps does not qualify
  EXPECT_EQ(rqa::epsilon_pairs(Configuration<Rational>({iv(0, 5, 10)}), half).size(), 0u);
}

TEST(EpsilonPairs, ExtremalTwoByBruteForce) {
  const Rational half = make_rational(1, 2);
  auto c = rqa::extremal_configuration(2, half);
  auto pairs = rqa::epsilon_pairs(c, half);
  EXPECT_EQ(pairs.size(), 4u);
  for (std::size_t a = 1; a <= 2; ++a)
    for (std::size_t b = 1; b <= 2; ++b) {
      const auto d = rqa::interval_dist(c.at(a), c.at(b));
      const auto h = rqa::union_diam(c.at(a), c.at(b));
      EXPECT_TRUE(d < half && half < h);
      EXPECT_TRUE(pairs.contains(a, b));
    }
}

TEST(EpsilonPairs, RejectsBadInput) {
  EXPECT_THROW(rqa::epsilon_pairs(Configuration<Rational>(std::vector<CompactInterval<Rational>>{}), Rational(1)),
               std::invalid_argument);
  EXPECT_THROW(rqa::epsilon_pairs(Configuration<Rational>({iv(0, 1, 10)}), Rational(0)), std::invalid_argument);
}

TEST(ExtremalConfiguration, AttainsBound) {
  EXPECT_EQ(rqa::epsilon_pairs(rqa::extremal_configuration(2, make_rational(1, 2)), make_rational(1, 2)).size(), 4u);
  EXPECT_EQ(rqa::epsilon_pairs(rqa::extremal_configuration(3, make_rational(1, 2)), make_rational(1, 2)).size(), 8u);
  EXPECT_EQ(rqa::epsilon_pairs(rqa::extremal_configuration(10, Rational(1)), Rational(1)).size(), 36u);
  for (std::size_t n = 2; n <= 50; ++n) {
    const Rational eps = make_rational(3, 7);
    auto c = rqa::extremal_configuration(n, eps);
    EXPECT_EQ(rqa::epsilon_pairs(c, eps).size(), 4 * (n - 1)) << n;
    EXPECT_LT(rqa::interval_dist(c.at(1), c.at(n)), eps);
    EXPECT_GT(c.at(1).diam(), eps);
    EXPECT_GT(c.at(n).diam(), eps);
  }
  EXPECT_THROW(rqa::extremal_configuration(1, Rational(1)), std::invalid_argument);
}

TEST(ZeroConfiguration, HasNoPairs) {
  EXPECT_EQ(rqa::epsilon_pairs(rqa::zero_configuration(1, make_rational(1, 2)), make_rational(1, 2)).size(), 0u);
  EXPECT_EQ(rqa::epsilon_pairs(rqa::zero_configuration(5, make_rational(1, 10)), make_rational(1, 10)).size(), 0u);
  const Rational eps = make_rational(1, 100);
  auto c = rqa::zero_configuration(50, eps);
  std::size_t hits = 0;
  for (std::size_t a = 1; a <= 50; ++a)
    for (std::size_t b = 1; b <= 50; ++b) hits += rqa::in_epsilon_pair_relation(c.at(a), c.at(b), eps);
  EXPECT_EQ(hits, 0u);
  for (std::size_t a = 1; a <= 50; ++a) EXPECT_LE(c.at(a).diam(), eps);
  for (std::size_t a = 2; a <= 50; ++a) EXPECT_GE(rqa::interval_dist(c.at(a - 1), c.at(a)), eps);
}

TEST(EpsilonPairs, RandomPropertiesAndBound) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> size(1, 30);
  std::uniform_int_distribution<std::int64_t> eps(1, 150);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = size(rng);
    auto c = fixtures::random_configuration(rng, n);
    const std::int64_t e = eps(rng);
    auto pairs = rqa::epsilon_pairs(c, e);
    EXPECT_LE(pairs.size(), rqa::epsilon_pair_bound(n));
    for (auto [a, b] : pairs.pairs) EXPECT_TRUE(pairs.contains(b, a));
  }
}

TEST(EuclideanMetric, OrderPreserving) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    double v[3] = {u(rng), u(rng), u(rng)};
    std::sort(v, v + 3);
    if (v[0] == v[1] || v[1] == v[2]) continue;
    using M = rqa::EuclideanMetric;
    EXPECT_LT(std::max(M::distance(v[0], v[1]), M::distance(v[1], v[2])), M::distance(v[0], v[2]));
  }
}
