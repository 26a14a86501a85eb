#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using rqa::CompactInterval;
using rqa::CountBackend;
using rqa::CountOptions;
using rqa::PairMode;
using rqa::Rational;
using rqa::Word;
using rqa::make_rational;

namespace {

const rqa::AdmissibleSystem& five() {
  static const auto s = rqa::make_delahaye_system(5, 14);
  return s;
}

CompactInterval<Rational> iv(std::int64_t a, std::int64_t b, std::int64_t den) {
  return {make_rational(a, den), make_rational(b, den)};
}

}  // namespace

TEST(WordAdd, Examples) {
  EXPECT_EQ(rqa::word_add(Word::binary("00"), 1).str(), "10");
  EXPECT_EQ(rqa::word_add(Word::binary("11"), 1).str(), "00");
  EXPECT_EQ(rqa::word_add(Word::binary("10"), 2).str(), "11");
  EXPECT_THROW(Word::binary("012"), std::invalid_argument);
}

TEST(WordAdd, MatchesIndexArithmetic) {
  for (std::uint64_t a = 0; a < 32; ++a)
    for (std::uint64_t k = 0; k < 70; ++k) {
      auto w = Word::from_index(a, std::vector<std::uint32_t>(5, 2));
      EXPECT_EQ(rqa::word_add(w, k).index(), (a + k) % 32);
    }
  // mixed radices
  std::vector<std::uint32_t> q{3, 2, 5};
  for (std::uint64_t a = 0; a < 30; ++a)
    for (std::uint64_t k = 0; k < 45; ++k) EXPECT_EQ(rqa::word_add(Word::from_index(a, q), k).index(), (a + k) % 30);
}

TEST(SymbolicTrajectory, Examples) {
  auto orbit = rqa::symbolic_trajectory(Word::zeros(2), 4);
  std::vector<std::string> s;
  for (auto& w : orbit) s.push_back(w.str());
  EXPECT_EQ(s, (std::vector<std::string>{"00", "10", "01", "11"}));
  auto full = rqa::symbolic_trajectory(Word::zeros(6), 64);
  std::set<std::uint64_t> seen;
  for (auto& w : full) seen.insert(w.index());
  EXPECT_EQ(seen.size(), 64u);
}

TEST(AdmissibleSystem, DelahayeIntervals) {
  EXPECT_EQ(five().interval_of_word(Word::binary("0")), iv(0, 1, 5));
  EXPECT_EQ(five().interval_of_word(Word::binary("1")), iv(3, 5, 5));
  EXPECT_EQ(five().interval_of_word(Word::binary("01")), iv(4, 5, 25));
  EXPECT_THROW(five().interval_of_word(Word::zeros(15)), std::out_of_range);
  EXPECT_THROW(rqa::make_delahaye_system(2, 5), std::invalid_argument);
}

TEST(AdmissibleSystem, Invariants) {
  const auto& s = five();
  for (std::size_t t = 1; t <= 10; ++t) {
    const auto& lv = s.level(t);
    const auto& parent = s.level(t - 1);
    ASSERT_EQ(lv.size(), std::size_t{1} << t);
    const std::uint64_t half = lv.size() / 2;
    for (std::uint64_t a = 0; a < half; ++a) {
      // children a0 (index a) and a1 (index a + half)
      EXPECT_EQ(lv[a].lo, parent[a].lo);
      EXPECT_EQ(lv[a + half].hi, parent[a].hi);
      EXPECT_TRUE(rqa::precedes(lv[a], lv[a + half]));
    }
    for (std::uint64_t a = 0; a < lv.size(); ++a) {
      auto w = Word::from_index(a, std::vector<std::uint32_t>(t, 2));
      EXPECT_EQ(s.interval_of_word(w), lv[a]);
      const Rational expect = rqa::pow_rational(make_rational(1, 5), static_cast<unsigned>(t)) * (w[0] == 0 ? 1 : 2);
      EXPECT_EQ(lv[a].diam(), expect);
    }
    EXPECT_LT(s.nu(t), s.nu(t - 1));
    EXPECT_LE(s.nu(t), 2 * rqa::pow_rational(make_rational(1, 5), static_cast<unsigned>(t)));
  }
}

TEST(WordMetrics, Examples) {
  const auto& s = five();
  auto a = Word::binary("00"), b = Word::binary("01");
  EXPECT_EQ(rqa::dist_m_words(s, a, a, 3), Rational(0));
  EXPECT_EQ(rqa::dist_m_words(s, a, b, 1), make_rational(3, 25));
  EXPECT_EQ(rqa::dist_m_words(s, a, b, 2), make_rational(6, 25));
  EXPECT_EQ(rqa::diam_m_words(s, Word::binary("0"), Word::binary("0"), 1), make_rational(1, 5));
  EXPECT_EQ(rqa::diam_m_words(s, a, b, 1), make_rational(1, 5));
  EXPECT_EQ(rqa::diam_m_words(s, a, b, 2), make_rational(2, 5));
}

TEST(CountPairs, Examples) {
  const auto eps = make_rational(1, 5);
  EXPECT_EQ(rqa::count_pairs(five(), 2, 1, eps, PairMode::closed), 6u);
  EXPECT_EQ(rqa::count_pairs(five(), 2, 2, eps, PairMode::closed), 4u);
  EXPECT_EQ(rqa::count_pairs(five(), 3, 1, eps, PairMode::closed), 24u);
}

TEST(CountPairs, ResourceGuard) {
  CountOptions tight;
  tight.max_pairs = 100;
  EXPECT_THROW(rqa::count_pairs(five(), 5, 1, make_rational(1, 5), tight), rqa::ResourceLimitError);
}

// Brute force over words with dist_m_words / diam_m_words is the oracle.
TEST(CountPairs, MatchesWordBruteForce) {
  const auto& s = five();
  for (std::size_t t = 1; t <= 5; ++t)
    for (std::size_t m = 1; m <= 4; ++m)
      for (auto eps : {make_rational(1, 5), make_rational(1, 25), make_rational(3, 10), make_rational(6, 25)}) {
        std::uint64_t strict = 0, closed = 0;
        const std::uint64_t p = std::uint64_t{1} << t;
        std::vector<std::uint32_t> q(t, 2);
        for (std::uint64_t i = 0; i < p; ++i)
          for (std::uint64_t j = 0; j < p; ++j) {
            auto a = Word::from_index(i, q), b = Word::from_index(j, q);
            strict += rqa::dist_m_words(s, a, b, m) < eps;
            closed += !(eps < rqa::diam_m_words(s, a, b, m));
          }
        auto got = rqa::count_pairs(s, t, m, eps);
        EXPECT_EQ(got.n_strict, strict) << t << " " << m;
        EXPECT_EQ(got.n_closed, closed) << t << " " << m;
      }
}

TEST(CountPairs, BackendsAndThreadsAgree) {
  for (std::size_t t = 1; t <= 8; ++t)
    for (std::size_t m = 1; m <= 4; ++m) {
      const auto eps = rqa::pow_rational(make_rational(1, 5), static_cast<unsigned>(1 + (t + m) % 3));
      CountOptions grid, exact, threaded;
      grid.backend = CountBackend::grid;
      exact.backend = CountBackend::rational;
      threaded.threads = 3;
      auto a = rqa::count_pairs(five(), t, m, eps, grid);
      auto b = rqa::count_pairs(five(), t, m, eps, exact);
      auto c = rqa::count_pairs(five(), t, m, eps, threaded);
      EXPECT_EQ(a.n_strict, b.n_strict);
      EXPECT_EQ(a.n_closed, b.n_closed);
      EXPECT_EQ(a.n_strict, c.n_strict);
      EXPECT_EQ(a.n_closed, c.n_closed);
    }
}

TEST(AsymptoticCorrSum, ConstantRatioAndEnclosure) {
  auto rows = rqa::asymptotic_corr_sum(five(), 1, make_rational(1, 5), {2, 3, 4, 5, 6});
  // 3 2^k 4^{t-k-1} / 4^t = 3/2^{k+2}: 6 of 16 pairs at t = 2.
  for (const auto& r : rows) {
    EXPECT_EQ(r.lower(), make_rational(3, 8));
    EXPECT_LE(r.upper() - r.lower(), r.width_bound());
  }
  rows = rqa::asymptotic_corr_sum(five(), 2, make_rational(1, 5), {2, 3, 4, 5, 6});
  for (const auto& r : rows) EXPECT_EQ(r.lower(), make_rational(1, 4));
  auto csv = rqa::counts_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,p_t,m,epsilon_num,epsilon_den,N_strict,N_closed,lower,upper");
}
