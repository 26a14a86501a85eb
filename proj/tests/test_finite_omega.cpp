#include <gtest/gtest.h>

#include "support.hpp"

using rqa::PeriodicOrbitData;
using rqa::Rational;
using rqa::make_rational;

namespace {

PeriodicOrbitData<Rational> two_cycle() { return PeriodicOrbitData<Rational>({make_rational(1, 4), make_rational(3, 4)}); }
PeriodicOrbitData<Rational> three_cycle() {
  return PeriodicOrbitData<Rational>({make_rational(2, 10), make_rational(5, 10), make_rational(8, 10)});
}

}  // namespace

TEST(PeriodicOrbitData, Validation) {
  EXPECT_THROW(PeriodicOrbitData<Rational>(std::vector<Rational>{}), std::invalid_argument);
  EXPECT_THROW(PeriodicOrbitData<Rational>({Rational(0), Rational(0)}), std::invalid_argument);
}

TEST(BowenOrbitDistance, Examples) {
  EXPECT_EQ(rqa::bowen_orbit_distance(three_cycle(), 1, 1, 3), Rational(0));
  EXPECT_EQ(rqa::bowen_orbit_distance(two_cycle(), 0, 1, 1), make_rational(1, 2));
  EXPECT_EQ(rqa::bowen_orbit_distance(three_cycle(), 0, 1, 2), make_rational(3, 10));
}

TEST(ClosedForm, Examples) {
  PeriodicOrbitData<Rational> fixed({make_rational(1, 3)});
  EXPECT_EQ(rqa::closed_form_corr_sum(fixed, 4, make_rational(1, 1000)).value, Rational(1));
  EXPECT_EQ(rqa::closed_form_corr_sum(two_cycle(), 1, make_rational(3, 10)).value, make_rational(1, 2));
  EXPECT_EQ(rqa::closed_form_corr_sum(two_cycle(), 1, make_rational(6, 10)).value, Rational(1));
  auto on = rqa::closed_form_corr_sum(two_cycle(), 1, make_rational(1, 2));
  EXPECT_TRUE(on.excluded_epsilon);
  EXPECT_FALSE(rqa::closed_form_corr_sum(two_cycle(), 1, make_rational(6, 10)).excluded_epsilon);
  auto c = three_cycle();
  EXPECT_EQ(rqa::closed_form_corr_sum(c, 1, make_rational(45, 100)).value, make_rational(7, 9));
  EXPECT_EQ(rqa::closed_form_corr_sum(c, 2, make_rational(45, 100)).value, make_rational(5, 9));
  EXPECT_EQ(rqa::closed_form_corr_sum(c, 3, make_rational(45, 100)).value, make_rational(1, 3));
}

TEST(ExcludedEpsilons, Examples) {
  EXPECT_TRUE(rqa::excluded_epsilons(PeriodicOrbitData<Rational>({Rational(0)}), 3).empty());
  EXPECT_EQ(rqa::excluded_epsilons(two_cycle(), 1), std::vector<Rational>{make_rational(1, 2)});
  EXPECT_EQ(rqa::excluded_epsilons(three_cycle(), 1), (std::vector<Rational>{make_rational(3, 10), make_rational(6, 10)}));
  EXPECT_TRUE(rqa::is_excluded_epsilon(three_cycle(), 2, make_rational(6, 10)));
  EXPECT_FALSE(rqa::is_excluded_epsilon(three_cycle(), 2, make_rational(45, 100)));
}

TEST(AsymptoticRdet, Examples) {
  auto c = three_cycle();
  EXPECT_EQ(rqa::min_spatial_gap(c), make_rational(3, 10));
  for (std::size_t m = 1; m <= 5; ++m) EXPECT_EQ(rqa::asymptotic_rdet_finite(c, m, make_rational(1, 10)).value, Rational(1));
  EXPECT_EQ(rqa::asymptotic_rdet_finite(c, 1, make_rational(45, 100)).value, Rational(1));
  EXPECT_EQ(rqa::asymptotic_rdet_finite(two_cycle(), 2, make_rational(6, 10)).value, Rational(1));
  EXPECT_EQ(rqa::asymptotic_rdet_finite(c, 2, make_rational(45, 100)).value, make_rational(5, 7));
}

// Rotating the cycle leaves every count unchanged.
TEST(ClosedForm, RotationInvariant) {
  std::vector<Rational> pts{make_rational(1, 9), make_rational(7, 9), make_rational(4, 9), make_rational(2, 9)};
  PeriodicOrbitData<Rational> base(pts);
  for (std::size_t r = 1; r < pts.size(); ++r) {
    std::vector<Rational> rot(pts.begin() + r, pts.end());
    rot.insert(rot.end(), pts.begin(), pts.begin() + r);
    PeriodicOrbitData<Rational> o(rot);
    for (std::size_t m = 1; m <= 4; ++m)
      for (int e = 1; e < 9; ++e)
        EXPECT_EQ(rqa::closed_form_corr_sum(o, m, make_rational(2 * e + 1, 18)).value,
                  rqa::closed_form_corr_sum(base, m, make_rational(2 * e + 1, 18)).value);
  }
}

TEST(OrbitFromPeriodic, AlignsWithTrajectoryIndex) {
  auto f = fixtures::three_cycle_map<double>();
  auto t = rqa::iterate(f, 0.21, 300);
  auto ps = rqa::detect_periodic(t, 1e-12);
  ASSERT_TRUE(ps);
  auto o = rqa::orbit_from_periodic(*ps);
  for (std::size_t i = 290; i < 300; ++i) EXPECT_NEAR(t[i], o[i], 1e-9);
}

// Finite-n sums approach the closed form for a generic epsilon.
TEST(ClosedForm, AgreesWithLongTrajectory) {
  auto f = fixtures::three_cycle_map<double>();
  auto t = rqa::iterate(f, 0.21, 2010);
  rqa::PeriodicOrbitData<double> o({0.2, 0.5, 0.8});
  for (std::size_t m = 1; m <= 3; ++m)
    for (double eps : {0.25, 0.45, 0.7}) {
      const double c = rqa::correlation_sum(t, rqa::RQAParams<double>(m, eps, 2000)).to_double();
      EXPECT_NEAR(c, rqa::to_double(rqa::closed_form_corr_sum(o, m, eps).value), 1e-2);
    }
}
