#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "rqa/rqa_all.hpp"

namespace fixtures {

// Attracting 3-cycle 0.2 -> 0.5 -> 0.8 -> 0.2 with slope 0.2 near each point.
template <class T>
rqa::PiecewiseLinearMap<T> three_cycle_map() {
  auto v = [](std::int64_t num) {
    if constexpr (std::is_same_v<T, rqa::Rational>) return rqa::make_rational(num, 100);
    else return static_cast<double>(num) / 100.0;
  };
  std::vector<T> bps{v(0), v(15), v(20), v(25), v(45), v(50), v(55), v(75), v(80), v(85), v(100)};
  std::vector<T> vals{v(50), v(49), v(50), v(51), v(79), v(80), v(81), v(19), v(20), v(21), v(20)};
  return rqa::PiecewiseLinearMap<T>(bps, vals);
}

// Strictly ordered integer intervals, possibly degenerate, with random gaps.
inline rqa::Configuration<std::int64_t> random_configuration(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::int64_t> gap(1, 40), width(0, 40);
  std::vector<rqa::CompactInterval<std::int64_t>> out;
  std::int64_t x = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t lo = x + gap(rng);
    std::int64_t hi = lo + width(rng);
    out.emplace_back(lo, hi);
    x = hi;
  }
  return rqa::Configuration<std::int64_t>(std::move(out));
}

// Continuous PL self-map of [0,1] with random interior breakpoints.
inline rqa::PiecewiseLinearMap<double> random_map(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pieces(1, 6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int k = pieces(rng);
  std::vector<double> bps{0.0, 1.0};
  while (static_cast<int>(bps.size()) < k + 1) {
    double b = u(rng);
    if (b > 0.0 && b < 1.0 && std::find(bps.begin(), bps.end(), b) == bps.end()) bps.push_back(b);
  }
  std::sort(bps.begin(), bps.end());
  std::vector<double> vals;
  for (std::size_t i = 0; i < bps.size(); ++i) vals.push_back(u(rng));
  return rqa::PiecewiseLinearMap<double>(bps, vals);
}

}  // namespace fixtures
