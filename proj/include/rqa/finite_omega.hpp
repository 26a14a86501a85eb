#pragma once

// Closed-form asymptotic correlation sums and recurrence determinism for a
// point attracted to a periodic orbit y_0, ..., y_{p-1}, where
// f^{pn+i}(x) -> y_i.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rqa/dynamics.hpp"
#include "rqa/numeric.hpp"

namespace rqa {

// Orbit points in dynamical order: y_{i+1} = f(y_i) cyclically.
template <class T>
class PeriodicOrbitData {
 public:
  explicit PeriodicOrbitData(std::vector<T> points) : points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("periodic orbit needs at least one point");
    for (std::size_t i = 0; i < points_.size(); ++i) {
      for (std::size_t j = i + 1; j < points_.size(); ++j) {
        if (points_[i] == points_[j]) throw std::invalid_argument("periodic orbit points must be pairwise distinct");
      }
    }
  }

  std::size_t period() const { return points_.size(); }
  const std::vector<T>& points() const { return points_; }
  const T& operator[](std::size_t i) const { return points_[i % points_.size()]; }

 private:
  std::vector<T> points_;
};

// Rotates a detected cycle so that y_i is the limit of the trajectory points
// with index = i (mod p). Counts are invariant under this rotation.
template <class T>
PeriodicOrbitData<T> orbit_from_periodic(const PeriodicStructure<T>& ps) {
  const std::size_t p = ps.period;
  std::vector<T> ys(p);
  for (std::size_t i = 0; i < p; ++i) ys[i] = ps.orbit[(i + p - ps.preperiod % p) % p];
  return PeriodicOrbitData<T>(std::move(ys));
}

template <class T>
T bowen_orbit_distance(const PeriodicOrbitData<T>& o, std::size_t i, std::size_t j, std::size_t m) {
  const std::size_t p = o.period();
  if (i >= p || j >= p) throw std::out_of_range("orbit index out of range");
  if (m < 1) throw std::invalid_argument("window length m must be >= 1");
  T best = abs_diff(o[i], o[j]);
  for (std::size_t s = 1; s < m; ++s) {
    T d = abs_diff(o[i + s], o[j + s]);
    if (best < d) best = d;
  }
  return best;
}

// Nonzero Bowen distances between orbit points, sorted and deduplicated. The
// limit of C_m(x, n, eps) is only guaranteed for eps outside this set.
template <class T>
std::vector<T> excluded_epsilons(const PeriodicOrbitData<T>& o, std::size_t m) {
  std::vector<T> out;
  const std::size_t p = o.period();
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) out.push_back(bowen_orbit_distance(o, i, j, m));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct ClosedFormValue {
  Rational value;
  std::uint64_t count = 0;
  std::uint64_t p = 1;
  // eps coincides with a Bowen distance of the orbit; the value is the orbit
  // count but the limit need not exist there.
  bool excluded_epsilon = false;
};

template <class T>
bool is_excluded_epsilon(const PeriodicOrbitData<T>& o, std::size_t m, const T& epsilon) {
  auto ex = excluded_epsilons(o, m);
  return std::binary_search(ex.begin(), ex.end(), epsilon);
}

// (1/p^2) #{(i,j) in Z_p x Z_p : rho_m(y_i, y_j) <= eps}.
template <class T>
ClosedFormValue closed_form_corr_sum(const PeriodicOrbitData<T>& o, std::size_t m, const T& epsilon) {
  if (!(T(0) < epsilon)) throw std::invalid_argument("epsilon must be positive");
  const std::size_t p = o.period();
  ClosedFormValue out;
  out.p = p;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      T d = bowen_orbit_distance(o, i, j, m);
      if (!(epsilon < d)) ++out.count;
      if (i != j && d == epsilon) out.excluded_epsilon = true;
    }
  }
  out.value = Rational(BigInt(out.count)) / Rational(BigInt(p) * BigInt(p));
  return out;
}

template <class T>
T min_spatial_gap(const PeriodicOrbitData<T>& o) {
  if (o.period() < 2) throw std::invalid_argument("a fixed point has no spatial gap");
  std::vector<T> sorted = o.points();
  std::sort(sorted.begin(), sorted.end());
  T best = sorted[1] - sorted[0];
  for (std::size_t k = 2; k < sorted.size(); ++k) {
    T d = sorted[k] - sorted[k - 1];
    if (d < best) best = d;
  }
  return best;
}

// c_m / c_1 from the closed form. Below the minimal spatial gap only diagonal
// pairs recur for every m, so both counts equal p and the ratio is exactly 1.
template <class T>
ClosedFormValue asymptotic_rdet_finite(const PeriodicOrbitData<T>& o, std::size_t m, const T& epsilon) {
  auto cm = closed_form_corr_sum(o, m, epsilon);
  auto c1 = closed_form_corr_sum(o, 1, epsilon);
  ClosedFormValue out;
  out.p = o.period();
  out.count = cm.count;
  out.excluded_epsilon = cm.excluded_epsilon || c1.excluded_epsilon;
  if (o.period() == 1 || epsilon < min_spatial_gap(o)) {
    if (cm.count != o.period() || c1.count != o.period())
      throw std::logic_error("below the minimal gap only the diagonal pairs may recur");
    out.value = Rational(1);
    return out;
  }
  out.value = Rational(BigInt(cm.count)) / Rational(BigInt(c1.count));
  return out;
}

}  // namespace rqa
