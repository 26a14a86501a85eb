#pragma once

// Continuous piecewise-linear self-maps of [0,1], their trajectories and
// eventual-period detection.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rqa/numeric.hpp"

namespace rqa {

template <class T>
class PiecewiseLinearMap {
 public:
  PiecewiseLinearMap(std::vector<T> breakpoints, std::vector<T> values)
      : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (breakpoints_.size() < 2) throw std::invalid_argument("piecewise linear map needs at least two breakpoints");
    if (breakpoints_.size() != values_.size())
      throw std::invalid_argument("piecewise linear map needs one value per breakpoint");
    if (breakpoints_.front() != T(0) || breakpoints_.back() != T(1))
      throw std::invalid_argument("breakpoints must start at 0 and end at 1");
    for (std::size_t k = 1; k < breakpoints_.size(); ++k) {
      if (!(breakpoints_[k - 1] < breakpoints_[k]))
        throw std::invalid_argument("breakpoints must be strictly increasing");
    }
    for (const auto& v : values_) {
      if (v < T(0) || T(1) < v) throw std::invalid_argument("map values must lie in [0,1]");
    }
  }

  static PiecewiseLinearMap identity() { return PiecewiseLinearMap({T(0), T(1)}, {T(0), T(1)}); }

  const std::vector<T>& breakpoints() const { return breakpoints_; }
  const std::vector<T>& values() const { return values_; }

  T operator()(const T& x) const {
    if (x < T(0) || T(1) < x) throw std::domain_error("map argument outside [0,1]");
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    std::size_t hi = static_cast<std::size_t>(it - breakpoints_.begin());
    if (hi == breakpoints_.size()) return values_.back();
    std::size_t lo = hi - 1;
    if (x == breakpoints_[lo]) return values_[lo];
    const T& x0 = breakpoints_[lo];
    const T& x1 = breakpoints_[hi];
    const T& y0 = values_[lo];
    const T& y1 = values_[hi];
    T y = y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    // Keep rounding noise of the float mode inside the unit interval.
    if (y < T(0)) return T(0);
    if (T(1) < y) return T(1);
    return y;
  }

 private:
  std::vector<T> breakpoints_;
  std::vector<T> values_;
};

template <class T>
T evaluate(const PiecewiseLinearMap<T>& f, const T& x) {
  return f(x);
}

// Finite orbit segment: points[i] = f^i(base).
template <class T>
struct Trajectory {
  std::vector<T> points;

  Trajectory() = default;
  explicit Trajectory(std::vector<T> pts) : points(std::move(pts)) {
    if (points.empty()) throw std::invalid_argument("trajectory must contain at least one point");
  }

  const T& base() const { return points.front(); }
  std::size_t size() const { return points.size(); }
  const T& operator[](std::size_t i) const { return points[i]; }

  // Segment starting at f^h(base).
  Trajectory shifted(std::size_t h) const {
    if (h >= points.size()) throw std::out_of_range("shift beyond trajectory length");
    return Trajectory(std::vector<T>(points.begin() + static_cast<std::ptrdiff_t>(h), points.end()));
  }
};

template <class T>
Trajectory<T> iterate(const PiecewiseLinearMap<T>& f, const T& x, std::size_t n) {
  if (n < 1) throw std::invalid_argument("iterate requires n >= 1");
  if (x < T(0) || T(1) < x) throw std::domain_error("base point outside [0,1]");
  std::vector<T> pts;
  pts.reserve(n);
  pts.push_back(x);
  for (std::size_t i = 1; i < n; ++i) pts.push_back(f(pts.back()));
  return Trajectory<T>(std::move(pts));
}

template <class T>
struct PeriodicStructure {
  std::size_t preperiod = 0;
  std::size_t period = 1;
  // orbit[s] is the most recent trajectory point with index = preperiod + s (mod period).
  std::vector<T> orbit;
};

// Smallest period p, then smallest preperiod k, such that every residual
// |points[i+p] - points[i]| with i >= k inside the window is <= tol and the
// cycle is witnessed at least twice (size - k >= 2p). With tol = 0 on exact
// trajectories this is exact eventual periodicity of the observed window; with
// tol > 0 it is a heuristic.
template <class T>
std::optional<PeriodicStructure<T>> detect_periodic(const Trajectory<T>& t, const T& tol) {
  const std::size_t len = t.size();
  for (std::size_t p = 1; 2 * p <= len; ++p) {
    // Last index whose residual exceeds tol.
    std::size_t k = 0;
    for (std::size_t i = len - p; i-- > 0;) {
      if (tol < abs_diff(t[i + p], t[i])) {
        k = i + 1;
        break;
      }
    }
    if (len - k < 2 * p) continue;
    PeriodicStructure<T> ps;
    ps.preperiod = k;
    ps.period = p;
    ps.orbit.resize(p);
    for (std::size_t s = 0; s < p; ++s) {
      // Largest index j < len with j = k + s (mod p).
      std::size_t j = k + s + ((len - 1 - (k + s)) / p) * p;
      ps.orbit[s] = t[j];
    }
    return ps;
  }
  return std::nullopt;
}

}  // namespace rqa
