#pragma once

// Bowen distances along a trajectory, correlation sums, recurrence
// determinism, RQA determinism and recurrence matrices.
//
// Correlation sums compare with <= eps (recurrence convention); the strict
// comparisons used by interval configurations live in their own modules.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rqa/dynamics.hpp"
#include "rqa/numeric.hpp"

namespace rqa {

template <class T>
struct RQAParams {
  std::size_t m = 1;
  T epsilon{};
  std::size_t n = 1;
  unsigned threads = 1;

  RQAParams() = default;
  RQAParams(std::size_t m_, T epsilon_, std::size_t n_, unsigned threads_ = 1)
      : m(m_), epsilon(std::move(epsilon_)), n(n_), threads(threads_) {
    validate();
  }

  void validate() const {
    if (m < 1) throw std::invalid_argument("window length m must be >= 1");
    if (n < 1) throw std::invalid_argument("segment length n must be >= 1");
    if (!(T(0) < epsilon)) throw std::invalid_argument("epsilon must be positive");
  }

  RQAParams with_m(std::size_t new_m) const {
    RQAParams p = *this;
    p.m = new_m;
    p.validate();
    return p;
  }
};

// Exact correlation sum count/n^2.
struct CorrelationSum {
  std::uint64_t count = 0;
  std::uint64_t n = 1;

  Rational value() const { return Rational(BigInt(count)) / Rational(BigInt(n) * BigInt(n)); }
  double to_double() const { return static_cast<double>(count) / (static_cast<double>(n) * static_cast<double>(n)); }
};

template <class T>
T bowen_distance(const Trajectory<T>& t, std::size_t i, std::size_t j, std::size_t m) {
  if (m < 1) throw std::invalid_argument("window length m must be >= 1");
  if (std::max(i, j) + m > t.size()) throw std::out_of_range("Bowen window exceeds trajectory length");
  T best = abs_diff(t[i], t[j]);
  for (std::size_t s = 1; s < m; ++s) {
    T d = abs_diff(t[i + s], t[j + s]);
    if (best < d) best = std::move(d);
  }
  return best;
}

namespace detail {

template <class T>
void require_length(const Trajectory<T>& t, std::size_t needed) {
  if (t.size() < needed)
    throw std::length_error("trajectory too short: need " + std::to_string(needed) + " points, have " +
                            std::to_string(t.size()));
}

// rho_m(f^i x, f^j x) <= eps with early exit on the first window step over eps.
template <class T>
bool recurs(const std::vector<T>& pts, std::size_t i, std::size_t j, std::size_t m, const T& eps) {
  for (std::size_t s = 0; s < m; ++s) {
    if (eps < abs_diff(pts[i + s], pts[j + s])) return false;
  }
  return true;
}

}  // namespace detail

template <class T>
CorrelationSum correlation_sum(const Trajectory<T>& t, const RQAParams<T>& p) {
  p.validate();
  detail::require_length(t, p.n + p.m - 1);
  const auto& pts = t.points;
  const std::size_t n = p.n;
  const std::size_t m = p.m;
  const T& eps = p.epsilon;
  // Symmetric relation: count the strict upper triangle once.
  std::uint64_t upper = parallel_row_sum(n, p.threads, [&](std::size_t i) {
    std::uint64_t row = 0;
    for (std::size_t j = i + 1; j < n; ++j) row += detail::recurs(pts, i, j, m, eps) ? 1 : 0;
    return row;
  });
  return CorrelationSum{2 * upper + n, n};
}

template <class T>
Rational recurrence_determinism(const Trajectory<T>& t, const RQAParams<T>& p) {
  auto cm = correlation_sum(t, p);
  if (p.m == 1) return Rational(1);
  auto c1 = correlation_sum(t, p.with_m(1));
  return Rational(BigInt(cm.count)) / Rational(BigInt(c1.count));
}

// m * rdet_m - (m-1) * rdet_{m+1}.
inline Rational rqa_det_from(std::size_t m, const Rational& rdet_m, const Rational& rdet_m1) {
  return Rational(static_cast<std::int64_t>(m)) * rdet_m - Rational(static_cast<std::int64_t>(m - 1)) * rdet_m1;
}

template <class T>
Rational rqa_det(const Trajectory<T>& t, const RQAParams<T>& p) {
  p.validate();
  detail::require_length(t, p.n + p.m);
  return rqa_det_from(p.m, recurrence_determinism(t, p), recurrence_determinism(t, p.with_m(p.m + 1)));
}

class RecurrenceMatrix {
 public:
  explicit RecurrenceMatrix(std::size_t n) : n_(n), bits_(n * n, 0) {}

  std::size_t size() const { return n_; }
  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { bits_[i * n_ + j] = v ? 1 : 0; }

  std::uint64_t popcount() const {
    return static_cast<std::uint64_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
  }

  // Plain-text PBM bitmap: "P1\n<n> <n>\n" then one row per trajectory index.
  std::string to_pgm() const {
    std::string out = "P1\n" + std::to_string(n_) + " " + std::to_string(n_) + "\n";
    out.reserve(out.size() + 2 * n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (j > 0) out.push_back(' ');
        out.push_back(bits_[i * n_ + j] ? '1' : '0');
      }
      out.push_back('\n');
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> bits_;
};

template <class T>
RecurrenceMatrix recurrence_matrix(const Trajectory<T>& t, const RQAParams<T>& p) {
  p.validate();
  detail::require_length(t, p.n + p.m - 1);
  RecurrenceMatrix r(p.n);
  for (std::size_t i = 0; i < p.n; ++i) {
    r.set(i, i, true);
    for (std::size_t j = i + 1; j < p.n; ++j) {
      bool rec = detail::recurs(t.points, i, j, p.m, p.epsilon);
      r.set(i, j, rec);
      r.set(j, i, rec);
    }
  }
  return r;
}

struct SeriesPoint {
  std::uint64_t n = 0;
  Rational value;
};

// Finite-n proxy for the lower and upper asymptotic correlation sums: min and
// max over the tail of the schedule.
struct SeriesEstimate {
  std::vector<SeriesPoint> values;
  Rational liminf_est;
  Rational limsup_est;
};

inline SeriesEstimate estimate_asymptotics(const std::function<Rational(std::uint64_t)>& source,
                                           const std::vector<std::uint64_t>& schedule,
                                           double tail_fraction = 0.5) {
  if (schedule.empty()) throw std::invalid_argument("schedule must be nonempty");
  for (std::size_t k = 1; k < schedule.size(); ++k) {
    if (!(schedule[k - 1] < schedule[k])) throw std::invalid_argument("schedule must be strictly increasing");
  }
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0)) throw std::invalid_argument("tail fraction must be in (0,1]");
  SeriesEstimate est;
  est.values.reserve(schedule.size());
  for (auto n : schedule) est.values.push_back({n, source(n)});
  auto tail = static_cast<std::size_t>(static_cast<double>(schedule.size()) * tail_fraction + 0.5);
  tail = std::clamp<std::size_t>(tail, 1, schedule.size());
  auto first = est.values.end() - static_cast<std::ptrdiff_t>(tail);
  auto [lo, hi] = std::minmax_element(first, est.values.end(),
                                      [](const SeriesPoint& a, const SeriesPoint& b) { return a.value < b.value; });
  est.liminf_est = lo->value;
  est.limsup_est = hi->value;
  return est;
}

// CSV with columns n,c_num,c_den,c_float.
inline std::string series_csv(const std::vector<SeriesPoint>& values) {
  std::string out = "n,c_num,c_den,c_float\n";
  for (const auto& v : values) {
    out += std::to_string(v.n) + "," + numerator_string(v.value) + "," + denominator_string(v.value) + "," +
           format_float(to_double(v.value)) + "\n";
  }
  return out;
}

}  // namespace rqa
