#pragma once

// Ordered families of compact real intervals J_1 < ... < J_n and the set of
// index pairs whose gap is below a threshold while their hull exceeds it.

#include <cstddef>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rqa/numeric.hpp"

namespace rqa {

// Euclidean metric on the real line. Other order-preserving metrics would
// plug in here; only this one ships.
struct EuclideanMetric {
  template <class T>
  static T distance(const T& x, const T& y) {
    return abs_diff(x, y);
  }
};

template <class T>
struct CompactInterval {
  T lo{};
  T hi{};

  CompactInterval() = default;
  CompactInterval(T lo_, T hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (hi < lo) throw std::invalid_argument("compact interval requires lo <= hi");
  }

  T diam() const { return hi - lo; }
  bool contains(const T& x) const { return !(x < lo) && !(hi < x); }
  bool contains(const CompactInterval& other) const { return !(other.lo < lo) && !(hi < other.hi); }

  friend bool operator==(const CompactInterval& a, const CompactInterval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

// J < K in the sense max J < min K.
template <class T>
bool precedes(const CompactInterval<T>& j, const CompactInterval<T>& k) {
  return j.hi < k.lo;
}

template <class T>
T interval_dist(const CompactInterval<T>& j, const CompactInterval<T>& k) {
  if (j.hi < k.lo) return k.lo - j.hi;
  if (k.hi < j.lo) return j.lo - k.hi;
  return T(0);
}

template <class T>
T union_diam(const CompactInterval<T>& j, const CompactInterval<T>& k) {
  const T& hi = max_of(j.hi, k.hi);
  const T& lo = j.lo < k.lo ? j.lo : k.lo;
  return hi - lo;
}

// Strictly ordered configuration. Accessors are 1-indexed.
template <class T>
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<CompactInterval<T>> intervals) : intervals_(std::move(intervals)) {
    for (std::size_t a = 1; a < intervals_.size(); ++a) {
      if (!precedes(intervals_[a - 1], intervals_[a]))
        throw std::invalid_argument("configuration intervals must be strictly ordered (J_a < J_{a+1})");
    }
  }

  std::size_t size() const { return intervals_.size(); }
  bool empty() const { return intervals_.empty(); }
  const CompactInterval<T>& at(std::size_t a) const {
    if (a < 1 || a > intervals_.size()) throw std::out_of_range("configuration index out of range");
    return intervals_[a - 1];
  }
  const std::vector<CompactInterval<T>>& intervals() const { return intervals_; }

 private:
  std::vector<CompactInterval<T>> intervals_;
};

// Index pairs (a, b), 1-based, with dist(J_a, J_b) < eps < diam(J_a u J_b).
template <class T>
struct EpsilonPairSet {
  std::size_t n = 0;
  T epsilon{};
  std::set<std::pair<std::size_t, std::size_t>> pairs;

  std::size_t size() const { return pairs.size(); }
  bool contains(std::size_t a, std::size_t b) const { return pairs.count({a, b}) != 0; }
};

template <class T>
bool in_epsilon_pair_relation(const CompactInterval<T>& j, const CompactInterval<T>& k, const T& epsilon) {
  return interval_dist(j, k) < epsilon && epsilon < union_diam(j, k);
}

template <class T>
EpsilonPairSet<T> epsilon_pairs(const Configuration<T>& c, const T& epsilon) {
  if (c.empty()) throw std::invalid_argument("epsilon_pairs requires a nonempty configuration");
  if (!(T(0) < epsilon)) throw std::invalid_argument("epsilon must be positive");
  EpsilonPairSet<T> result;
  result.n = c.size();
  result.epsilon = epsilon;
  for (std::size_t a = 1; a <= c.size(); ++a) {
    for (std::size_t b = a; b <= c.size(); ++b) {
      if (in_epsilon_pair_relation(c.at(a), c.at(b), epsilon)) {
        result.pairs.insert({a, b});
        result.pairs.insert({b, a});
      }
    }
  }
  return result;
}

// Sharp upper bound on #I_n(eps) for n >= 2; a single interval contributes at most one pair.
inline std::size_t epsilon_pair_bound(std::size_t n) { return n >= 2 ? 4 * (n - 1) : n; }

// Configuration attaining the bound 4(n-1): J_1 and J_n are wider than eps and
// closer than eps, so every pair involving an end interval qualifies.
//
// With delta = eps/10: J_1 = [0, eps+delta], J_n = [2eps, 3eps+delta], and the
// n-2 interior intervals sit on the odd cells of an equal subdivision of the
// gap (eps+delta, 2eps) into 2(n-2)+1 cells.
template <class T>
Configuration<T> extremal_configuration(std::size_t n, const T& epsilon) {
  if (n < 2) throw std::invalid_argument("extremal_configuration requires n >= 2");
  if (!(T(0) < epsilon)) throw std::invalid_argument("epsilon must be positive");
  const T delta = epsilon / T(10);
  const T first_hi = epsilon + delta;
  const T last_lo = epsilon + epsilon;
  std::vector<CompactInterval<T>> out;
  out.reserve(n);
  out.emplace_back(T(0), first_hi);
  const std::size_t interior = n - 2;
  if (interior > 0) {
    const T cell = (last_lo - first_hi) / T(static_cast<std::int64_t>(2 * interior + 1));
    for (std::size_t k = 1; k <= interior; ++k) {
      const T lo = first_hi + cell * T(static_cast<std::int64_t>(2 * k - 1));
      out.emplace_back(lo, lo + cell);
    }
  }
  out.emplace_back(last_lo, last_lo + epsilon + delta);
  return Configuration<T>(std::move(out));
}

// Configuration with no qualifying pair: each J_k has diameter eps/2 and
// consecutive gaps are 3eps/2.
template <class T>
Configuration<T> zero_configuration(std::size_t n, const T& epsilon) {
  if (n < 1) throw std::invalid_argument("zero_configuration requires n >= 1");
  if (!(T(0) < epsilon)) throw std::invalid_argument("epsilon must be positive");
  std::vector<CompactInterval<T>> out;
  out.reserve(n);
  const T half = epsilon / T(2);
  for (std::size_t k = 0; k < n; ++k) {
    const T lo = (epsilon + epsilon) * T(static_cast<std::int64_t>(k));
    out.emplace_back(lo, lo + half);
  }
  return Configuration<T>(std::move(out));
}

}  // namespace rqa
