#pragma once

// Two explicit zero-entropy constructions:
//
//  * TwoCycleConstruction: a trajectory attracted to the 2-cycle {1/4, 3/4}
//    whose correlation sum C_1(x_0, n, 1/2) oscillates between limits near
//    7/10 and 8/10, so no asymptotic correlation sum exists at eps = 1/2.
//  * DelahayeConstruction: the admissible system with diam K_a = r^{-t} or
//    2 r^{-t}, on whose Cantor set the asymptotic recurrence determinism at
//    eps_k = r^{-k} equals 2/3 for every k and every m >= 2.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rqa/dynamics.hpp"
#include "rqa/interval_config.hpp"
#include "rqa/numeric.hpp"
#include "rqa/rqa.hpp"
#include "rqa/solenoidal.hpp"

namespace rqa {

// ---------------------------------------------------------------------------
// Two-cycle construction.
//
// Interval scheme with delta_n = 16^{-(n+2)}:
//   even n: I_n = [1/4 - 8 delta_n, 1/4 - 7 delta_n], J_n = [3/4 - 2 delta_n, 3/4 - delta_n]
//   odd n:  I_n = [1/4 - 2 delta_n, 1/4 - delta_n],   J_n = [3/4 - 8 delta_n, 3/4 - 7 delta_n]
// Level k holds 2^k points in I_k (indices x_{2i}) and 2^k points in J_k
// (indices x_{2i+1}), i in [2^k - 1, 2(2^k - 1)], equally spaced strictly
// inside the interval from left to right.

struct TrajectorySlot {
  bool odd = false;         // x_{2i+1} lies in J, x_{2i} in I
  std::size_t level = 0;    // k with the point in I_k or J_k
  std::uint64_t offset = 0; // position among the 2^k points of that level
};

inline TrajectorySlot two_cycle_slot(std::uint64_t index) {
  TrajectorySlot s;
  s.odd = (index & 1U) != 0;
  const std::uint64_t i = index >> 1;
  s.level = static_cast<std::size_t>(std::bit_width(i + 1) - 1);
  s.offset = i - ((std::uint64_t{1} << s.level) - 1);
  return s;
}

// Number of points through level k: 2(2^{k+1} - 1).
inline std::uint64_t two_cycle_points_through(std::size_t k) { return 2 * ((std::uint64_t{1} << (k + 1)) - 1); }

class TwoCycleConstruction {
 public:
  static Rational y0() { return make_rational(1, 4); }
  static Rational y1() { return make_rational(3, 4); }
  static Rational epsilon() { return make_rational(1, 2); }

  explicit TwoCycleConstruction(std::size_t depth) : depth_(depth) {
    if (depth < 1) throw std::invalid_argument("two-cycle construction needs depth >= 1");
    if (depth > 40) throw std::invalid_argument("two-cycle construction depth is limited to 40");
    for (std::size_t n = 0; n <= depth; ++n) {
      i_.push_back(interval_i(n));
      j_.push_back(interval_j(n));
    }
    validate();
  }

  std::size_t depth() const { return depth_; }
  std::uint64_t max_points() const { return two_cycle_points_through(depth_); }

  static Rational delta(std::size_t n) { return pow_rational(make_rational(1, 16), static_cast<unsigned>(n + 2)); }

  static CompactInterval<Rational> interval_i(std::size_t n) {
    const Rational d = delta(n);
    if (n % 2 == 0) return {y0() - 8 * d, y0() - 7 * d};
    return {y0() - 2 * d, y0() - d};
  }

  static CompactInterval<Rational> interval_j(std::size_t n) {
    const Rational d = delta(n);
    if (n % 2 == 0) return {y1() - 2 * d, y1() - d};
    return {y1() - 8 * d, y1() - 7 * d};
  }

  const CompactInterval<Rational>& I(std::size_t n) const { return i_.at(n); }
  const CompactInterval<Rational>& J(std::size_t n) const { return j_.at(n); }

  // x_index, a pure function of the scheme (defined for any level).
  static Rational position(std::uint64_t index) {
    const auto slot = two_cycle_slot(index);
    const auto box = slot.odd ? interval_j(slot.level) : interval_i(slot.level);
    const Rational spacing = box.diam() / Rational(BigInt((std::uint64_t{1} << slot.level) + 1));
    return box.lo + spacing * Rational(BigInt(slot.offset + 1));
  }

 private:
  // Re-checks every interval condition the membership rules rely on.
  void validate() const {
    const Rational zero = 0;
    const Rational eps = epsilon();
    for (std::size_t n = 0; n <= depth_; ++n) {
      const auto& in = i_[n];
      const auto& jn = j_[n];
      if (!(zero < in.lo && in.hi < y0())) fail("I_n must lie in (0, y0)", n);
      if (!(y0() < jn.lo && jn.hi < y1())) fail("J_n must lie in (y0, y1)", n);
      if (n % 2 == 0 && !(eps < interval_dist(in, jn))) fail("dist(I_n, J_n) must exceed eps for even n", n);
      if (n % 2 == 1 && !(union_diam(in, jn) < eps)) fail("diam(I_n u J_n) must be below eps for odd n", n);
      if (n > 0 && !(precedes(i_[n - 1], in) && precedes(j_[n - 1], jn))) fail("intervals must be ordered", n);
      // Geometric convergence to y0 and y1.
      if (8 * delta(n) < y0() - in.lo || 8 * delta(n) < y1() - jn.lo) fail("endpoints must converge to the 2-cycle", n);
    }
    for (std::size_t s = 0; s <= depth_; ++s) {
      for (std::size_t t = 0; t <= depth_; ++t) {
        if (s < t && !(eps < interval_dist(i_[s], j_[t]))) fail("dist(I_s, J_t) must exceed eps for s < t", s);
        if (s > t && !(union_diam(i_[s], j_[t]) < eps)) fail("diam(I_s u J_t) must be below eps for s > t", s);
      }
    }
  }

  [[noreturn]] static void fail(const std::string& what, std::size_t n) {
    throw std::logic_error("two-cycle construction invalid at index " + std::to_string(n) + ": " + what);
  }

  std::size_t depth_;
  std::vector<CompactInterval<Rational>> i_;
  std::vector<CompactInterval<Rational>> j_;
};

inline TwoCycleConstruction build_two_cycle(std::size_t depth) { return TwoCycleConstruction(depth); }

// x_0, ..., x_{n-1}; evens increase to 1/4 and odds increase to 3/4.
inline std::vector<Rational> two_cycle_positions(const TwoCycleConstruction& c, std::uint64_t n) {
  if (n > c.max_points()) throw std::out_of_range("requested positions exceed the construction depth");
  std::vector<Rational> out;
  out.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) out.push_back(TwoCycleConstruction::position(k));
  return out;
}

// |x_i - x_j| <= 1/2 decided from interval membership alone: same parity, or
// I_s against J_s with s odd, or I_s against J_t with s > t.
inline bool two_cycle_recurrence_rule(std::uint64_t i, std::uint64_t j) {
  const auto a = two_cycle_slot(i);
  const auto b = two_cycle_slot(j);
  if (a.odd == b.odd) return true;
  const std::size_t s = a.odd ? b.level : a.level;  // level of the point in I
  const std::size_t t = a.odd ? a.level : b.level;  // level of the point in J
  if (s == t) return s % 2 == 1;
  return s > t;
}

// C_1(x_0, n, 1/2) by scanning every index pair with the membership rule.
inline CorrelationSum two_cycle_c1_pair_scan(std::uint64_t n, unsigned threads = 1) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  // Group id = 2 * level + parity; the rule depends on nothing else.
  const std::size_t top_level = two_cycle_slot(n - 1).level;
  const std::size_t groups = 2 * (top_level + 1);
  std::vector<std::uint8_t> rule(groups * groups);
  for (std::size_t g = 0; g < groups; ++g) {
    for (std::size_t h = 0; h < groups; ++h) {
      const bool g_odd = g % 2 == 1, h_odd = h % 2 == 1;
      const std::size_t gl = g / 2, hl = h / 2;
      bool rec;
      if (g_odd == h_odd) {
        rec = true;
      } else {
        const std::size_t s = g_odd ? hl : gl;
        const std::size_t t = g_odd ? gl : hl;
        rec = (s == t) ? (s % 2 == 1) : (s > t);
      }
      rule[g * groups + h] = rec ? 1 : 0;
    }
  }
  std::vector<std::uint8_t> group(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    const auto slot = two_cycle_slot(k);
    group[k] = static_cast<std::uint8_t>(2 * slot.level + (slot.odd ? 1 : 0));
  }
  const std::uint64_t upper = parallel_row_sum(n, threads, [&](std::size_t i) {
    const std::uint8_t* row = rule.data() + group[i] * groups;
    std::uint64_t count = 0;
    for (std::uint64_t j = i + 1; j < n; ++j) count += row[group[j]];
    return count;
  });
  return CorrelationSum{2 * upper + n, n};
}

// Closed form at n_k = 2(2^{k+1} - 1):
// 2/n^2 [ (2^{k+1}-1)^2 + (4/15)(16^{ceil(k/2)} - 1) + (4^{k+1} - 3 2^{k+1} + 2)/3 ].
inline Rational two_cycle_c1_closed_form(std::size_t k) {
  if (k < 1) throw std::invalid_argument("closed form holds for k >= 1");
  const BigInt two_k1 = pow_int(2, static_cast<unsigned>(k + 1));
  const BigInt n = 2 * (two_k1 - 1);
  const Rational same_parity = Rational((two_k1 - 1) * (two_k1 - 1));
  const Rational odd_levels = make_rational(4, 15) * Rational(pow_int(16, static_cast<unsigned>((k + 1) / 2)) - 1);
  const Rational cross_levels = Rational(pow_int(4, static_cast<unsigned>(k + 1)) - 3 * two_k1 + 2) / Rational(3);
  return Rational(2) / Rational(n * n) * (same_parity + odd_levels + cross_levels);
}

// Piecewise-linear realisation through the generated points up to `depth`:
// [x_0, y0] -> [x_1, y1] and [x_1, y1] -> [x_2, y0] increasing with
// f(x_n) = x_{n+1}; constant x_1 on [0, x_0); constant y0 on (y1, 1]; linear
// decreasing [y0, x_1] -> [x_2, y1]. The last segment before y0 (and before
// y1) closes the graph linearly onto the cycle, so iteration from x_0 follows
// the construction only while indices stay within depth.
inline PiecewiseLinearMap<Rational> two_cycle_numeric_map(const TwoCycleConstruction& c, std::size_t depth) {
  if (depth > c.depth()) throw std::out_of_range("map depth exceeds the construction depth");
  const std::uint64_t half = two_cycle_points_through(depth) / 2;  // evens (and odds) through this level
  std::vector<Rational> xs, ys;
  xs.reserve(2 * half + 4);
  ys.reserve(2 * half + 4);
  const Rational x1 = TwoCycleConstruction::position(1);
  xs.push_back(0);
  ys.push_back(x1);
  for (std::uint64_t i = 0; i < half; ++i) {
    xs.push_back(TwoCycleConstruction::position(2 * i));
    ys.push_back(TwoCycleConstruction::position(2 * i + 1));
  }
  xs.push_back(TwoCycleConstruction::y0());
  ys.push_back(TwoCycleConstruction::y1());
  for (std::uint64_t i = 0; i < half; ++i) {
    xs.push_back(TwoCycleConstruction::position(2 * i + 1));
    ys.push_back(TwoCycleConstruction::position(2 * i + 2));
  }
  xs.push_back(TwoCycleConstruction::y1());
  ys.push_back(TwoCycleConstruction::y0());
  xs.push_back(1);
  ys.push_back(TwoCycleConstruction::y0());
  return PiecewiseLinearMap<Rational>(std::move(xs), std::move(ys));
}

// The repelling fixed point z in (y0, x_1) of the decreasing branch.
inline Rational two_cycle_fixed_point() {
  const Rational y0 = TwoCycleConstruction::y0(), y1 = TwoCycleConstruction::y1();
  const Rational x1 = TwoCycleConstruction::position(1), x2 = TwoCycleConstruction::position(2);
  const Rational slope = (x2 - y1) / (x1 - y0);
  return (y1 - slope * y0) / (Rational(1) - slope);
}

// CSV columns k,n,c1_num,c1_den,c1_float,parity for k = 1..max_k.
inline std::string two_cycle_c1_csv(std::size_t max_k) {
  std::string out = "k,n,c1_num,c1_den,c1_float,parity\n";
  for (std::size_t k = 1; k <= max_k; ++k) {
    const Rational c = two_cycle_c1_closed_form(k);
    out += std::to_string(k) + "," + std::to_string(two_cycle_points_through(k)) + "," + numerator_string(c) + "," +
           denominator_string(c) + "," + format_float(to_double(c)) + "," + (k % 2 == 0 ? "even" : "odd") + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Delahaye-type admissible system.

class DelahayeConstruction {
 public:
  DelahayeConstruction(std::int64_t r, std::size_t depth_cap)
      : r_(r), system_(checked_system(r, depth_cap)) {
    validate();
  }

  std::int64_t r() const { return r_; }
  const AdmissibleSystem& system() const { return system_; }
  // eps_k = r^{-k}.
  Rational epsilon(std::size_t k) const { return pow_rational(make_rational(1, r_), static_cast<unsigned>(k)); }

 private:
  static AdmissibleSystem checked_system(std::int64_t r, std::size_t depth_cap) {
    if (r < 5) throw std::invalid_argument("Delahaye construction needs r >= 5");
    return make_delahaye_system(r, depth_cap);
  }

  // dist(K_0, K_1) = 1 - 3/r and dist(K_{a0}, K_{a1}) = (r-2) r^{-(t+1)} or
  // twice that, depending on a_0.
  void validate() const {
    const auto& top = system_.level(1);
    if (interval_dist(top[0], top[1]) != Rational(1) - make_rational(3, r_))
      throw std::logic_error("Delahaye system: dist(K_0, K_1) != 1 - 3/r");
    const std::size_t check_depth = std::min<std::size_t>(system_.depth_cap() - 1, 10);
    for (std::size_t t = 1; t <= check_depth; ++t) {
      const auto& children = system_.level(t + 1);
      const std::uint64_t p = std::uint64_t{1} << t;
      const Rational unit = Rational(r_ - 2) * pow_rational(make_rational(1, r_), static_cast<unsigned>(t + 1));
      for (std::uint64_t a = 0; a < p; ++a) {
        const Rational expected = (a & 1U) == 0 ? unit : Rational(2 * unit);
        if (interval_dist(children[a], children[a + p]) != expected)
          throw std::logic_error("Delahaye system: sibling gap mismatch at depth " + std::to_string(t));
      }
    }
  }

  std::int64_t r_;
  AdmissibleSystem system_;
};

inline DelahayeConstruction build_delahaye(std::int64_t r, std::size_t depth_cap) {
  return DelahayeConstruction(r, depth_cap);
}

struct DelahayeCounts {
  BigInt n1_closed;  // #N_1°(t, eps_k)
  BigInt nm_closed;  // #N_m°(t, eps_k)
  bool enumerated = true;
};

// Counts at depth t for eps_k. Enumerated while p_t^2 fits the pair budget;
// beyond that the depth-(k+1) counts are scaled by 4^{t-(k+1)}.
inline DelahayeCounts delahaye_counts(const DelahayeConstruction& c, std::size_t k, std::size_t m, std::size_t t,
                                      const CountOptions& opts = {}) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (m < 1) throw std::invalid_argument("window length m must be >= 1");
  if (t < k + 1) throw std::invalid_argument("depth t must be >= k + 1");
  const Rational eps = c.epsilon(k);
  DelahayeCounts out;
  const bool fits = t < 32 && t <= c.system().depth_cap() &&
                    (std::uint64_t{1} << t) <= (std::uint64_t{1} << 31) &&
                    (std::uint64_t{1} << t) * (std::uint64_t{1} << t) <= opts.max_pairs;
  if (fits) {
    out.n1_closed = BigInt(count_pairs(c.system(), t, 1, eps, PairMode::closed, opts));
    out.nm_closed = BigInt(count_pairs(c.system(), t, m, eps, PairMode::closed, opts));
    return out;
  }
  const std::size_t base_t = k + 1;
  const BigInt scale = pow_int(4, static_cast<unsigned>(t - base_t));
  out.n1_closed = BigInt(count_pairs(c.system(), base_t, 1, eps, PairMode::closed, opts)) * scale;
  out.nm_closed = BigInt(count_pairs(c.system(), base_t, m, eps, PairMode::closed, opts)) * scale;
  out.enumerated = false;
  return out;
}

// lim_t #N_m°/#N_1° at eps_k; the ratio is already constant from t = k+1 on.
inline Rational delahaye_rdet(const DelahayeConstruction& c, std::size_t k, std::size_t m,
                              const CountOptions& opts = {}) {
  if (m == 1) return Rational(1);
  const auto counts = delahaye_counts(c, k, m, k + 1, opts);
  return Rational(counts.nm_closed) / Rational(counts.n1_closed);
}

// m rdet_m - (m-1) rdet_{m+1} in the limit n -> infinity.
inline Rational delahaye_det(const DelahayeConstruction& c, std::size_t k, std::size_t m,
                             const CountOptions& opts = {}) {
  return rqa_det_from(m, delahaye_rdet(c, k, m, opts), delahaye_rdet(c, k, m + 1, opts));
}

}  // namespace rqa
