#pragma once

// Words over A^t with odometer addition, admissible nested-interval systems
// K_a, and the pair counts N_m / N_m° that sandwich the asymptotic
// correlation sum of points whose omega-limit set is the Cantor set Q.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rqa/interval_config.hpp"
#include "rqa/numeric.hpp"

namespace rqa {

// a = a_0 a_1 ... a_{t-1}; digit a_i ranges over [0, q_i). The leftmost digit
// is least significant: 10...0 is identified with the integer 1.
class Word {
 public:
  Word() = default;
  Word(std::vector<std::uint32_t> digits, std::vector<std::uint32_t> radices)
      : digits_(std::move(digits)), radices_(std::move(radices)) {
    if (digits_.size() != radices_.size()) throw std::invalid_argument("word needs one radix per digit");
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (radices_[i] < 2) throw std::invalid_argument("word radices must be >= 2");
      if (digits_[i] >= radices_[i]) throw std::invalid_argument("word digit out of range");
    }
  }

  // Binary word from a string such as "0110".
  static Word binary(const std::string& bits) {
    std::vector<std::uint32_t> digits;
    digits.reserve(bits.size());
    for (char c : bits) {
      if (c != '0' && c != '1') throw std::invalid_argument("binary word must contain only 0 and 1");
      digits.push_back(static_cast<std::uint32_t>(c - '0'));
    }
    return Word(std::move(digits), std::vector<std::uint32_t>(bits.size(), 2));
  }

  static Word zeros(std::size_t t) { return Word(std::vector<std::uint32_t>(t, 0), std::vector<std::uint32_t>(t, 2)); }

  // Word with value `index` (mod p_t) over the given radices.
  static Word from_index(std::uint64_t index, std::vector<std::uint32_t> radices) {
    std::vector<std::uint32_t> digits(radices.size());
    for (std::size_t i = 0; i < radices.size(); ++i) {
      digits[i] = static_cast<std::uint32_t>(index % radices[i]);
      index /= radices[i];
    }
    return Word(std::move(digits), std::move(radices));
  }

  std::size_t length() const { return digits_.size(); }
  const std::vector<std::uint32_t>& digits() const { return digits_; }
  const std::vector<std::uint32_t>& radices() const { return radices_; }
  std::uint32_t operator[](std::size_t i) const { return digits_[i]; }

  // p_t = q_0 q_1 ... q_{t-1}.
  std::uint64_t period() const {
    std::uint64_t p = 1;
    for (auto q : radices_) p *= q;
    return p;
  }

  std::uint64_t index() const {
    std::uint64_t value = 0;
    for (std::size_t i = digits_.size(); i-- > 0;) value = value * radices_[i] + digits_[i];
    return value;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (radices_[i] <= 10) {
        s.push_back(static_cast<char>('0' + digits_[i]));
      } else {
        if (i > 0) s.push_back('.');
        s += std::to_string(digits_[i]);
      }
    }
    return s;
  }

  friend bool operator==(const Word& a, const Word& b) { return a.digits_ == b.digits_ && a.radices_ == b.radices_; }

 private:
  std::vector<std::uint32_t> digits_;
  std::vector<std::uint32_t> radices_;
};

// Odometer addition with carry from left to right, wrapping modulo p_t.
inline Word word_add(const Word& a, std::uint64_t k) {
  std::vector<std::uint32_t> digits = a.digits();
  const auto& radices = a.radices();
  std::uint64_t carry = k;
  for (std::size_t i = 0; i < digits.size() && carry != 0; ++i) {
    std::uint64_t sum = digits[i] + carry % radices[i];
    carry /= radices[i];
    if (sum >= radices[i]) {
      sum -= radices[i];
      ++carry;
    }
    digits[i] = static_cast<std::uint32_t>(sum);
  }
  return Word(std::move(digits), radices);
}

// The depth-t itinerary alpha + i, i = 0..n-1, of a point of K_alpha.
inline std::vector<Word> symbolic_trajectory(const Word& alpha_prefix, std::size_t n) {
  std::vector<Word> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(word_add(alpha_prefix, i));
  return out;
}

// Binary admissible system {K_a}: K_empty = [0,1]; the 0-child keeps the
// parent's left endpoint, the 1-child keeps its right endpoint, and lengths
// come from the diameter rule. Levels are materialised lazily and cached.
class AdmissibleSystem {
 public:
  using DiamRule = std::function<Rational(const Word&)>;

  AdmissibleSystem(DiamRule rule, std::size_t depth_cap, std::string kind = "custom", std::int64_t parameter = 0)
      : rule_(std::move(rule)), depth_cap_(depth_cap), kind_(std::move(kind)), parameter_(parameter),
        cache_(std::make_shared<Cache>()) {
    if (!rule_) throw std::invalid_argument("admissible system needs a diameter rule");
    if (depth_cap_ < 1 || depth_cap_ > 40) throw std::invalid_argument("depth cap must be in [1, 40]");
  }

  std::size_t depth_cap() const { return depth_cap_; }
  const std::string& kind() const { return kind_; }
  std::int64_t parameter() const { return parameter_; }
  Rational diam_of(const Word& a) const { return rule_(a); }

  CompactInterval<Rational> interval_of_word(const Word& a) const {
    check_depth(a.length());
    for (auto q : a.radices()) {
      if (q != 2) throw std::invalid_argument("admissible systems are binary");
    }
    CompactInterval<Rational> current(Rational(0), Rational(1));
    std::vector<std::uint32_t> prefix;
    for (std::size_t i = 0; i < a.length(); ++i) {
      prefix.push_back(a[i]);
      current = child(current, Word(prefix, std::vector<std::uint32_t>(prefix.size(), 2)));
    }
    return current;
  }

  // All depth-t intervals, indexed by odometer index of the word.
  const std::vector<CompactInterval<Rational>>& level(std::size_t t) const {
    check_depth(t);
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto& levels = cache_->levels;
    if (levels.empty()) levels.push_back({CompactInterval<Rational>(Rational(0), Rational(1))});
    while (levels.size() <= t) {
      const std::size_t depth = levels.size();  // building words of this length
      const auto& parents = levels.back();
      const std::uint64_t parent_count = parents.size();
      std::vector<CompactInterval<Rational>> next(2 * parent_count);
      for (std::uint64_t v = 0; v < 2 * parent_count; ++v) {
        Word w = Word::from_index(v, std::vector<std::uint32_t>(depth, 2));
        next[v] = child(parents[v % parent_count], w);
      }
      for (std::uint64_t v = 0; v < parent_count; ++v) {
        if (!precedes(next[v], next[v + parent_count]))
          throw std::logic_error("diameter rule violates K_{a0} < K_{a1}");
      }
      levels.push_back(std::move(next));
    }
    return levels[t];
  }

  // nu_t = max diam K_a over A^t.
  Rational nu(std::size_t t) const {
    const auto& lv = level(t);
    Rational best = 0;
    for (const auto& k : lv) {
      Rational d = k.diam();
      if (best < d) best = d;
    }
    return best;
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::deque<std::vector<CompactInterval<Rational>>> levels;
  };

  void check_depth(std::size_t t) const {
    if (t > depth_cap_) throw std::out_of_range("word length exceeds the system depth cap");
  }

  CompactInterval<Rational> child(const CompactInterval<Rational>& parent, const Word& w) const {
    Rational d = rule_(w);
    if (!(Rational(0) < d)) throw std::logic_error("diameter rule must be positive");
    if (parent.diam() < d) throw std::logic_error("diameter rule exceeds the parent interval");
    if (w[w.length() - 1] == 0) return CompactInterval<Rational>(parent.lo, parent.lo + d);
    return CompactInterval<Rational>(parent.hi - d, parent.hi);
  }

  DiamRule rule_;
  std::size_t depth_cap_;
  std::string kind_;
  std::int64_t parameter_;
  std::shared_ptr<Cache> cache_;
};

// Diameter rule diam K_a = r^{-t} if a_0 = 0 and 2 r^{-t} if a_0 = 1, t = |a|.
inline AdmissibleSystem make_delahaye_system(std::int64_t r, std::size_t depth_cap) {
  if (r < 3) throw std::invalid_argument("Delahaye diameter rule needs r >= 3 to be admissible");
  auto rule = [r](const Word& a) {
    Rational d = pow_rational(make_rational(1, r), static_cast<unsigned>(a.length()));
    return a[0] == 0 ? d : Rational(2 * d);
  };
  return AdmissibleSystem(rule, depth_cap, "delahaye", r);
}

namespace detail {

inline std::uint64_t shift(std::uint64_t index, std::uint64_t i, std::uint64_t p) { return (index + i) % p; }

}  // namespace detail

// max_{i < m} dist(K_{a+i}, K_{b+i}).
inline Rational dist_m_words(const AdmissibleSystem& s, const Word& a, const Word& b, std::size_t m) {
  if (a.length() != b.length()) throw std::invalid_argument("words must have equal length");
  if (m < 1) throw std::invalid_argument("window length m must be >= 1");
  const auto& lv = s.level(a.length());
  const std::uint64_t p = lv.size();
  const std::uint64_t steps = std::min<std::uint64_t>(m, p);
  Rational best = 0;
  for (std::uint64_t i = 0; i < steps; ++i) {
    Rational d = interval_dist(lv[detail::shift(a.index(), i, p)], lv[detail::shift(b.index(), i, p)]);
    if (best < d) best = d;
  }
  return best;
}

// max_{i < m} diam(K_{a+i} u K_{b+i}).
inline Rational diam_m_words(const AdmissibleSystem& s, const Word& a, const Word& b, std::size_t m) {
  if (a.length() != b.length()) throw std::invalid_argument("words must have equal length");
  if (m < 1) throw std::invalid_argument("window length m must be >= 1");
  const auto& lv = s.level(a.length());
  const std::uint64_t p = lv.size();
  const std::uint64_t steps = std::min<std::uint64_t>(m, p);
  Rational best = 0;
  for (std::uint64_t i = 0; i < steps; ++i) {
    Rational d = union_diam(lv[detail::shift(a.index(), i, p)], lv[detail::shift(b.index(), i, p)]);
    if (best < d) best = d;
  }
  return best;
}

enum class PairMode { strict, closed };
enum class CountBackend { automatic, grid, rational };

inline constexpr std::uint64_t kDefaultMaxPairs = std::uint64_t{1} << 26;

struct CountOptions {
  std::uint64_t max_pairs = kDefaultMaxPairs;
  unsigned threads = 1;
  CountBackend backend = CountBackend::automatic;
};

// N_m counts pairs with dist_m < eps (strict); N_m° pairs with diam_m <= eps.
// The base point of the orbit plays no role: both depend only on the system.
struct SolenoidalCounts {
  std::size_t t = 0;
  std::uint64_t p_t = 1;
  std::size_t m = 1;
  Rational epsilon;
  std::uint64_t n_strict = 0;
  std::uint64_t n_closed = 0;

  Rational p_squared() const { return Rational(BigInt(p_t) * BigInt(p_t)); }
  Rational lower() const { return Rational(BigInt(n_closed)) / p_squared(); }
  Rational upper() const { return Rational(BigInt(n_strict)) / p_squared(); }
  // 4m(p_t - 1)/p_t^2.
  Rational width_bound() const {
    return Rational(BigInt(4) * BigInt(m) * BigInt(p_t - 1)) / p_squared();
  }
  std::uint64_t count(PairMode mode) const { return mode == PairMode::strict ? n_strict : n_closed; }
};

namespace detail {

// Depth-t endpoints on a common integer grid of spacing 1/scale.
struct GridLevel {
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;
  BigInt scale;
};

inline std::optional<GridLevel> make_grid(const std::vector<CompactInterval<Rational>>& lv) {
  BigInt scale = 1;
  for (const auto& k : lv) {
    scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(k.lo));
    scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(k.hi));
  }
  const BigInt limit = BigInt(1) << 62;
  if (scale >= limit) return std::nullopt;
  GridLevel g;
  g.scale = scale;
  g.lo.reserve(lv.size());
  g.hi.reserve(lv.size());
  for (const auto& k : lv) {
    Rational lo = k.lo * Rational(scale);
    Rational hi = k.hi * Rational(scale);
    BigInt lo_i = boost::multiprecision::numerator(lo);
    BigInt hi_i = boost::multiprecision::numerator(hi);
    if (boost::multiprecision::abs(lo_i) >= limit || boost::multiprecision::abs(hi_i) >= limit) return std::nullopt;
    g.lo.push_back(lo_i.convert_to<std::int64_t>());
    g.hi.push_back(hi_i.convert_to<std::int64_t>());
  }
  return g;
}

inline bool fits_i64(const BigInt& v) { return boost::multiprecision::abs(v) < (BigInt(1) << 62); }

struct PairTally {
  std::uint64_t strict = 0;
  std::uint64_t closed = 0;
  PairTally& operator+=(const PairTally& o) {
    strict += o.strict;
    closed += o.closed;
    return *this;
  }
};

inline std::uint64_t checked_square(std::uint64_t p) {
  if (p > (std::uint64_t{1} << 31)) throw ResourceLimitError("p_t^2 overflows the pair counter");
  return p * p;
}

}  // namespace detail

inline SolenoidalCounts count_pairs(const AdmissibleSystem& s, std::size_t t, std::size_t m, const Rational& epsilon,
                                    const CountOptions& opts = {}) {
  if (m < 1) throw std::invalid_argument("window length m must be >= 1");
  if (!(Rational(0) < epsilon)) throw std::invalid_argument("epsilon must be positive");
  if (t > s.depth_cap()) throw std::out_of_range("depth exceeds the system depth cap");
  if (t >= 32) throw ResourceLimitError("depth too large to enumerate");
  const std::uint64_t p = std::uint64_t{1} << t;
  const std::uint64_t pairs = detail::checked_square(p);
  if (pairs > opts.max_pairs)
    throw ResourceLimitError("pair scan of " + std::to_string(pairs) + " word pairs exceeds the budget of " +
                             std::to_string(opts.max_pairs));
  const auto& lv = s.level(t);
  const std::uint64_t steps = std::min<std::uint64_t>(m, p);

  SolenoidalCounts out;
  out.t = t;
  out.p_t = p;
  out.m = m;
  out.epsilon = epsilon;

  std::optional<detail::GridLevel> grid;
  const BigInt eps_num = boost::multiprecision::numerator(epsilon);
  const BigInt eps_den = boost::multiprecision::denominator(epsilon);
  if (opts.backend != CountBackend::rational && detail::fits_i64(eps_num) && detail::fits_i64(eps_den))
    grid = detail::make_grid(lv);
  if (opts.backend == CountBackend::grid && !grid)
    throw std::invalid_argument("grid backend unavailable: endpoints do not fit a 62-bit grid");

  auto tally_row = [&](std::size_t a, auto&& test) {
    detail::PairTally tally;
    for (std::uint64_t b = a; b < p; ++b) {
      bool is_strict = true, is_closed = true;
      for (std::uint64_t i = 0; i < steps && (is_strict || is_closed); ++i) test((a + i) % p, (b + i) % p, is_strict, is_closed);
      const std::uint64_t weight = (b == a) ? 1 : 2;
      tally.strict += is_strict ? weight : 0;
      tally.closed += is_closed ? weight : 0;
    }
    return tally;
  };

  detail::PairTally total;
  if (grid) {
    // dist < eps  <=>  gap * den < num * scale on the integer grid.
    const __int128 den = eps_den.convert_to<std::int64_t>();
    const __int128 rhs = static_cast<__int128>(eps_num.convert_to<std::int64_t>()) *
                         static_cast<__int128>(grid->scale.convert_to<std::int64_t>());
    const auto& lo = grid->lo;
    const auto& hi = grid->hi;
    auto test = [&](std::uint64_t x, std::uint64_t y, bool& is_strict, bool& is_closed) {
      std::int64_t gap = 0;
      if (hi[x] < lo[y]) gap = lo[y] - hi[x];
      else if (hi[y] < lo[x]) gap = lo[x] - hi[y];
      const std::int64_t hull = std::max(hi[x], hi[y]) - std::min(lo[x], lo[y]);
      if (is_strict && !(static_cast<__int128>(gap) * den < rhs)) is_strict = false;
      if (is_closed && static_cast<__int128>(hull) * den > rhs) is_closed = false;
    };
    total = parallel_row_reduce<detail::PairTally>(p, opts.threads, [&](std::size_t a) { return tally_row(a, test); });
  } else {
    auto test = [&](std::uint64_t x, std::uint64_t y, bool& is_strict, bool& is_closed) {
      if (is_strict && !(interval_dist(lv[x], lv[y]) < epsilon)) is_strict = false;
      if (is_closed && epsilon < union_diam(lv[x], lv[y])) is_closed = false;
    };
    total = parallel_row_reduce<detail::PairTally>(p, opts.threads, [&](std::size_t a) { return tally_row(a, test); });
  }
  const std::uint64_t strict_total = total.strict;
  const std::uint64_t closed_total = total.closed;
  out.n_strict = strict_total;
  out.n_closed = closed_total;
  return out;
}

inline std::uint64_t count_pairs(const AdmissibleSystem& s, std::size_t t, std::size_t m, const Rational& epsilon,
                                 PairMode mode, const CountOptions& opts = {}) {
  return count_pairs(s, t, m, epsilon, opts).count(mode);
}

// Certified enclosures [#N_m°/p_t^2, #N_m/p_t^2] of the asymptotic correlation
// sum for each depth in the schedule.
inline std::vector<SolenoidalCounts> asymptotic_corr_sum(const AdmissibleSystem& s, std::size_t m,
                                                         const Rational& epsilon,
                                                         const std::vector<std::size_t>& t_schedule,
                                                         const CountOptions& opts = {}) {
  std::vector<SolenoidalCounts> out;
  out.reserve(t_schedule.size());
  for (auto t : t_schedule) out.push_back(count_pairs(s, t, m, epsilon, opts));
  return out;
}

// CSV columns t,p_t,m,epsilon_num,epsilon_den,N_strict,N_closed,lower,upper.
inline std::string counts_csv(const std::vector<SolenoidalCounts>& rows) {
  std::string out = "t,p_t,m,epsilon_num,epsilon_den,N_strict,N_closed,lower,upper\n";
  for (const auto& c : rows) {
    out += std::to_string(c.t) + "," + std::to_string(c.p_t) + "," + std::to_string(c.m) + "," +
           numerator_string(c.epsilon) + "," + denominator_string(c.epsilon) + "," + std::to_string(c.n_strict) +
           "," + std::to_string(c.n_closed) + "," + format_float(to_double(c.lower())) + "," +
           format_float(to_double(c.upper())) + "\n";
  }
  return out;
}

}  // namespace rqa
