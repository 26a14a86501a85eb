#pragma once

// Scalar plumbing shared by every module: the exact rational type, parsing
// and formatting of rational strings, and a deterministic parallel counter.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <utility>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace rqa {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

// Thrown when an enumeration would exceed the configured pair budget.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline double to_double(double x) { return x; }
inline double to_double(std::int64_t x) { return static_cast<double>(x); }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline double to_double(const BigInt& x) { return x.convert_to<double>(); }

template <class T>
T abs_diff(const T& a, const T& b) {
  return a < b ? T(b - a) : T(a - b);
}

template <class T>
const T& max_of(const T& a, const T& b) {
  return a < b ? b : a;
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(num) / Rational(den);
}

inline Rational pow_rational(const Rational& base, unsigned exponent) {
  Rational result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

inline BigInt pow_int(unsigned base, unsigned exponent) {
  BigInt result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

namespace detail {

inline bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline BigInt parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
  BigInt value{std::string(s)};
  return negative ? BigInt(-value) : value;
}

}  // namespace detail

// Accepts "p/q" fractions only, plus bare integers. Decimal points are refused
// so that thresholds given on the command line keep exact tie semantics.
inline Rational parse_fraction(std::string_view text) {
  auto s = detail::trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(s));
  BigInt num = detail::parse_integer(s.substr(0, slash));
  auto den_text = s.substr(slash + 1);
  if (!detail::all_digits(den_text)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  BigInt den{std::string(den_text)};
  if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  return Rational(num) / Rational(den);
}

// Accepts "p/q", integers and finite decimals ("0.125", "-3.5"); decimals are
// converted exactly.
inline Rational parse_rational(std::string_view text) {
  auto s = detail::trim(text);
  auto dot = s.find('.');
  if (dot == std::string_view::npos) return parse_fraction(s);
  if (s.find('/') != std::string_view::npos) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  bool negative = !s.empty() && s.front() == '-';
  auto int_part = s.substr(0, dot);
  if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
  auto frac_part = s.substr(dot + 1);
  if ((!int_part.empty() && !detail::all_digits(int_part)) || !detail::all_digits(frac_part))
    throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
  BigInt whole = int_part.empty() ? BigInt(0) : BigInt(std::string(int_part));
  BigInt frac{std::string(frac_part)};
  BigInt scale = pow_int(10, static_cast<unsigned>(frac_part.size()));
  Rational value = Rational(whole) + Rational(frac) / Rational(scale);
  return negative ? Rational(-value) : value;
}

// Canonical exact form: "p/q" in lowest terms, or "p" when q = 1.
inline std::string to_string(const Rational& x) {
  auto num = boost::multiprecision::numerator(x);
  auto den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::string to_string(const BigInt& x) { return x.str(); }
inline std::string to_string(std::int64_t x) { return std::to_string(x); }

// Shortest round-trip decimal for doubles.
inline std::string to_string(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

inline std::string numerator_string(const Rational& x) { return boost::multiprecision::numerator(x).str(); }
inline std::string denominator_string(const Rational& x) { return boost::multiprecision::denominator(x).str(); }

// Fixed-precision float rendering used in CSV float columns.
inline std::string format_float(double x) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(12);
  os << x;
  return os.str();
}

template <class T>
T parse_scalar(std::string_view text);

template <>
inline Rational parse_scalar<Rational>(std::string_view text) {
  return parse_rational(text);
}

template <>
inline double parse_scalar<double>(std::string_view text) {
  auto s = std::string(detail::trim(text));
  if (s.find('/') != std::string::npos) return to_double(parse_fraction(s));
  std::size_t used = 0;
  double value = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("malformed number: '" + s + "'");
  return value;
}

// Number of worker threads used by the pair scans when the caller passes 0.
inline unsigned default_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1U : hw;
}

// Reduces row_value(row) over rows [0, rows) with operator+= on up to
// `threads` workers. Rows are dealt round-robin and partials are merged in
// worker order; with integer accumulators the result never depends on the
// thread count.
template <class Acc, class RowFn>
Acc parallel_row_reduce(std::size_t rows, unsigned threads, RowFn&& row_value) {
  if (threads == 0) threads = default_threads();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(rows, 1)));
  if (threads <= 1) {
    Acc total{};
    for (std::size_t r = 0; r < rows; ++r) total += row_value(r);
    return total;
  }
  std::vector<Acc> partial(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      Acc local{};
      for (std::size_t r = w; r < rows; r += threads) local += row_value(r);
      partial[w] = local;
    });
  }
  for (auto& t : workers) t.join();
  Acc total{};
  for (const auto& v : partial) total += v;
  return total;
}

template <class RowFn>
std::uint64_t parallel_row_sum(std::size_t rows, unsigned threads, RowFn&& row_value) {
  return parallel_row_reduce<std::uint64_t>(rows, threads, std::forward<RowFn>(row_value));
}

}  // namespace rqa
