#pragma once

// File formats: JSON for configurations, maps, systems and orbit reports;
// CSV for trajectories. Exact values travel as strings ("3/16", "0.25").

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rqa/dynamics.hpp"
#include "rqa/finite_omega.hpp"
#include "rqa/interval_config.hpp"
#include "rqa/numeric.hpp"
#include "rqa/solenoidal.hpp"

namespace rqa::io {

using json = nlohmann::json;

template <class T>
T scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar<T>(j.get<std::string>());
  if (j.is_number_integer()) return T(j.get<std::int64_t>());
  if (j.is_number()) {
    if constexpr (std::is_same_v<T, Rational>) {
      throw std::invalid_argument("exact values must be given as strings, not JSON floats");
    } else {
      return j.get<double>();
    }
  }
  throw std::invalid_argument("expected a number or numeric string");
}

template <class T>
json scalar_to_json(const T& x) {
  return to_string(x);
}

// [[lo, hi], ...]
template <class T>
json configuration_to_json(const Configuration<T>& c) {
  json out = json::array();
  for (const auto& k : c.intervals()) out.push_back(json::array({scalar_to_json(k.lo), scalar_to_json(k.hi)}));
  return out;
}

template <class T>
Configuration<T> configuration_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("configuration must be a JSON array of [lo, hi] pairs");
  std::vector<CompactInterval<T>> intervals;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2) throw std::invalid_argument("each interval must be a [lo, hi] pair");
    intervals.emplace_back(scalar_from_json<T>(item[0]), scalar_from_json<T>(item[1]));
  }
  return Configuration<T>(std::move(intervals));
}

// {"breakpoints": [...], "values": [...]}
template <class T>
json map_to_json(const PiecewiseLinearMap<T>& f) {
  json bps = json::array(), vals = json::array();
  for (const auto& b : f.breakpoints()) bps.push_back(scalar_to_json(b));
  for (const auto& v : f.values()) vals.push_back(scalar_to_json(v));
  return json{{"breakpoints", bps}, {"values", vals}};
}

template <class T>
PiecewiseLinearMap<T> map_from_json(const json& j) {
  if (!j.is_object() || !j.contains("breakpoints") || !j.contains("values"))
    throw std::invalid_argument("map JSON needs 'breakpoints' and 'values'");
  std::vector<T> bps, vals;
  for (const auto& b : j.at("breakpoints")) bps.push_back(scalar_from_json<T>(b));
  for (const auto& v : j.at("values")) vals.push_back(scalar_from_json<T>(v));
  return PiecewiseLinearMap<T>(std::move(bps), std::move(vals));
}

// index,value rows.
template <class T>
std::string trajectory_csv(const Trajectory<T>& t) {
  std::string out = "index,value\n";
  for (std::size_t i = 0; i < t.size(); ++i) out += std::to_string(i) + "," + to_string(t[i]) + "\n";
  return out;
}

// {"kind": "delahaye", "r": 5, "depth_cap": 12}
inline json system_to_json(const AdmissibleSystem& s) {
  return json{{"kind", s.kind()}, {"r", s.parameter()}, {"depth_cap", s.depth_cap()}};
}

inline AdmissibleSystem system_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind != "delahaye") throw std::invalid_argument("unsupported system kind '" + kind + "'");
  const auto depth_cap = j.contains("depth_cap") ? j.at("depth_cap").get<std::size_t>() : std::size_t{16};
  return make_delahaye_system(j.at("r").get<std::int64_t>(), depth_cap);
}

// {p, orbit, m, epsilon, c_m_num, c_m_den, excluded}
template <class T>
json orbit_report(const PeriodicOrbitData<T>& o, std::size_t m, const T& epsilon) {
  const auto value = closed_form_corr_sum(o, m, epsilon);
  json orbit = json::array(), excluded = json::array();
  for (const auto& y : o.points()) orbit.push_back(scalar_to_json(y));
  for (const auto& e : excluded_epsilons(o, m)) excluded.push_back(scalar_to_json(e));
  return json{{"p", o.period()},
              {"orbit", orbit},
              {"m", m},
              {"epsilon", scalar_to_json(epsilon)},
              {"c_m_num", numerator_string(value.value)},
              {"c_m_den", denominator_string(value.value)},
              {"c_m_float", to_double(value.value)},
              {"excluded_epsilon", value.excluded_epsilon},
              {"excluded", excluded}};
}

}  // namespace rqa::io
