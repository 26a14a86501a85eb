// Command-line front end for the rqa library. Every number printed here comes
// from a library call; the tool only parses arguments and formats output.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rqa/rqa_all.hpp"

namespace {

using rqa::Rational;
using json = nlohmann::json;

struct Common {
  std::string output;
  unsigned threads = 1;
};

struct SourceArgs {
  std::string map_path;
  std::size_t prop42_depth = 0;
  std::string x0 = "0";
  bool use_float = false;
};

struct SeriesArgs {
  SourceArgs source;
  std::size_t m = 1;
  std::string epsilon;
  std::size_t n = 0;
  std::string schedule;
};

void emit(const Common& common, const std::string& text) {
  if (common.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(common.output, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file '" + common.output + "'");
  out << text;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return json::parse(in);
}

std::uint64_t max_pairs_from_env() {
  if (const char* env = std::getenv("RQA_MAX_PAIRS")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("RQA_MAX_PAIRS must be a positive integer");
    }
  }
  return rqa::kDefaultMaxPairs;
}

std::vector<std::uint64_t> parse_schedule(const std::string& text, std::size_t n) {
  std::vector<std::uint64_t> out;
  if (!text.empty()) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw std::invalid_argument("empty entry in schedule");
      out.push_back(std::stoull(item));
    }
  } else if (n > 0) {
    out.push_back(n);
  }
  if (out.empty()) throw std::invalid_argument("give --n or --schedule");
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k] == 0) throw std::invalid_argument("schedule entries must be positive");
    if (k > 0 && !(out[k - 1] < out[k])) throw std::invalid_argument("schedule must be strictly increasing");
  }
  return out;
}

template <class T>
T parse_epsilon(const std::string& text) {
  if constexpr (std::is_same_v<T, Rational>) {
    // Exact mode accepts "p/q" or integers only.
    return rqa::parse_fraction(text);
  } else {
    return rqa::parse_scalar<double>(text);
  }
}

template <class T>
T convert_position(const Rational& x) {
  if constexpr (std::is_same_v<T, Rational>) return x;
  else return rqa::to_double(x);
}

// Trajectory of `length` points from either a JSON map or the two-cycle construction.
template <class T>
rqa::Trajectory<T> load_trajectory(const SourceArgs& src, std::size_t length) {
  if (!src.map_path.empty() && src.prop42_depth > 0) throw std::invalid_argument("give either --map or --prop42-depth");
  if (!src.map_path.empty()) {
    auto f = rqa::io::map_from_json<T>(read_json_file(src.map_path));
    return rqa::iterate(f, rqa::parse_scalar<T>(src.x0), length);
  }
  if (src.prop42_depth > 0) {
    rqa::TwoCycleConstruction c(src.prop42_depth);
    auto exact = rqa::two_cycle_positions(c, length);
    std::vector<T> pts;
    pts.reserve(exact.size());
    for (const auto& x : exact) pts.push_back(convert_position<T>(x));
    return rqa::Trajectory<T>(std::move(pts));
  }
  throw std::invalid_argument("give --map FILE or --prop42-depth T");
}

enum class SeriesKind { corrsum, rdet, det };

template <class T>
std::string run_series(const SeriesArgs& args, SeriesKind kind, const Common& common) {
  const auto schedule = parse_schedule(args.schedule, args.n);
  const T eps = parse_epsilon<T>(args.epsilon);
  const std::size_t extra = kind == SeriesKind::det ? args.m : args.m - 1;
  const auto traj = load_trajectory<T>(args.source, schedule.back() + extra);
  std::string out;
  switch (kind) {
    case SeriesKind::corrsum: {
      std::vector<rqa::SeriesPoint> values;
      for (auto n : schedule) {
        rqa::RQAParams<T> p(args.m, eps, n, common.threads);
        values.push_back({n, rqa::correlation_sum(traj, p).value()});
      }
      return rqa::series_csv(values);
    }
    case SeriesKind::rdet:
    case SeriesKind::det: {
      const char* name = kind == SeriesKind::rdet ? "rdet" : "det";
      out = std::string("n,m,") + name + "_num," + name + "_den," + name + "_float\n";
      for (auto n : schedule) {
        rqa::RQAParams<T> p(args.m, eps, n, common.threads);
        Rational v = kind == SeriesKind::rdet ? rqa::recurrence_determinism(traj, p) : rqa::rqa_det(traj, p);
        out += std::to_string(n) + "," + std::to_string(args.m) + "," + rqa::numerator_string(v) + "," +
               rqa::denominator_string(v) + "," + rqa::format_float(rqa::to_double(v)) + "\n";
      }
      return out;
    }
  }
  return out;
}

template <class T>
std::string run_rplot(const SeriesArgs& args) {
  if (args.n == 0) throw std::invalid_argument("rplot needs --n");
  const T eps = parse_epsilon<T>(args.epsilon);
  const auto traj = load_trajectory<T>(args.source, args.n + args.m - 1);
  return rqa::recurrence_matrix(traj, rqa::RQAParams<T>(args.m, eps, args.n)).to_pgm();
}

template <class T>
std::string run_finite(const SeriesArgs& args, const std::string& tol_text) {
  if (args.n == 0) throw std::invalid_argument("finite needs --n (trajectory length)");
  const T eps = parse_epsilon<T>(args.epsilon);
  const auto traj = load_trajectory<T>(args.source, args.n);
  const T tol = rqa::parse_scalar<T>(tol_text);
  auto ps = rqa::detect_periodic(traj, tol);
  if (!ps) throw std::invalid_argument("no eventual period detected within the trajectory");
  auto orbit = rqa::orbit_from_periodic(*ps);
  json report = rqa::io::orbit_report(orbit, args.m, eps);
  report["preperiod"] = ps->preperiod;
  const auto rdet = rqa::asymptotic_rdet_finite(orbit, args.m, eps);
  report["rdet_num"] = rqa::numerator_string(rdet.value);
  report["rdet_den"] = rqa::denominator_string(rdet.value);
  return report.dump(2) + "\n";
}

void add_source_options(CLI::App* cmd, SeriesArgs& args) {
  cmd->add_option("--map", args.source.map_path, "JSON piecewise-linear map {breakpoints, values}");
  cmd->add_option("--prop42-depth", args.source.prop42_depth, "use the two-cycle construction positions to this depth");
  cmd->add_option("--x0", args.source.x0, "base point for --map");
  cmd->add_option("--m", args.m, "window length")->check(CLI::PositiveNumber);
  cmd->add_option("--epsilon", args.epsilon, "threshold (p/q in exact mode)")->required();
  cmd->add_flag("--float", args.source.use_float, "binary floating point instead of exact rationals");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recurrence quantification for interval maps"};
  app.require_subcommand(1);
  Common common;
  app.add_option("-o,--output", common.output, "write output to this file instead of stdout");
  app.add_option("--threads", common.threads, "worker threads for pair scans (0 = all cores)");

  // corrsum / rdet / det
  SeriesArgs corr_args, rdet_args, det_args, plot_args, finite_args;
  auto* corrsum = app.add_subcommand("corrsum", "correlation sums C_m over a schedule of n");
  add_source_options(corrsum, corr_args);
  corrsum->add_option("--n", corr_args.n, "segment length");
  corrsum->add_option("--schedule", corr_args.schedule, "comma-separated increasing n values");
  auto* rdet = app.add_subcommand("rdet", "recurrence determinism C_m/C_1");
  add_source_options(rdet, rdet_args);
  rdet->add_option("--n", rdet_args.n, "segment length");
  rdet->add_option("--schedule", rdet_args.schedule, "comma-separated increasing n values");
  auto* det = app.add_subcommand("det", "RQA determinism m rdet_m - (m-1) rdet_{m+1}");
  add_source_options(det, det_args);
  det->add_option("--n", det_args.n, "segment length");
  det->add_option("--schedule", det_args.schedule, "comma-separated increasing n values");
  auto* rplot = app.add_subcommand("rplot", "recurrence plot as a plain-text P1 bitmap");
  add_source_options(rplot, plot_args);
  rplot->add_option("--n", plot_args.n, "segment length")->required();
  auto* finite = app.add_subcommand("finite", "detect the limit cycle and report the closed-form values");
  add_source_options(finite, finite_args);
  finite->add_option("--n", finite_args.n, "trajectory length used for detection")->required();
  std::string tol_text = "0";
  finite->add_option("--tol", tol_text, "residual tolerance for cycle detection");

  // config
  auto* config = app.add_subcommand("config", "epsilon-pair analysis of interval configurations");
  bool extremal = false, zero = false;
  std::size_t config_n = 0;
  std::string config_eps, config_input;
  auto* ext_flag = config->add_flag("--extremal", extremal, "generate the configuration attaining 4(n-1)");
  auto* zero_flag = config->add_flag("--zero", zero, "generate a configuration with no pairs");
  auto* input_opt = config->add_option("--input", config_input, "JSON configuration [[lo, hi], ...]");
  ext_flag->excludes(zero_flag)->excludes(input_opt);
  zero_flag->excludes(input_opt);
  config->add_option("--n", config_n, "number of intervals for generated configurations");
  config->add_option("--epsilon", config_eps, "threshold (exact: p/q, integer or decimal)")->required();

  // solenoid
  auto* solenoid = app.add_subcommand("solenoid", "N_m / N_m° counts and enclosures for a Delahaye system");
  std::int64_t sol_r = 5;
  std::size_t sol_m = 1, sol_t_min = 1, sol_t_max = 6, sol_k = 0;
  std::string sol_eps;
  solenoid->add_option("--r", sol_r, "diameter-rule base r");
  solenoid->add_option("--m", sol_m, "window length")->check(CLI::PositiveNumber);
  auto* sol_eps_opt = solenoid->add_option("--epsilon", sol_eps, "threshold p/q");
  solenoid->add_option("--k", sol_k, "use epsilon = r^-k")->excludes(sol_eps_opt);
  solenoid->add_option("--t-min", sol_t_min, "first depth");
  solenoid->add_option("--t-max", sol_t_max, "last depth");

  // prop42
  auto* prop42 = app.add_subcommand("prop42", "two-cycle construction with oscillating correlation sums");
  std::size_t p42_depth = 6, p42_max_k = 0;
  std::string p42_emit = "report";
  bool p42_verify = false;
  prop42->add_option("--depth", p42_depth, "construction depth T")->check(CLI::Range(1, 40));
  prop42->add_option("--emit", p42_emit, "positions | map | c1-table | report")
      ->check(CLI::IsMember({"positions", "map", "c1-table", "report"}));
  prop42->add_option("--max-k", p42_max_k, "largest k in c1-table/report (default: depth)");
  prop42->add_flag("--verify", p42_verify, "re-derive each table entry by a full pair scan");

  // prop52
  auto* prop52 = app.add_subcommand("prop52", "Delahaye system counts and determinism limits");
  std::int64_t p52_r = 5;
  std::size_t p52_k = 1, p52_m = 2, p52_t = 0;
  prop52->add_option("--r", p52_r, "diameter-rule base r >= 5");
  prop52->add_option("--k", p52_k, "threshold eps_k = r^-k")->check(CLI::PositiveNumber);
  prop52->add_option("--m", p52_m, "window length")->check(CLI::PositiveNumber);
  prop52->add_option("--t", p52_t, "depth (default k+1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    rqa::CountOptions count_opts;
    count_opts.max_pairs = max_pairs_from_env();
    count_opts.threads = common.threads;

    if (corrsum->parsed() || rdet->parsed() || det->parsed()) {
      const auto kind = corrsum->parsed() ? SeriesKind::corrsum : rdet->parsed() ? SeriesKind::rdet : SeriesKind::det;
      const auto& args = corrsum->parsed() ? corr_args : rdet->parsed() ? rdet_args : det_args;
      emit(common, args.source.use_float ? run_series<double>(args, kind, common)
                                         : run_series<Rational>(args, kind, common));
    } else if (rplot->parsed()) {
      emit(common, plot_args.source.use_float ? run_rplot<double>(plot_args) : run_rplot<Rational>(plot_args));
    } else if (finite->parsed()) {
      emit(common, finite_args.source.use_float ? run_finite<double>(finite_args, tol_text)
                                                : run_finite<Rational>(finite_args, tol_text));
    } else if (config->parsed()) {
      const Rational eps = rqa::parse_rational(config_eps);
      rqa::Configuration<Rational> c;
      if (extremal) c = rqa::extremal_configuration(config_n, eps);
      else if (zero) c = rqa::zero_configuration(config_n, eps);
      else if (!config_input.empty()) c = rqa::io::configuration_from_json<Rational>(read_json_file(config_input));
      else throw std::invalid_argument("config needs --extremal, --zero or --input");
      const auto pairs = rqa::epsilon_pairs(c, eps);
      json list = json::array();
      for (const auto& [a, b] : pairs.pairs) list.push_back(json::array({a, b}));
      const auto bound = rqa::epsilon_pair_bound(c.size());
      json report{{"n", c.size()},
                  {"epsilon", rqa::to_string(eps)},
                  {"cardinality", pairs.size()},
                  {"bound", bound},
                  {"within_bound", pairs.size() <= bound},
                  {"pairs", list},
                  {"configuration", rqa::io::configuration_to_json(c)}};
      emit(common, report.dump(2) + "\n");
    } else if (solenoid->parsed()) {
      auto system = rqa::make_delahaye_system(sol_r, std::max<std::size_t>(sol_t_max, 1));
      Rational eps;
      if (sol_k > 0) eps = rqa::pow_rational(rqa::make_rational(1, sol_r), static_cast<unsigned>(sol_k));
      else if (!sol_eps.empty()) eps = rqa::parse_fraction(sol_eps);
      else throw std::invalid_argument("solenoid needs --epsilon or --k");
      if (sol_t_min > sol_t_max) throw std::invalid_argument("--t-min must not exceed --t-max");
      std::vector<std::size_t> schedule;
      for (std::size_t t = sol_t_min; t <= sol_t_max; ++t) schedule.push_back(t);
      emit(common, rqa::counts_csv(rqa::asymptotic_corr_sum(system, sol_m, eps, schedule, count_opts)));
    } else if (prop42->parsed()) {
      rqa::TwoCycleConstruction c(p42_depth);
      const std::size_t max_k = p42_max_k == 0 ? p42_depth : p42_max_k;
      if (p42_emit == "positions") {
        auto pts = rqa::two_cycle_positions(c, c.max_points());
        emit(common, rqa::io::trajectory_csv(rqa::Trajectory<Rational>(std::move(pts))));
      } else if (p42_emit == "map") {
        emit(common, rqa::io::map_to_json(rqa::two_cycle_numeric_map(c, p42_depth)).dump(2) + "\n");
      } else {
        if (p42_verify) {
          for (std::size_t k = 1; k <= max_k; ++k) {
            auto scan = rqa::two_cycle_c1_pair_scan(rqa::two_cycle_points_through(k), common.threads);
            if (scan.value() != rqa::two_cycle_c1_closed_form(k))
              throw std::logic_error("pair scan disagrees with the closed form at k = " + std::to_string(k));
          }
        }
        if (p42_emit == "c1-table") {
          emit(common, rqa::two_cycle_c1_csv(max_k));
        } else {
          std::vector<std::uint64_t> even_n, odd_n;
          for (std::size_t k = 1; k <= max_k; ++k) (k % 2 == 0 ? even_n : odd_n).push_back(rqa::two_cycle_points_through(k));
          auto source = [](std::uint64_t n) {
            std::size_t k = 1;
            while (rqa::two_cycle_points_through(k) != n) ++k;
            return rqa::two_cycle_c1_closed_form(k);
          };
          json report{{"depth", p42_depth}, {"max_k", max_k}, {"epsilon", "1/2"}};
          if (!even_n.empty() && !odd_n.empty()) {
            auto even = rqa::estimate_asymptotics(source, even_n);
            auto odd = rqa::estimate_asymptotics(source, odd_n);
            const Rational& liminf = even.liminf_est;
            const Rational& limsup = odd.limsup_est;
            report["even_k_last"] = rqa::to_double(even.values.back().value);
            report["odd_k_last"] = rqa::to_double(odd.values.back().value);
            report["liminf_est"] = rqa::to_double(liminf);
            report["limsup_est"] = rqa::to_double(limsup);
            report["liminf_below_limsup"] = liminf < limsup;
          }
          emit(common, report.dump(2) + "\n");
        }
      }
    } else if (prop52->parsed()) {
      const std::size_t t = p52_t == 0 ? p52_k + 1 : p52_t;
      rqa::DelahayeConstruction c(p52_r, std::max<std::size_t>(t, p52_k + 2));
      const auto counts = rqa::delahaye_counts(c, p52_k, p52_m, t, count_opts);
      const Rational r = rqa::delahaye_rdet(c, p52_k, p52_m, count_opts);
      const Rational d = rqa::delahaye_det(c, p52_k, p52_m, count_opts);
      json report{{"r", p52_r},
                  {"k", p52_k},
                  {"m", p52_m},
                  {"t", t},
                  {"epsilon", rqa::to_string(c.epsilon(p52_k))},
                  {"n1_closed", rqa::to_string(counts.n1_closed)},
                  {"nm_closed", rqa::to_string(counts.nm_closed)},
                  {"enumerated", counts.enumerated},
                  {"rdet", rqa::to_string(r)},
                  {"rdet_float", rqa::to_double(r)},
                  {"det", rqa::to_string(d)},
                  {"det_float", rqa::to_double(d)}};
      emit(common, report.dump(2) + "\n");
    }
  } catch (const rqa::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
