// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------

#include "covert_irs/simulation.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "covert_irs/detection.hpp"
#include "covert_irs/multi_antenna.hpp"
#include "covert_irs/robust_csi.hpp"
#include "covert_irs/single_antenna.hpp"
#include "solver_common.hpp"

namespace covert_irs {
namespace {

constexpr double kWillieSlack = 1e-6;
constexpr double kPowerSlack = 1e-10;

constexpr std::uint64_t kChannelSalt = 0xC4A1;
constexpr std::uint64_t kDirectSalt = 0xD1EC;
constexpr std::uint64_t kSolverSalt = 0x501E;

std::string format_double(double x) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

std::uint64_t stream(std::uint64_t seed, std::uint64_t salt, std::uint64_t a, std::uint64_t b) {
  using detail::splitmix64;
  return splitmix64(splitmix64(splitmix64(seed ^ splitmix64(salt)) ^ a) ^ b);
}

bool uses_statistical_budget(std::string_view id) {
  return id == "direct" || id == "single-partial" || id == "multi-partial";
}

std::optional<RobustKind> robust_kind(std::string_view id) {
  if (id == "robust-aw") return RobustKind::kAliceWillie;
  if (id == "robust-sw") return RobustKind::kIrsWillie;
  if (id == "robust-as") return RobustKind::kAliceIrs;
  if (id == "robust-both") return RobustKind::kBoth;
  return std::nullopt;
}

ChannelRealization without_irs(const ChannelRealization& ch) {
  ChannelRealization out = ch;
  out.H_as.resize(0, ch.M());
  out.g_sb.resize(0);
  out.g_sw.resize(0);
  return out;
}

struct Accumulator {
  double sum = 0.0;
  double sum_sq = 0.0;
  double willie = 0.0;
  int feasible = 0;
  int n = 0;

  void add(double rate, double willie_power, bool ok) {
    sum += rate;
    sum_sq += rate * rate;
    willie += willie_power;
    feasible += ok ? 1 : 0;
    ++n;
  }

  ResultRow row(double param, const std::string& solver) const {
    ResultRow r;
    r.param = param;
    r.solver = solver;
    r.trials = n;
    if (n == 0) return r;
    r.mean_rate = sum / n;
    r.mean_willie_power = willie / n;
    r.feasible_frac = static_cast<double>(feasible) / n;
    if (n > 1) {
      const double var = std::max(0.0, (sum_sq - n * r.mean_rate * r.mean_rate) / (n - 1));
      r.stderr_rate = std::sqrt(var / n);
    }
    return r;
  }
};

bool integral_key(std::string_view key) { return key == "M" || key == "N" || key == "L" || key == "max_iters"; }

std::string gnuplot_script(const std::vector<ResultRow>& rows, const std::string& csv_name) {
  std::vector<std::string> solvers;
  for (const auto& r : rows) {
    if (std::find(solvers.begin(), solvers.end(), r.solver) == solvers.end()) solvers.push_back(r.solver);
  }
  std::ostringstream gp;
  gp << "set datafile separator ','\n"
     << "set xlabel 'param'\n"
     << "set ylabel 'covert rate (bits/s/Hz)'\n"
     << "set key outside\n"
     << "set grid\n"
     << "solvers = \"";
  for (std::size_t i = 0; i < solvers.size(); ++i) gp << (i ? " " : "") << solvers[i];
  gp << "\"\n"
     << "plot for [s in solvers] '" << csv_name
     << "' every ::1 using 1:(strcol(2) eq s ? $3 : NaN) with linespoints title s\n";
  return gp.str();
}

void write_atomically(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << text;
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("cannot write '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot write '" + path.string() + "'");
  }
}

}  // namespace

const std::vector<std::string>& solver_ids() {
  static const std::vector<std::string> ids = {
      "direct",     "single-partial", "single-inst", "no-irs",    "multi-partial", "optimal",    "zf",
      "min-willie", "random-phase",   "robust-aw",   "robust-sw", "robust-as",     "robust-both",
  };
  return ids;
}

bool is_solver_id(std::string_view id) {
  const auto& ids = solver_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

SolveReport run_solver(std::string_view id, const ChannelRealization& ch, const Scenario& sc) {
  const SystemConfig& cfg = sc.system;
  if (id == "direct") return direct_solve(ch, cfg);
  if (id == "single-partial") return partial_csi_solve(ch, cfg);
  if (id == "single-inst") return instantaneous_solve(ch, cfg);
  if (id == "no-irs") {
    SystemConfig c0 = cfg;
    c0.N = 0;
    const ChannelRealization ch0 = without_irs(ch);
    return ch.M() == 1 ? instantaneous_solve(ch0, c0) : alternating_optimal_solve(ch0, c0);
  }
  if (id == "multi-partial") return multi_partial_csi_solve(ch, cfg);
  if (id == "optimal") return ch.M() == 1 ? instantaneous_solve(ch, cfg) : alternating_optimal_solve(ch, cfg);
  if (id == "zf") return zf_solve(ch, cfg);
  if (id == "min-willie") return min_willie_solve(ch, cfg);
  if (id == "random-phase") return random_phase_baseline(ch, cfg);
  if (const auto kind = robust_kind(id)) {
    const RobustCase rc{*kind, sc.bounds};
    return robust_solve(rc, ch, cfg);
  }
  throw ConfigError("unknown solver '" + std::string(id) + "'");
}

bool report_feasible(std::string_view id, const SolveReport& r, const ChannelRealization& ch, const Scenario& sc) {
  const SystemConfig& cfg = sc.system;
  if (!std::isfinite(r.rate) || r.power > cfg.P_max * (1.0 + kPowerSlack)) return false;
  const DetectionParams dp = detection_params(cfg);
  if (uses_statistical_budget(id)) {
    const double mean_z = id == "direct" ? ch.var.aw : z_mean_irs(cfg, ch.var);
    return r.power <= max_power_for_covertness(mean_z, dp, cfg.P_max) * (1.0 + kPowerSlack);
  }
  const double eta = covert_budget(dp).eta;
  const double willie = robust_kind(id) ? r.willie_bound.value_or(r.willie_power) : r.willie_power;
  return willie <= eta * (1.0 + kWillieSlack);
}

void SweepSpec::validate() const {
  if (values.empty()) throw ConfigError("sweep needs at least one value");
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (solvers.empty()) throw ConfigError("sweep needs at least one solver");
  for (const auto& s : solvers) {
    if (!is_solver_id(s)) throw ConfigError("unknown solver '" + s + "'");
  }
  if (parameter.empty()) throw ConfigError("sweep parameter is empty");
}

Scenario apply_sweep_value(const Scenario& base, std::string_view parameter, double value) {
  Scenario s = base;
  if (!std::isfinite(value)) throw ConfigError("sweep value must be finite");
  if (parameter == "zeta_scale") {
    if (value < 0.0) throw ConfigError("zeta_scale must be non-negative");
    s.bounds.zeta_aw *= value;
    s.bounds.zeta_sw *= value;
    s.bounds.zeta_as *= value;
  } else if (parameter == "d_as_aw_h") {
    s.geometry.d_as_h = value;
    s.geometry.d_aw_h = value;
  } else if (parameter == "seed") {
    throw ConfigError("seed cannot be swept");
  } else if (integral_key(parameter)) {
    if (value != std::round(value)) {
      throw ConfigError("sweep parameter '" + std::string(parameter) + "' needs integer values");
    }
    apply_setting(s, parameter, std::to_string(static_cast<long long>(value)));
  } else {
    apply_setting(s, parameter, format_double(value));
  }
  validate(s);
  return s;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t value_index, int trial) {
  return stream(seed, kSolverSalt, value_index, static_cast<std::uint64_t>(trial));
}

ChannelRealization trial_channels(const Scenario& at_value, std::string_view parameter, std::size_t value_index,
                                  int trial) {
  const SystemConfig& cfg = at_value.system;
  const auto t = static_cast<std::uint64_t>(trial);
  Rng rng(stream(cfg.seed, kChannelSalt, value_index, t));
  ChannelRealization ch = sample_channels(cfg, at_value.geometry, rng);
  if (parameter == "N") {
    Rng direct_rng(stream(cfg.seed, kDirectSalt, 0, t));
    const ChannelRealization direct = sample_channels(cfg.M, 0, ch.var, direct_rng);
    ch.h_ab = direct.h_ab;
    ch.h_aw = direct.h_aw;
  }
  return ch;
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec, const Scenario& base, const TrialObserver& observer) {
  spec.validate();
  validate(base);
  std::vector<ResultRow> rows;
  for (std::size_t vi = 0; vi < spec.values.size(); ++vi) {
    const Scenario at = apply_sweep_value(base, spec.parameter, spec.values[vi]);
    std::vector<Accumulator> acc(spec.solvers.size());
    for (int t = 0; t < spec.trials; ++t) {
      const ChannelRealization ch = trial_channels(at, spec.parameter, vi, t);
      Scenario solver_sc = at;
      solver_sc.system.seed = trial_seed(at.system.seed, vi, t);
      std::vector<SolveReport> reports(spec.solvers.size());
      for (std::size_t k = 0; k < spec.solvers.size(); ++k) {
        const std::string& id = spec.solvers[k];
        try {
          reports[k] = run_solver(id, ch, solver_sc);
          acc[k].add(reports[k].rate, reports[k].willie_power, report_feasible(id, reports[k], ch, solver_sc));
        } catch (const ConfigError&) {
          reports[k] = SolveReport{};
          acc[k].add(0.0, 0.0, false);
        }
      }
      if (observer) observer(vi, t, ch, reports);
    }
    for (std::size_t k = 0; k < spec.solvers.size(); ++k) rows.push_back(acc[k].row(spec.values[vi], spec.solvers[k]));
  }
  std::sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    if (a.param != b.param) return a.param < b.param;
    return a.solver < b.solver;
  });
  return rows;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig3", "fig4", "fig5", "fig6", "fig7", "fig8"};
  return names;
}

Preset figure_preset(std::string_view name) {
  Preset p;
  SystemConfig& sys = p.scenario.system;
  Geometry& geo = p.scenario.geometry;
  sys.P_max = dbm_to_watts(10.0);
  sys.noise_w = dbm_to_watts(-90.0);
  sys.noise_b = dbm_to_watts(-90.0);
  sys.rho = db_to_linear(3.0);
  sys.kappa = 1e-2;
  sys.gamma_tol = 1e-4;
  sys.L = 1000;
  geo.pl0_db = -30.0;
  geo.d0 = 1.0;
  p.spec.preset = std::string(name);
  p.spec.trials = 500;

  if (name == "fig3") {
    sys.M = 1;
    sys.N = 10;
    sys.z_mean = ZMeanConvention::kIrsPlusCascade;
    geo.h_w = 5.0;
    geo.h_b = 3.0;
    geo.mu_ab = 2.5;
    geo.mu_as = geo.mu_sb = 2.0;
    geo.mu_aw = geo.mu_sw = 2.5;
    geo.d_ab_h = geo.d_as_h = 40.0;
    p.spec.parameter = "d_aw_h";
    p.spec.values = {40.0, 80.0, 160.0, 320.0, 640.0};
    p.spec.solvers = {"direct", "single-partial", "single-inst"};
  } else if (name == "fig4") {
    sys.M = 1;
    sys.N = 4;
    geo.h_b = 10.0;
    geo.h_w = 3.0;
    geo.mu_ab = 2.0;
    geo.mu_aw = 4.5;
    geo.mu_sb = 4.5;
    geo.mu_sw = 1.5;
    geo.mu_as = 2.0;
    geo.d_as_h = geo.d_aw_h = 60.0;
    p.spec.parameter = "d_ab_h";
    p.spec.values = {20.0, 40.0, 60.0, 80.0, 100.0, 120.0};
    p.spec.solvers = {"no-irs", "single-inst", "random-phase"};
  } else if (name == "fig5") {
    sys.M = 5;
    sys.N = 10;
    geo.mu_ab = geo.mu_as = geo.mu_sw = 2.0;
    geo.mu_aw = geo.mu_sb = 4.0;
    geo.d_ab_h = 200.0;
    geo.h_b = 200.0;
    geo.h_w = 5.0;
    geo.bob_side = BobSide::kLeft;
    p.spec.parameter = "d_as_aw_h";
    p.spec.values = {20.0, 40.0, 60.0, 80.0, 100.0, 120.0};
    p.spec.solvers = {"no-irs", "optimal", "random-phase"};
  } else if (name == "fig6" || name == "fig7") {
    sys.rho = db_to_linear(5.0);
    sys.M = 5;
    sys.N = 20;
    geo.h_w = 5.0;
    geo.h_b = 20.0;
    geo.mu_ab = 3.0;
    geo.mu_as = geo.mu_sb = 2.0;
    geo.mu_aw = 4.0;
    geo.mu_sw = 2.0;
    geo.d_aw_h = geo.d_as_h = 40.0;
    p.spec.solvers = {"optimal", "min-willie", "zf", "random-phase"};
    if (name == "fig6") {
      p.spec.parameter = "d_ab_h";
      p.spec.values = {20.0, 40.0, 60.0, 80.0, 100.0};
    } else {
      geo.d_ab_h = 60.0;
      p.spec.parameter = "N";
      p.spec.values = {4.0, 8.0, 16.0, 32.0};
    }
  } else if (name == "fig8") {
    sys.M = 6;
    sys.N = 20;
    geo.mu_ab = geo.mu_sb = 2.0;
    geo.mu_as = geo.mu_aw = geo.mu_sw = 3.0;
    geo.d_as_h = 40.0;
    geo.d_ab_h = 60.0;
    // Alice, IRS and Willie on an equilateral triangle of side 40 m.
    geo.d_aw_h = 20.0;
    geo.h_w = 20.0 * std::sqrt(3.0);
    p.scenario.bounds = CsiErrorBounds{5e-9, 5e-6, 5e-6};
    p.spec.parameter = "h_b";
    p.spec.values = {10.0, 20.0, 30.0, 40.0, 50.0};
    p.spec.solvers = {"optimal", "robust-aw", "robust-sw", "robust-as", "robust-both"};
  } else {
    throw ConfigError("unknown preset '" + std::string(name) + "'");
  }
  validate(p.scenario);
  return p;
}

std::string results_csv(const std::vector<ResultRow>& rows) {
  std::string out = "param,solver,mean_rate,stderr,mean_willie_power,feasible_frac,trials\n";
  for (const auto& r : rows) {
    out += format_double(r.param) + ',' + r.solver + ',' + format_double(r.mean_rate) + ',' +
           format_double(r.stderr_rate) + ',' + format_double(r.mean_willie_power) + ',' +
           format_double(r.feasible_frac) + ',' + std::to_string(r.trials) + '\n';
  }
  return out;
}

void emit_results(const std::vector<ResultRow>& rows, const std::string& path) {
  if (rows.empty()) throw InvalidArgument("emit_results: no rows");
  const std::filesystem::path csv(path);
  std::filesystem::path gp = csv;
  gp.replace_extension(".gp");
  if (gp == csv) gp += ".gp";
  write_atomically(csv, results_csv(rows));
  write_atomically(gp, gnuplot_script(rows, csv.filename().string()));
}

std::vector<double> parse_values(std::string_view text) {
  auto number = [](std::string_view s) {
    double x = 0.0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, x);
    if (s.empty() || ec != std::errc() || ptr != end) {
      throw ConfigError("bad value '" + std::string(s) + "'");
    }
    return x;
  };
  std::vector<double> out;
  if (text.find(':') != std::string_view::npos) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string_view::npos) throw ConfigError("range must be start:stop:step");
    const double a = number(text.substr(0, c1));
    const double b = number(text.substr(c1 + 1, c2 - c1 - 1));
    const double step = number(text.substr(c2 + 1));
    if (!(step > 0.0) || b < a) throw ConfigError("range needs step > 0 and stop >= start");
    const auto n = static_cast<long long>(std::floor((b - a) / step + 1e-9));
    if (n > 1000000) throw ConfigError("range has too many values");
    for (long long k = 0; k <= n; ++k) out.push_back(a + static_cast<double>(k) * step);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(number(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace covert_irs
