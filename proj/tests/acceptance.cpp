// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------
//
// Acceptance run. Prints one PASS/FAIL line per criterion on stdout (progress
// goes to stderr) and exits non-zero if any criterion fails.

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "covert_irs/detection.hpp"
#include "covert_irs/multi_antenna.hpp"
#include "covert_irs/robust_csi.hpp"
#include "covert_irs/sdp.hpp"
#include "covert_irs/simulation.hpp"
#include "covert_irs/single_antenna.hpp"
#include "oracles.hpp"

using namespace covert_irs;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

void progress(const std::string& s) {
  std::fprintf(stderr, "  .. %s\n", s.c_str());
  std::fflush(stderr);
}

// Welford mean/variance of a paired difference.
struct Stat {
  long n = 0;
  double mean = 0.0, m2 = 0.0;
  void add(double x) {
    ++n;
    const double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }
  double se() const { return n > 1 ? std::sqrt(m2 / static_cast<double>(n - 1) / static_cast<double>(n)) : 0.0; }
};

PhaseVector random_phases(Index N, Rng& rng) {
  std::vector<double> theta(static_cast<std::size_t>(N));
  for (auto& a : theta) a = std::uniform_real_distribution<double>(0.0, 2.0 * M_PI)(rng);
  return PhaseVector::from_angles(theta);
}

RobustKind robust_kind(const std::string& id) {
  if (id == "robust-aw") return RobustKind::kAliceWillie;
  if (id == "robust-sw") return RobustKind::kIrsWillie;
  if (id == "robust-as") return RobustKind::kAliceIrs;
  return RobustKind::kBoth;
}

CsiErrorBounds active_bounds(RobustKind k, const CsiErrorBounds& b) {
  const bool aw = k == RobustKind::kAliceWillie || k == RobustKind::kBoth;
  const bool sw = k == RobustKind::kIrsWillie || k == RobustKind::kBoth;
  return {aw ? b.zeta_aw : 0.0, sw ? b.zeta_sw : 0.0, k == RobustKind::kAliceIrs ? b.zeta_as : 0.0};
}

bool is_robust(const std::string& id) { return id.rfind("robust-", 0) == 0; }

bool is_alternating(const std::string& id) {
  return id == "single-inst" || id == "optimal" || id == "zf" || id == "min-willie" || is_robust(id);
}

bool is_instantaneous_perfect(const std::string& id) {
  return id == "single-inst" || id == "optimal" || id == "zf" || id == "min-willie" || id == "random-phase" ||
         id == "no-irs";
}

// Shared bookkeeping for criteria 6 and 8, fed by every solver run below.
struct Ledger {
  std::map<std::string, long> trials, monotone_fail, converged;
  long perfect_checked = 0, perfect_fail = 0;
  long robust_solutions = 0, robust_samples = 0, robust_fail = 0;
  double robust_sampling_seconds = 0.0;

  void trajectory(const std::string& id, const SolveReport& r) {
    ++trials[id];
    for (std::size_t k = 1; k < r.rate_trajectory.size(); ++k) {
      if (r.rate_trajectory[k] < r.rate_trajectory[k - 1] - 1e-9) {
        ++monotone_fail[id];
        break;
      }
    }
    if (r.status != SolveStatus::kMaxIterations && r.iterations <= 100) ++converged[id];
  }

  void perfect(const SolveReport& r, double eta, double P_max) {
    ++perfect_checked;
    if (!(r.willie_power <= eta * (1 + 1e-6)) || !(r.power <= P_max * (1 + 1e-10))) ++perfect_fail;
  }

  void robust(RobustKind k, const SolveReport& r, const ChannelRealization& est, const CsiErrorBounds& b, double eta,
              Rng& rng, int samples) {
    const auto t0 = Clock::now();
    ++robust_solutions;
    const CsiErrorBounds act = active_bounds(k, b);
    for (int s = 0; s < samples; ++s) {
      const ChannelRealization truth = perturb_csi(est, act, rng);
      ++robust_samples;
      if (std::norm((truth.willie(r.phases) * r.beamformer)(0, 0)) > eta * (1 + 1e-6)) ++robust_fail;
    }
    robust_sampling_seconds += seconds_since(t0);
  }
};

// ---------------------------------------------------------------- 1

Verdict criterion_dep() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  int points = 0;
  for (double rho_db : {0.5, 1.0, 3.0, 5.0, 10.0}) {
    for (double P : {1e-2, 1e-1, 1.0, 10.0, 100.0}) {
      for (double mean_z : {1e-3, 1e-2, 1e-1, 1.0, 10.0}) {
        DetectionParams p;
        p.noise_w = 1.0;
        p.rho = db_to_linear(rho_db);
        const double got = average_min_dep(P, mean_z, p);
        const double ref = oracle::average_dep_quadrature(P, mean_z, 1.0, p.rho);
        worst = std::max(worst, std::abs(got - ref));
        ++points;
      }
    }
  }
  const double sec = seconds_since(t0);
  return {points == 125 && worst <= 1e-6 && sec < 5.0, fmt("%d points, max |err| %.2e (tol 1e-6)", points, worst),
          sec};
}

// ---------------------------------------------------------------- 2

Verdict criterion_threshold() {
  const auto t0 = Clock::now();
  Rng rng(20);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int ok = 0;
  const int G = 100000;
  for (int t = 0; t < 100; ++t) {
    const double rho = 1.0 + 4.0 * u(rng);
    const double z = std::pow(10.0, -2.0 + 3.0 * u(rng));
    const double P = std::pow(10.0, -2.0 + 3.0 * u(rng));
    DetectionParams p;
    p.noise_w = 1.0;
    p.rho = rho;
    const double lo = 1.0 / rho, hi = rho, step = (hi - lo) / G;
    double best = 2.0, arg = lo;
    for (int i = 0; i <= G; ++i) {
      const double lam = lo + step * i;
      const double d = oracle::dep_at_threshold(lam, z, P, 1.0, rho);
      if (d < best) {
        best = d;
        arg = lam;
      }
    }
    const double lam = optimal_threshold(z, P, p);
    const double at = oracle::dep_at_threshold(lam, z, P, 1.0, rho);
    // The minimizer set can be an interval (DEP 0); then any point of it counts.
    const bool same_point = std::abs(lam - arg) <= step;
    const bool same_value = std::abs(at - oracle::dep_at_threshold(arg, z, P, 1.0, rho)) <= 1e-12;
    if (at <= best + 1e-12 && (same_point || same_value)) ++ok;
  }
  return {ok == 100, fmt("%d/100 draws at the 1e5-point grid minimizer", ok), seconds_since(t0)};
}

// ---------------------------------------------------------------- 3

Verdict criterion_ks() {
  const auto t0 = Clock::now();
  SystemConfig cfg;
  cfg.N = 64;
  Geometry g;
  g.h_w = 5.0;
  const LinkVariances var = link_variances(g);
  Rng rng(303);
  std::vector<double> z;
  z.reserve(10000);
  for (int t = 0; t < 10000; ++t) {
    const ChannelRealization ch = sample_channels(1, 64, var, rng);
    z.push_back(ch.willie(random_phases(64, rng)).squaredNorm());
  }
  const double D = oracle::ks_statistic_exponential(z, z_mean_irs(cfg, var));
  const double p = oracle::ks_pvalue(D, z.size());
  return {p > 0.01, fmt("N=64, 1e4 draws, D=%.4f, p=%.3f (level 0.01)", D, p), seconds_since(t0)};
}

// ---------------------------------------------------------------- 4

Verdict criterion_sdp(double& worst_gap) {
  const auto t0 = Clock::now();
  SdpProblem two;
  two.objective = CMatrix::Zero(2, 2);
  two.objective(0, 1) = two.objective(1, 0) = 1.0;
  two.unit_diagonal = true;
  const SdpSolution s2 = solve_sdp(two);
  const double err2 = std::abs(s2.objective_value - 2.0);
  worst_gap = std::max(worst_gap, s2.duality_gap);

  Rng rng(404);
  LinkVariances var{1.0, 1.0, 1.0, 1.0, 1.0};
  int bounded = 0, solved = 0;
  for (int t = 0; t < 50; ++t) {
    const int N = 1 + t % 3;
    const ChannelRealization ch = sample_channels(1 + t % 2, N, var, rng);
    CVector w = CVector::Ones(ch.M()) / std::sqrt(static_cast<double>(ch.M()));
    const LiftedForm R = build_lifted_R(ch.h_ab, ch.g_sb, ch.H_as, w);
    SdpProblem p;
    p.objective = R.homogenized();
    p.unit_diagonal = true;
    const SdpSolution s = solve_sdp(p);
    if (s.status != SdpStatus::kOptimal) continue;
    ++solved;
    worst_gap = std::max(worst_gap, s.duality_gap);
    double best = 0.0;
    oracle::for_each_phase_grid(N, 8, [&](const CVector& v) { best = std::max(best, R.evaluate(PhaseVector(v))); });
    if (s.objective_value >= best * (1.0 - 1e-9)) ++bounded;
  }
  const bool pass = s2.status == SdpStatus::kOptimal && err2 <= 1e-6 && solved == 50 && bounded == 50;
  return {pass, fmt("2x2 |opt-2| %.1e; grid bound %d/50 (N<=3); gap so far %.1e", err2, bounded, worst_gap),
          seconds_since(t0)};
}

// ---------------------------------------------------------------- 5

Verdict criterion_beamformer(double& worst_gap) {
  const auto t0 = Clock::now();
  Preset pre = figure_preset("fig6");
  Rng rng(505);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_rel = 0.0, worst_excess = 0.0;
  int solved = 0;
  for (int t = 0; t < 100; ++t) {
    SystemConfig cfg = pre.scenario.system;
    cfg.M = 1 + t % 6;
    cfg.N = 8;
    const ChannelRealization ch = sample_channels(cfg, pre.scenario.geometry, rng);
    const PhaseVector v = random_phases(cfg.N, rng);
    const CRowVector b = ch.bob(v), om = ch.willie(v);
    // Spread eta over four decades so both the power and the covert limit bind.
    const double eta = covert_budget(detection_params(cfg)).eta * std::pow(10.0, -2.0 + 4.0 * u(rng));
    const double P = cfg.P_max;
    const Beamformer w = optimal_beamformer(b, om, eta, P);
    const double got = std::norm((b * w.w)(0, 0));

    SdpProblem p;
    p.objective = b.adjoint() * b / b.squaredNorm();
    p.ineq_constraints.push_back({CMatrix::Identity(cfg.M, cfg.M), 1.0});
    p.ineq_constraints.push_back({om.adjoint() * om * (P / eta), 1.0});
    const SdpSolution s = solve_sdp(p);
    if (s.status != SdpStatus::kOptimal) continue;
    ++solved;
    worst_gap = std::max(worst_gap, s.duality_gap);
    const double ref = s.objective_value * b.squaredNorm() * P;
    worst_rel = std::max(worst_rel, std::abs(got - ref) / ref);
    worst_excess = std::max(worst_excess, std::norm((om * w.w)(0, 0)) - eta);
  }
  const bool pass = solved == 100 && worst_rel <= 1e-4 && worst_excess <= 1e-8;
  return {pass, fmt("%d/100 solved, max rel diff %.2e (tol 1e-4), max Willie excess %.1e W", solved, worst_rel,
                    worst_excess),
          seconds_since(t0)};
}

// ---------------------------------------------------------------- 7

Verdict criterion_tiny(Ledger& led) {
  const auto t0 = Clock::now();
  const int levels = 128;
  int ok1 = 0, ok2 = 0;
  double worst = 1.0;

  Preset f4 = figure_preset("fig4");
  SystemConfig c1 = f4.scenario.system;
  c1.N = 2;
  Geometry g1 = f4.scenario.geometry;
  g1.d_ab_h = 40.0;
  const double eta1 = covert_budget(detection_params(c1)).eta;
  Rng rng(707);
  for (int t = 0; t < 50; ++t) {
    const ChannelRealization ch = sample_channels(c1, g1, rng);
    c1.seed = static_cast<std::uint64_t>(t);
    const SolveReport r = instantaneous_solve(ch, c1);
    led.trajectory("single-inst", r);
    led.perfect(r, eta1, c1.P_max);
    double best = 0.0;
    oracle::for_each_phase_grid(2, levels, [&](const CVector& v) {
      const PhaseVector pv(v);
      best = std::max(best, rate_from_snr(instantaneous_power(pv, ch, eta1, c1.P_max) * ch.bob(pv).squaredNorm() /
                                          c1.noise_b));
    });
    worst = std::min(worst, r.rate / best);
    if (r.rate >= 0.99 * best) ++ok1;
  }

  Preset f6 = figure_preset("fig6");
  SystemConfig c2 = f6.scenario.system;
  c2.M = 2;
  c2.N = 2;
  const double eta2 = covert_budget(detection_params(c2)).eta;
  for (int t = 0; t < 50; ++t) {
    const ChannelRealization ch = sample_channels(c2, f6.scenario.geometry, rng);
    c2.seed = static_cast<std::uint64_t>(t);
    const SolveReport r = alternating_optimal_solve(ch, c2);
    led.trajectory("optimal", r);
    led.perfect(r, eta2, c2.P_max);
    double best = 0.0;
    oracle::for_each_phase_grid(2, levels, [&](const CVector& v) {
      const PhaseVector pv(v);
      const CVector w = optimal_beamformer_given_v(pv, ch, eta2, c2.P_max).w;
      best = std::max(best, rate_from_snr(std::norm((ch.bob(pv) * w)(0, 0)) / c2.noise_b));
    });
    worst = std::min(worst, r.rate / best);
    if (r.rate >= 0.99 * best) ++ok2;
  }
  const double sec = seconds_since(t0);
  return {ok1 == 50 && ok2 == 50 && sec < 120.0,
          fmt("M=1: %d/50, M=2: %d/50 at >=99%% of a %dx%d grid; worst ratio %.4f", ok1, ok2, levels, levels, worst),
          sec};
}

// ---------------------------------------------------------------- 9 (+ data for 6 and 8)

struct TrendResult {
  Verdict a, b, c, d, e;
  double seconds = 0.0;
};

struct SweepData {
  std::vector<std::string> solvers;
  std::vector<double> values;
  // [value][solver] paired rates per trial
  std::vector<std::vector<std::vector<double>>> rates;
};

SweepData run_preset(const std::string& name, const std::vector<double>& values, Ledger& led, int robust_samples) {
  Preset pre = figure_preset(name);
  pre.spec.values = values;
  pre.spec.trials = 500;
  SweepData out;
  out.solvers = pre.spec.solvers;
  out.values = values;
  out.rates.assign(values.size(), std::vector<std::vector<double>>(pre.spec.solvers.size()));
  Rng err_rng(0xACCE);
  const auto t0 = Clock::now();
  run_sweep(pre.spec, pre.scenario,
            [&](std::size_t vi, int, const ChannelRealization& ch, const std::vector<SolveReport>& reps) {
              const Scenario at = apply_sweep_value(pre.scenario, pre.spec.parameter, values[vi]);
              const double eta = covert_budget(detection_params(at.system)).eta;
              for (std::size_t k = 0; k < reps.size(); ++k) {
                const std::string& id = out.solvers[k];
                out.rates[vi][k].push_back(reps[k].rate);
                if (is_alternating(id)) led.trajectory(id, reps[k]);
                if (is_instantaneous_perfect(id)) led.perfect(reps[k], eta, at.system.P_max);
                if (is_robust(id)) led.robust(robust_kind(id), reps[k], ch, at.bounds, eta, err_rng, robust_samples);
              }
            });
  progress(fmt("%s: %zu values x 500 trials in %.0f s", name.c_str(), values.size(), seconds_since(t0)));
  return out;
}

std::size_t solver_index(const SweepData& d, const std::string& id) {
  for (std::size_t k = 0; k < d.solvers.size(); ++k) {
    if (d.solvers[k] == id) return k;
  }
  std::fprintf(stderr, "missing solver %s\n", id.c_str());
  std::abort();
}

Stat paired(const SweepData& d, std::size_t vi, const std::string& x, const std::string& y) {
  const auto& a = d.rates[vi][solver_index(d, x)];
  const auto& b = d.rates[vi][solver_index(d, y)];
  Stat s;
  for (std::size_t t = 0; t < a.size(); ++t) s.add(a[t] - b[t]);
  return s;
}

Stat single(const SweepData& d, std::size_t vi, const std::string& x) {
  Stat s;
  for (double r : d.rates[vi][solver_index(d, x)]) s.add(r);
  return s;
}

TrendResult criterion_trends(Ledger& led) {
  TrendResult res;
  const auto t0 = Clock::now();
  const double sampling_before = led.robust_sampling_seconds;

  // (a) direct vs partial-CSI IRS across Willie distance.
  {
    const SweepData d = run_preset("fig3", {40.0, 80.0, 160.0, 320.0, 640.0}, led, 0);
    const Stat near = paired(d, 0, "direct", "single-partial");
    const Stat far = paired(d, d.values.size() - 1, "single-partial", "direct");
    res.a.pass = near.mean > near.se() && far.mean > far.se();
    res.a.detail = fmt("d_aw_h=40: direct-IRS %+.3f (se %.3f); d_aw_h=640: IRS-direct %+.3f (se %.3f)", near.mean,
                       near.se(), far.mean, far.se());
  }

  // (b) ordering over both multi-antenna sweeps, (c) growth in N.
  {
    const SweepData d6 = run_preset("fig6", {20.0, 40.0, 60.0, 80.0, 100.0}, led, 0);
    const SweepData d7 = run_preset("fig7", {4.0, 8.0, 16.0, 32.0}, led, 0);
    int checks = 0, held = 0;
    double worst_z = 1e300;
    std::string misses;
    for (const SweepData* d : {&d6, &d7}) {
      for (std::size_t vi = 0; vi < d->values.size(); ++vi) {
        for (auto [x, y] : {std::pair{"optimal", "min-willie"}, {"min-willie", "zf"}, {"optimal", "random-phase"}}) {
          const Stat s = paired(*d, vi, x, y);
          ++checks;
          if (s.mean >= -s.se()) {
            ++held;
          } else {
            misses += fmt(" [%s %s=%g: %s-%s %+.4f, se %.4f]", d == &d6 ? "fig6" : "fig7", d == &d6 ? "d_ab_h" : "N",
                          d->values[vi], x, y, s.mean, s.se());
          }
          worst_z = std::min(worst_z, s.se() > 0 ? s.mean / s.se() : (s.mean >= 0 ? 1e300 : -1e300));
        }
      }
    }
    res.b.pass = held == checks;
    res.b.detail = fmt("%d/%d paired comparisons hold at 1 se (min mean/se %.2f)", held, checks, worst_z) + misses;

    std::string means;
    bool mono = true;
    for (std::size_t vi = 0; vi < d7.values.size(); ++vi) {
      const Stat s = single(d7, vi, "optimal");
      means += fmt("%s%.2f", vi ? " " : "", s.mean);
      if (vi > 0) {
        const Stat p = single(d7, vi - 1, "optimal");
        if (s.mean - p.mean < -std::hypot(s.se(), p.se())) mono = false;
      }
    }
    res.c.pass = mono;
    res.c.detail = "optimal mean rate for N=4,8,16,32: " + means;
  }

  // (d) ordering of the robust cases, (e) robust <= perfect per draw.
  {
    const SweepData d = run_preset("fig8", {10.0, 30.0, 50.0}, led, 10000);
    bool order = true;
    std::string summary;
    long draws = 0, above = 0;
    for (std::size_t vi = 0; vi < d.values.size(); ++vi) {
      for (const char* other : {"robust-aw", "robust-sw", "robust-as"}) {
        const Stat s = paired(d, vi, other, "robust-both");
        if (s.mean < -s.se()) order = false;
      }
      for (const char* other : {"robust-sw", "robust-as"}) {
        const Stat s = paired(d, vi, other, "robust-aw");
        if (s.mean < -s.se()) order = false;
      }
      summary += fmt("%sh_b=%g: perf %.2f aw %.2f sw %.2f as %.2f both %.2f", vi ? "; " : "", d.values[vi],
                     single(d, vi, "optimal").mean, single(d, vi, "robust-aw").mean, single(d, vi, "robust-sw").mean,
                     single(d, vi, "robust-as").mean, single(d, vi, "robust-both").mean);
      const auto& perf = d.rates[vi][solver_index(d, "optimal")];
      for (const char* id : {"robust-aw", "robust-sw", "robust-as", "robust-both"}) {
        const auto& rob = d.rates[vi][solver_index(d, id)];
        for (std::size_t t = 0; t < perf.size(); ++t) {
          ++draws;
          if (rob[t] > perf[t] + 1e-9) ++above;
        }
      }
    }
    res.d.pass = order;
    res.d.detail = summary;
    res.e.pass = above == 0;
    res.e.detail = fmt("%ld/%ld paired draws with robust > perfect", above, draws);
  }

  // Error sampling belongs to criterion 8, not to the trend budget.
  res.seconds = seconds_since(t0) - (led.robust_sampling_seconds - sampling_before);
  return res;
}

// ---------------------------------------------------------------- 10

Verdict criterion_continuity() {
  const auto t0 = Clock::now();
  Preset pre = figure_preset("fig8");
  Scenario sc = apply_sweep_value(pre.scenario, "h_b", 30.0);
  SystemConfig cfg = sc.system;
  const LinkVariances var = link_variances(sc.geometry);
  const double M = cfg.M, N = cfg.N;
  // Channel scale: RMS norm of the uncertain link.
  const CsiErrorBounds b{1e-3 * std::sqrt(M * var.aw), 1e-3 * std::sqrt(N * var.sw), 1e-3 * std::sqrt(M * N * var.as)};
  Rng rng(1010);
  double worst = 1e300;
  long within = 0, total = 0;
  std::map<RobustKind, Stat> means;
  Stat perf_mean;
  for (int t = 0; t < 200; ++t) {
    const ChannelRealization ch = sample_channels(cfg, sc.geometry, rng);
    cfg.seed = static_cast<std::uint64_t>(t);
    const SolveReport p = alternating_optimal_solve(ch, cfg);
    perf_mean.add(p.rate);
    for (RobustKind k : {RobustKind::kAliceWillie, RobustKind::kIrsWillie, RobustKind::kAliceIrs, RobustKind::kBoth}) {
      const SolveReport r = robust_solve({k, b}, ch, cfg);
      means[k].add(r.rate);
      const double ratio = p.rate > 0 ? r.rate / p.rate : 1.0;
      worst = std::min(worst, ratio);
      ++total;
      if (ratio >= 0.98) ++within;
    }
  }
  return {within == total,
          fmt("%ld/%ld draws within 2%%, worst ratio %.3f; means perf %.2f aw %.2f sw %.2f as %.2f both %.2f", within,
              total, worst, perf_mean.mean, means[RobustKind::kAliceWillie].mean, means[RobustKind::kIrsWillie].mean,
              means[RobustKind::kAliceIrs].mean, means[RobustKind::kBoth].mean),
          seconds_since(t0)};
}

}  // namespace

int main() {
  std::map<std::string, Verdict> v;
  Ledger led;
  double worst_gap = 0.0;

  progress("1 DEP");
  v["1"] = criterion_dep();
  progress("2 threshold");
  v["2"] = criterion_threshold();
  progress("3 KS");
  v["3"] = criterion_ks();
  progress("4 SDP");
  v["4"] = criterion_sdp(worst_gap);
  progress("5 beamformer");
  v["5"] = criterion_beamformer(worst_gap);
  if (!(worst_gap <= 1e-6)) v["4"].pass = false;
  v["4"].detail += fmt("; worst gap incl. beamforming SDPs %.1e (tol 1e-6)", worst_gap);
  progress("7 tiny instances");
  v["7"] = criterion_tiny(led);
  progress("9 trends (long)");
  const TrendResult tr = criterion_trends(led);
  progress("10 continuity");
  v["10"] = criterion_continuity();

  // 6 from every alternating run above.
  {
    bool pass = true;
    std::string detail;
    for (const auto& [id, n] : led.trials) {
      const long bad = led.monotone_fail[id];
      const long conv = led.converged[id];
      const double frac = static_cast<double>(conv) / static_cast<double>(n);
      if (n < 500 || bad > 0 || frac < 0.99) pass = false;
      detail += fmt("%s%s %ld trials, %ld non-monotone, %.1f%% conv", detail.empty() ? "" : "; ", id.c_str(), n, bad,
                    100.0 * frac);
    }
    v["6"] = {pass, detail, 0.0};
  }
  // 8 from every perfect-CSI and robust solution above.
  v["8"] = {led.perfect_fail == 0 && led.robust_fail == 0 && led.robust_solutions > 0,
            fmt("perfect: %ld/%ld violate; robust: %ld violations in %ld samples over %ld solutions (1e4 each)",
                led.perfect_fail, led.perfect_checked, led.robust_fail, led.robust_samples, led.robust_solutions),
            led.robust_sampling_seconds};
  // 9 is one criterion; its five trends are listed under it.
  const std::pair<const char*, const Verdict*> trends[] = {
      {"a", &tr.a}, {"b", &tr.b}, {"c", &tr.c}, {"d", &tr.d}, {"e", &tr.e}};
  {
    bool pass = tr.seconds < 1800.0;
    std::string which;
    for (const auto& [name, t] : trends) {
      pass = pass && t->pass;
      which += fmt("%s%s %s", which.empty() ? "" : ", ", name, t->pass ? "ok" : "FAIL");
    }
    v["9"] = {pass, fmt("trends %s; %.0f s of 1800 s", which.c_str(), tr.seconds), tr.seconds};
  }

  int failed = 0;
  for (const char* k : {"1", "2", "3", "4", "5", "6", "7", "8", "9", "10"}) {
    const Verdict& x = v[k];
    std::printf("%-4s %-3s %s [%.1f s]\n", x.pass ? "PASS" : "FAIL", k, x.detail.c_str(), x.seconds);
    if (std::string(k) == "9") {
      for (const auto& [name, t] : trends) std::printf("         9%s %-4s %s\n", name, t->pass ? "ok" : "FAIL", t->detail.c_str());
    }
    if (!x.pass) ++failed;
  }
  std::printf("%s: %d of 10 criteria failed\n", failed ? "FAILED" : "OK", failed);
  return failed ? 1 : 0;
}
