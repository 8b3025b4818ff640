// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------

// Command-line front end. Talks to the library only through covert_irs.h.

#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "covert_irs.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

struct SweepDeleter {
  void operator()(covert_irs_sweep* s) const { covert_irs_sweep_destroy(s); }
};
struct ResultsDeleter {
  void operator()(covert_irs_results* r) const { covert_irs_results_destroy(r); }
};
using SweepPtr = std::unique_ptr<covert_irs_sweep, SweepDeleter>;
using ResultsPtr = std::unique_ptr<covert_irs_results, ResultsDeleter>;

// Thrown with the exit code already decided.
struct Failure {
  int code;
};

int exit_code(covert_irs_status st) {
  switch (st) {
    case COVERT_IRS_OK: return kExitOk;
    case COVERT_IRS_ERR_CONFIG:
    case COVERT_IRS_ERR_INVALID_ARGUMENT: return kExitConfig;
    case COVERT_IRS_ERR_SOLVER: return kExitSolver;
    default: return kExitOther;
  }
}

void check(covert_irs_status st, const char* what) {
  if (st == COVERT_IRS_OK) return;
  std::fprintf(stderr, "covert-irs: %s: %s\n", what, covert_irs_last_error());
  throw Failure{exit_code(st)};
}

struct Common {
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> settings;  // key=value
  std::string out;
  std::string param;
  std::string values;
  std::string solvers;
};

void apply_settings(covert_irs_sweep* s, const std::vector<std::string>& settings) {
  for (const auto& kv : settings) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::fprintf(stderr, "covert-irs: --set expects key=value, got '%s'\n", kv.c_str());
      throw Failure{kExitConfig};
    }
    check(covert_irs_sweep_set(s, kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str()), "--set");
  }
}

void finish_and_run(covert_irs_sweep* s, const Common& c) {
  apply_settings(s, c.settings);
  if (c.trials) check(covert_irs_sweep_set_trials(s, *c.trials), "--trials");
  if (c.seed) check(covert_irs_sweep_set_seed(s, *c.seed), "--seed");
  if (!c.param.empty() || !c.values.empty()) {
    if (c.param.empty() || c.values.empty()) {
      std::fprintf(stderr, "covert-irs: --param and --values go together\n");
      throw Failure{kExitConfig};
    }
    check(covert_irs_sweep_set_parameter(s, c.param.c_str(), c.values.c_str()), "--param/--values");
  }
  if (!c.solvers.empty()) check(covert_irs_sweep_set_solvers(s, c.solvers.c_str()), "--solvers");

  covert_irs_results* raw = nullptr;
  check(covert_irs_sweep_run(s, &raw), "sweep");
  ResultsPtr results(raw);
  check(covert_irs_results_write(results.get(), c.out.c_str()), "write");

  const std::size_t n = covert_irs_results_count(results.get());
  for (std::size_t i = 0; i < n; ++i) {
    covert_irs_row row{};
    check(covert_irs_results_row(results.get(), i, &row), "row");
    std::printf("%-10g %-14s %.6f +- %.6f  feasible %.3f\n", row.param, row.solver, row.mean_rate, row.stderr_rate,
                row.feasible_frac);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covert-rate optimization for IRS-aided links"};
  app.require_subcommand(1);

  Common run_opts;
  std::string preset;
  auto* run = app.add_subcommand("run", "Run a figure preset sweep");
  run->add_option("--preset", preset, "fig3 ... fig8")->required();
  run->add_option("--out", run_opts.out, "CSV output path")->required();
  run->add_option("--trials", run_opts.trials, "Monte Carlo trials per value");
  run->add_option("--seed", run_opts.seed, "Base seed");
  run->add_option("--param", run_opts.param, "Override the swept parameter");
  run->add_option("--values", run_opts.values, "start:stop:step or a,b,c");
  run->add_option("--solvers", run_opts.solvers, "Comma-separated solver ids");
  run->add_option("--set", run_opts.settings, "Scenario override key=value")->take_all();

  Common sweep_opts;
  std::string sweep_config;
  auto* sweep = app.add_subcommand("sweep", "Sweep one parameter of a scenario file");
  sweep->add_option("--config", sweep_config, "Scenario file (key = value lines)");
  sweep->add_option("--param", sweep_opts.param, "Swept parameter")->required();
  sweep->add_option("--values", sweep_opts.values, "start:stop:step or a,b,c")->required();
  sweep->add_option("--solvers", sweep_opts.solvers, "Comma-separated solver ids")->required();
  sweep->add_option("--out", sweep_opts.out, "CSV output path")->required();
  sweep->add_option("--trials", sweep_opts.trials, "Monte Carlo trials per value");
  sweep->add_option("--seed", sweep_opts.seed, "Base seed");
  sweep->add_option("--set", sweep_opts.settings, "Scenario override key=value")->take_all();

  std::string dep_config;
  std::vector<std::string> dep_settings;
  std::optional<double> rho_db, kappa, noise_dbm, pmax_dbm, mean_z;
  auto* dep = app.add_subcommand("dep", "Covert budget, power limit and DEP for one point");
  dep->add_option("--config", dep_config, "Scenario file");
  dep->add_option("--rho-db", rho_db, "Noise uncertainty in dB");
  dep->add_option("--kappa", kappa, "Covertness margin");
  dep->add_option("--noise-dbm", noise_dbm, "Nominal Willie noise power in dBm");
  dep->add_option("--pmax-dbm", pmax_dbm, "Transmit power limit in dBm");
  dep->add_option("--mean-z", mean_z, "Mean composite Willie gain (default: from geometry)");
  dep->add_option("--set", dep_settings, "Scenario override key=value")->take_all();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (run->parsed()) {
      covert_irs_sweep* raw = nullptr;
      check(covert_irs_sweep_from_preset(preset.c_str(), &raw), "--preset");
      SweepPtr s(raw);
      finish_and_run(s.get(), run_opts);
    } else if (sweep->parsed()) {
      covert_irs_sweep* raw = nullptr;
      check(covert_irs_sweep_create(&raw), "create");
      SweepPtr s(raw);
      if (!sweep_config.empty()) check(covert_irs_sweep_load_config(s.get(), sweep_config.c_str()), "--config");
      finish_and_run(s.get(), sweep_opts);
    } else if (dep->parsed()) {
      covert_irs_sweep* raw = nullptr;
      check(covert_irs_sweep_create(&raw), "create");
      SweepPtr s(raw);
      if (!dep_config.empty()) check(covert_irs_sweep_load_config(s.get(), dep_config.c_str()), "--config");
      apply_settings(s.get(), dep_settings);
      auto set_number = [&](const char* key, const std::optional<double>& x) {
        if (!x) return;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", *x);
        check(covert_irs_sweep_set(s.get(), key, buf), key);
      };
      set_number("rho_db", rho_db);
      set_number("kappa", kappa);
      set_number("noise_w_dbm", noise_dbm);
      set_number("P_max_dbm", pmax_dbm);
      covert_irs_dep_point pt{};
      check(covert_irs_dep(s.get(), mean_z.value_or(0.0), &pt), "dep");
      std::printf("eta=%.17g\nP_star=%.17g\nxi=%.17g\nmean_z=%.17g\n", pt.eta, pt.p_star, pt.xi, pt.mean_z);
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return kExitOk;
}
