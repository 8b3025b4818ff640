// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "covert_irs/channel_model.hpp"
#include "covert_irs/config.hpp"
#include "covert_irs/types.hpp"

namespace covert_irs {

/// Solver identifiers accepted by the harness:
/// direct, single-partial, single-inst, no-irs, multi-partial, optimal, zf,
/// min-willie, random-phase, robust-aw, robust-sw, robust-as, robust-both.
const std::vector<std::string>& solver_ids();
bool is_solver_id(std::string_view id);

/// Runs one solver on one realization. Robust solvers treat ch as the
/// estimate and take their bounds from the scenario. Throws ConfigError for
/// unknown ids and for solver/configuration mismatches (e.g. zf at M = 1).
SolveReport run_solver(std::string_view id, const ChannelRealization& ch, const Scenario& sc);

/// Whether a report satisfies the constraint its solver family promises:
/// statistical covertness for the partial-CSI solvers, the instantaneous
/// Willie budget for the perfect-CSI ones, the certified bound for robust.
bool report_feasible(std::string_view id, const SolveReport& r, const ChannelRealization& ch, const Scenario& sc);

struct SweepSpec {
  /// Any numeric scenario key (d_ab_h, d_aw_h, d_as_h, N, h_b, ...), or
  /// d_as_aw_h (sets d_as_h and d_aw_h together), or zeta_scale (multiplies
  /// the scenario's CSI error bounds).
  std::string parameter = "d_aw_h";
  std::vector<double> values;
  int trials = 500;
  std::vector<std::string> solvers;
  std::string preset;  // informational

  /// Throws ConfigError for an empty value list, trials < 1 or unknown ids.
  void validate() const;
};

struct ResultRow {
  double param = 0.0;
  std::string solver;
  double mean_rate = 0.0;
  double stderr_rate = 0.0;
  double mean_willie_power = 0.0;
  double feasible_frac = 0.0;
  int trials = 0;
};

/// Scenario with the swept parameter set to value.
Scenario apply_sweep_value(const Scenario& base, std::string_view parameter, double value);

/// Channel draw for (value index, trial) of a sweep. Streams are derived
/// from (seed, value index, trial) so the draw does not depend on execution
/// order. When sweeping N, the direct-link block comes from a
/// (seed, trial) stream and is shared across all N values.
ChannelRealization trial_channels(const Scenario& at_value, std::string_view parameter, std::size_t value_index,
                                  int trial);

/// Seed handed to the solvers for a given trial.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t value_index, int trial);

/// Called once per (value, trial) with the realization every solver saw.
using TrialObserver = std::function<void(std::size_t value_index, int trial, const ChannelRealization& ch,
                                         const std::vector<SolveReport>& reports)>;

/// Paired Monte Carlo sweep: every solver in a trial sees the same channels.
/// A solver that throws for a trial counts as rate 0 and infeasible. Rows
/// are sorted by (param, solver).
std::vector<ResultRow> run_sweep(const SweepSpec& spec, const Scenario& base, const TrialObserver& observer = {});

struct Preset {
  SweepSpec spec;
  Scenario scenario;
};

/// fig3 ... fig8 with the caption parameters. Throws ConfigError for an
/// unknown name.
Preset figure_preset(std::string_view name);
const std::vector<std::string>& preset_names();

/// Writes rows as CSV to path (atomically) and a gnuplot script next to it
/// (path with the extension replaced by .gp). Throws InvalidArgument for no
/// rows and std::runtime_error when the files cannot be written.
void emit_results(const std::vector<ResultRow>& rows, const std::string& path);

/// CSV text exactly as written by emit_results.
std::string results_csv(const std::vector<ResultRow>& rows);

/// Parses "a:b:step" (inclusive) or "x,y,z" into values.
std::vector<double> parse_values(std::string_view text);

}  // namespace covert_irs
