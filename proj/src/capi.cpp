// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------

#include "covert_irs.h"

#include <cmath>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "covert_irs/channel_model.hpp"
#include "covert_irs/detection.hpp"
#include "covert_irs/simulation.hpp"

struct covert_irs_sweep {
  covert_irs::Scenario scenario;
  covert_irs::SweepSpec spec;
};

struct covert_irs_results {
  std::vector<covert_irs::ResultRow> rows;
};

namespace {

thread_local std::string g_last_error;

covert_irs_status fail(covert_irs_status code, std::string message) {
  g_last_error = std::move(message);
  return code;
}

// Maps library exceptions onto status codes.
template <class F>
covert_irs_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return COVERT_IRS_OK;
  } catch (const covert_irs::ConfigError& e) {
    return fail(COVERT_IRS_ERR_CONFIG, e.what());
  } catch (const covert_irs::InvalidArgument& e) {
    return fail(COVERT_IRS_ERR_INVALID_ARGUMENT, e.what());
  } catch (const covert_irs::DomainError& e) {
    return fail(COVERT_IRS_ERR_INVALID_ARGUMENT, e.what());
  } catch (const covert_irs::SolverError& e) {
    return fail(COVERT_IRS_ERR_SOLVER, e.what());
  } catch (const std::bad_alloc&) {
    return fail(COVERT_IRS_ERR_INTERNAL, "out of memory");
  } catch (const std::runtime_error& e) {
    return fail(COVERT_IRS_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(COVERT_IRS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(COVERT_IRS_ERR_INTERNAL, "unknown error");
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto a = piece.find_first_not_of(" \t");
    const auto b = piece.find_last_not_of(" \t");
    piece = a == std::string::npos ? std::string() : piece.substr(a, b - a + 1);
    if (!piece.empty()) out.push_back(piece);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

extern "C" {

const char* covert_irs_version(void) { return "1.0.0"; }

const char* covert_irs_last_error(void) { return g_last_error.c_str(); }

covert_irs_status covert_irs_sweep_create(covert_irs_sweep** out) {
  if (!out) return fail(COVERT_IRS_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] { *out = new covert_irs_sweep(); });
}

covert_irs_status covert_irs_sweep_from_preset(const char* name, covert_irs_sweep** out) {
  if (!out || !name) return fail(COVERT_IRS_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    covert_irs::Preset p = covert_irs::figure_preset(name);
    *out = new covert_irs_sweep{std::move(p.scenario), std::move(p.spec)};
  });
}

void covert_irs_sweep_destroy(covert_irs_sweep* sweep) { delete sweep; }

covert_irs_status covert_irs_sweep_load_config(covert_irs_sweep* sweep, const char* path) {
  if (!sweep || !path) return fail(COVERT_IRS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { sweep->scenario = covert_irs::parse_scenario_file(path, sweep->scenario); });
}

covert_irs_status covert_irs_sweep_set(covert_irs_sweep* sweep, const char* key, const char* value) {
  if (!sweep || !key || !value) return fail(COVERT_IRS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    covert_irs::Scenario s = sweep->scenario;
    covert_irs::apply_setting(s, key, value);
    covert_irs::validate(s);
    sweep->scenario = s;
  });
}

covert_irs_status covert_irs_sweep_set_parameter(covert_irs_sweep* sweep, const char* name, const char* values) {
  if (!sweep || !name || !values) return fail(COVERT_IRS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<double> v = covert_irs::parse_values(values);
    // Rejects unknown keys and out-of-range values before any solver runs.
    for (double x : v) (void)covert_irs::apply_sweep_value(sweep->scenario, name, x);
    sweep->spec.parameter = name;
    sweep->spec.values = std::move(v);
  });
}

covert_irs_status covert_irs_sweep_set_solvers(covert_irs_sweep* sweep, const char* solvers) {
  if (!sweep || !solvers) return fail(COVERT_IRS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<std::string> ids = split_list(solvers);
    if (ids.empty()) throw covert_irs::ConfigError("no solvers given");
    for (const auto& id : ids) {
      if (!covert_irs::is_solver_id(id)) throw covert_irs::ConfigError("unknown solver '" + id + "'");
    }
    sweep->spec.solvers = std::move(ids);
  });
}

covert_irs_status covert_irs_sweep_set_trials(covert_irs_sweep* sweep, int trials) {
  if (!sweep) return fail(COVERT_IRS_ERR_INVALID_ARGUMENT, "null argument");
  if (trials < 1) return fail(COVERT_IRS_ERR_CONFIG, "trials must be >= 1");
  sweep->spec.trials = trials;
  g_last_error.clear();
  return COVERT_IRS_OK;
}

covert_irs_status covert_irs_sweep_set_seed(covert_irs_sweep* sweep, uint64_t seed) {
  if (!sweep) return fail(COVERT_IRS_ERR_INVALID_ARGUMENT, "null argument");
  sweep->scenario.system.seed = seed;
  g_last_error.clear();
  return COVERT_IRS_OK;
}

covert_irs_status covert_irs_sweep_run(const covert_irs_sweep* sweep, covert_irs_results** out) {
  if (!sweep || !out) return fail(COVERT_IRS_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::vector<covert_irs::ResultRow> rows = covert_irs::run_sweep(sweep->spec, sweep->scenario);
    *out = new covert_irs_results{std::move(rows)};
  });
}

covert_irs_status covert_irs_dep(const covert_irs_sweep* sweep, double mean_z, covert_irs_dep_point* out) {
  if (!sweep || !out) return fail(COVERT_IRS_ERR_INVALID_ARGUMENT, "null argument");
  if (std::isnan(mean_z)) return fail(COVERT_IRS_ERR_INVALID_ARGUMENT, "mean_z is NaN");
  return guarded([&] {
    const covert_irs::Scenario& s = sweep->scenario;
    covert_irs::validate(s);
    const covert_irs::DetectionParams dp = covert_irs::detection_params(s.system);
    const double z =
        mean_z > 0.0 ? mean_z : covert_irs::z_mean_irs(s.system, covert_irs::link_variances(s.geometry));
    const double p = covert_irs::max_power_for_covertness(z, dp, s.system.P_max);
    out->eta = covert_irs::covert_budget(dp).eta;
    out->p_star = p;
    out->xi = covert_irs::average_min_dep(p, z, dp);
    out->mean_z = z;
  });
}

size_t covert_irs_results_count(const covert_irs_results* results) { return results ? results->rows.size() : 0; }

covert_irs_status covert_irs_results_row(const covert_irs_results* results, size_t index, covert_irs_row* out) {
  if (!results || !out) return fail(COVERT_IRS_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= results->rows.size()) return fail(COVERT_IRS_ERR_INVALID_ARGUMENT, "row index out of range");
  const covert_irs::ResultRow& r = results->rows[index];
  *out = covert_irs_row{r.param, r.solver.c_str(), r.mean_rate, r.stderr_rate, r.mean_willie_power, r.feasible_frac,
                        r.trials};
  g_last_error.clear();
  return COVERT_IRS_OK;
}

covert_irs_status covert_irs_results_write(const covert_irs_results* results, const char* path) {
  if (!results || !path) return fail(COVERT_IRS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { covert_irs::emit_results(results->rows, path); });
}

void covert_irs_results_destroy(covert_irs_results* results) { delete results; }

}  // extern "C"
