/* SPDX-License-Identifier: Apache-2.0
 *
 * covert-irs: covert-rate optimization for IRS-aided wireless links
 * Copyright (C) 2026 The covert-irs authors
 * ------------------------------------------------------------------------
 *
 * C interface to the covert-irs library. All functions return a status
 * code; on failure covert_irs_last_error() describes the problem (per
 * thread, valid until the next call on that thread).
 */

#ifndef COVERT_IRS_H
#define COVERT_IRS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(COVERT_IRS_BUILDING_LIBRARY)
#define COVERT_IRS_API __declspec(dllexport)
#else
#define COVERT_IRS_API __declspec(dllimport)
#endif
#else
#define COVERT_IRS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum covert_irs_status {
  COVERT_IRS_OK = 0,
  COVERT_IRS_ERR_INVALID_ARGUMENT = 1,
  COVERT_IRS_ERR_CONFIG = 2,
  COVERT_IRS_ERR_SOLVER = 3,
  COVERT_IRS_ERR_IO = 4,
  COVERT_IRS_ERR_INTERNAL = 5
} covert_irs_status;

/* Scenario (system, geometry, CSI bounds) plus sweep description. */
typedef struct covert_irs_sweep covert_irs_sweep;
typedef struct covert_irs_results covert_irs_results;

typedef struct covert_irs_row {
  double param;
  const char* solver; /* owned by the results handle */
  double mean_rate;
  double stderr_rate;
  double mean_willie_power;
  double feasible_frac;
  int trials;
} covert_irs_row;

typedef struct covert_irs_dep_point {
  double eta;    /* covert budget at Willie, W */
  double p_star; /* largest power meeting the average DEP target, W */
  double xi;     /* average minimum DEP at p_star */
  double mean_z; /* composite Willie gain used */
} covert_irs_dep_point;

COVERT_IRS_API const char* covert_irs_version(void);
COVERT_IRS_API const char* covert_irs_last_error(void);

/* Default scenario, no sweep values, no solvers. */
COVERT_IRS_API covert_irs_status covert_irs_sweep_create(covert_irs_sweep** out);
/* fig3 ... fig8. */
COVERT_IRS_API covert_irs_status covert_irs_sweep_from_preset(const char* name, covert_irs_sweep** out);
COVERT_IRS_API void covert_irs_sweep_destroy(covert_irs_sweep* sweep);

/* Reads "key = value" lines into the scenario. */
COVERT_IRS_API covert_irs_status covert_irs_sweep_load_config(covert_irs_sweep* sweep, const char* path);
/* Sets one scenario key (same keys as the config file). */
COVERT_IRS_API covert_irs_status covert_irs_sweep_set(covert_irs_sweep* sweep, const char* key, const char* value);
/* values: "start:stop:step" or "a,b,c". */
COVERT_IRS_API covert_irs_status covert_irs_sweep_set_parameter(covert_irs_sweep* sweep, const char* name,
                                                                const char* values);
/* Comma-separated solver ids. */
COVERT_IRS_API covert_irs_status covert_irs_sweep_set_solvers(covert_irs_sweep* sweep, const char* solvers);
COVERT_IRS_API covert_irs_status covert_irs_sweep_set_trials(covert_irs_sweep* sweep, int trials);
COVERT_IRS_API covert_irs_status covert_irs_sweep_set_seed(covert_irs_sweep* sweep, uint64_t seed);

COVERT_IRS_API covert_irs_status covert_irs_sweep_run(const covert_irs_sweep* sweep, covert_irs_results** out);

/* mean_z <= 0 uses the scenario's composite Willie gain with the IRS. */
COVERT_IRS_API covert_irs_status covert_irs_dep(const covert_irs_sweep* sweep, double mean_z,
                                                covert_irs_dep_point* out);

COVERT_IRS_API size_t covert_irs_results_count(const covert_irs_results* results);
COVERT_IRS_API covert_irs_status covert_irs_results_row(const covert_irs_results* results, size_t index,
                                                        covert_irs_row* out);
/* CSV at path plus a gnuplot script beside it. */
COVERT_IRS_API covert_irs_status covert_irs_results_write(const covert_irs_results* results, const char* path);
COVERT_IRS_API void covert_irs_results_destroy(covert_irs_results* results);

#ifdef __cplusplus
}
#endif

#endif /* COVERT_IRS_H */
