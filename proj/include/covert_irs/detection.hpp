// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------

#pragma once

#include "covert_irs/channel_model.hpp"
#include "covert_irs/config.hpp"

namespace covert_irs {

/// Willie's radiometer model: nominal noise power, uncertainty factor rho,
/// and the covertness slack kappa (DEP must stay >= 1 - kappa).
struct DetectionParams {
  double noise_w = 1e-12;
  double rho = 2.0;
  double kappa = 0.01;

  void validate() const;
};

DetectionParams detection_params(const SystemConfig& cfg);

struct CovertBudget {
  double eta = 0.0;  // max received signal power at Willie, W
};

/// Ei(x) for x < 0. Throws DomainError for x >= 0.
double exp_int_ei(double x);

/// exp(x) * E1(x) for x > 0, evaluated without overflow.
double scaled_exp_int_e1(double x);

/// Minimizer of the conditional DEP over the detection threshold.
double optimal_threshold(double z, double P, const DetectionParams& params);

/// Minimum DEP conditioned on the composite gain z at transmit power P.
double min_dep_given_z(double z, double P, const DetectionParams& params);

/// DEP averaged over z ~ Exp(mean_z).
double average_min_dep(double P, double mean_z, const DetectionParams& params);

CovertBudget covert_budget(const DetectionParams& params);

/// Largest P <= P_max with average_min_dep(P) >= 1 - kappa.
double max_power_for_covertness(double mean_z, const DetectionParams& params, double P_max);

/// Mean of Willie's composite gain for N reflecting elements.
double z_mean_irs(const SystemConfig& cfg, const LinkVariances& var);

}  // namespace covert_irs
