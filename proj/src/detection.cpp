// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------

#include "covert_irs/detection.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace covert_irs {
namespace {

constexpr double kSeriesCutoff = 6.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// sum_{k>=1} x^k / (k k!), stopped once the term no longer changes the sum.
double ei_series_tail(double x) {
  double term = 1.0;
  double sum = 0.0;
  for (int k = 1; k < 500; ++k) {
    term *= x / k;
    const double add = term / k;
    sum += add;
    if (std::abs(add) <= kEps * std::abs(sum)) break;
  }
  return sum;
}

// exp(x) E1(x) for x > 0 by the modified Lentz continued fraction.
double e1_continued_fraction_scaled(double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) <= kEps) break;
  }
  return h;
}

}  // namespace

void DetectionParams::validate() const {
  if (!(noise_w > 0.0)) throw InvalidArgument("detection: noise_w must be positive");
  if (!(rho >= 1.0)) throw InvalidArgument("detection: rho must be >= 1");
  if (!(kappa > 0.0 && kappa < 1.0)) throw InvalidArgument("detection: kappa must lie in (0,1)");
}

DetectionParams detection_params(const SystemConfig& cfg) { return {cfg.noise_w, cfg.rho, cfg.kappa}; }

double exp_int_ei(double x) {
  if (!(x < 0.0)) throw DomainError("exp_int_ei: argument must be negative");
  const double ax = -x;
  if (ax <= kSeriesCutoff) return std::numbers::egamma + std::log(ax) + ei_series_tail(x);
  return -std::exp(-ax) * e1_continued_fraction_scaled(ax);
}

double scaled_exp_int_e1(double x) {
  if (!(x > 0.0)) throw DomainError("scaled_exp_int_e1: argument must be positive");
  if (x <= kSeriesCutoff) return -std::exp(x) * exp_int_ei(-x);
  return e1_continued_fraction_scaled(x);
}

double optimal_threshold(double z, double P, const DetectionParams& params) {
  if (z < 0.0 || P < 0.0) throw InvalidArgument("optimal_threshold: z and P must be non-negative");
  const double s = params.noise_w;
  return std::min(z * P + s / params.rho, params.rho * s);
}

double min_dep_given_z(double z, double P, const DetectionParams& params) {
  if (z < 0.0 || P < 0.0) throw InvalidArgument("min_dep_given_z: z and P must be non-negative");
  const double zp = z * P;
  if (params.rho == 1.0) return zp == 0.0 ? 1.0 : 0.0;
  const double s = params.noise_w;
  const double rho = params.rho;
  if (zp > s * (rho - 1.0 / rho)) return 0.0;
  const double xi = 1.0 - std::log1p(rho * zp / s) / (2.0 * std::log(rho));
  return std::clamp(xi, 0.0, 1.0);
}

double average_min_dep(double P, double mean_z, const DetectionParams& params) {
  if (P < 0.0 || mean_z < 0.0) throw InvalidArgument("average_min_dep: P and mean_z must be non-negative");
  if (params.rho == 1.0) return 0.0;
  if (P == 0.0 || mean_z == 0.0) return 1.0;
  const double gbar = mean_z * P / params.noise_w;
  const double rho = params.rho;
  const double a = 1.0 / (rho * gbar);
  const double b = rho / gbar;
  // e^a (E1(a) - E1(b)) = S(a) - e^{a-b} S(b) with S(x) = e^x E1(x).
  const double bracket = scaled_exp_int_e1(a) - std::exp(a - b) * scaled_exp_int_e1(b);
  const double xi = 1.0 - bracket / (2.0 * std::log(rho));
  return std::clamp(xi, 0.0, 1.0);
}

CovertBudget covert_budget(const DetectionParams& params) {
  const double s = params.noise_w;
  const double rho = params.rho;
  const double first = s * (rho - 1.0 / rho);
  const double second = (std::pow(rho, 2.0 * params.kappa) - 1.0) * s / rho;
  return {std::max(0.0, std::min(first, second))};
}

double max_power_for_covertness(double mean_z, const DetectionParams& params, double P_max) {
  if (!(mean_z > 0.0)) throw InvalidArgument("max_power_for_covertness: mean_z must be positive");
  if (!(P_max > 0.0)) throw InvalidArgument("max_power_for_covertness: P_max must be positive");
  if (params.rho == 1.0) return 0.0;
  const double target = 1.0 - params.kappa;
  auto feasible = [&](double p) { return average_min_dep(p, mean_z, params) >= target; };
  if (feasible(P_max)) return P_max;

  // Geometric bisection; lo stays on the feasible side.
  double lo = 1e-18;
  double hi = std::min(P_max, 1e6);
  if (!feasible(lo)) return 0.0;
  for (int it = 0; it < 200 && hi / lo - 1.0 > 1e-13; ++it) {
    const double mid = std::sqrt(lo * hi);
    if (feasible(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

double z_mean_irs(const SystemConfig& cfg, const LinkVariances& var) {
  const double cascade = static_cast<double>(cfg.N) * var.as * var.sw;
  if (cfg.N == 0) return var.aw;
  if (cfg.z_mean == ZMeanConvention::kIrsPlusCascade) return var.sw + cascade;
  return var.aw + cascade;
}

}  // namespace covert_irs
