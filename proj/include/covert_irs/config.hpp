// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------

#pragma once

#include <cmath>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>

namespace covert_irs {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

/// Which expression is used for the mean of Willie's composite gain z in the
/// partial-CSI power computation.
enum class ZMeanConvention {
  kDirectPlusCascade,  // sigma2_aw + N * sigma2_as * sigma2_sw (derived value, default)
  kIrsPlusCascade,     // sigma2_sw + N * sigma2_as * sigma2_sw (alternate published form)
};

enum class BobSide { kRight, kLeft };

struct SystemConfig {
  int M = 1;
  int N = 0;
  double P_max = 1e-2;     // W
  double noise_w = 1e-12;  // nominal Willie noise power, W
  double noise_b = 1e-12;  // Bob noise power, W
  double rho = 1.9952623149688795;
  double kappa = 0.01;
  double gamma_tol = 1e-4;
  int L = 1000;
  int max_iters = 100;
  std::uint64_t seed = 1;
  ZMeanConvention z_mean = ZMeanConvention::kDirectPlusCascade;

  /// Throws ConfigError on any violated invariant.
  void validate() const;
};

struct Geometry {
  double d_as_h = 40.0;
  double d_aw_h = 40.0;
  double h_w = 5.0;
  double d_ab_h = 40.0;
  double h_b = 3.0;
  BobSide bob_side = BobSide::kRight;
  double mu_as = 2.0;
  double mu_ab = 2.0;
  double mu_aw = 2.0;
  double mu_sb = 2.0;
  double mu_sw = 2.0;
  double pl0_db = -30.0;
  double d0 = 1.0;

  void validate() const;
};

struct CsiErrorBounds {
  double zeta_aw = 0.0;
  double zeta_sw = 0.0;
  double zeta_as = 0.0;

  void validate() const;
};

struct Scenario {
  SystemConfig system;
  Geometry geometry;
  CsiErrorBounds bounds;
};

/// Parses flat `key = value` text. Blank lines and `#` comments are ignored.
/// Keys are the field names above plus the unit-suffixed aliases rho_db,
/// pl0_db/PL0, P_max_dbm, noise_w_dbm, noise_b_dbm. Unknown keys, malformed
/// numbers and invariant violations raise ConfigError.
Scenario parse_scenario(std::istream& in, Scenario base = {});
Scenario parse_scenario_file(const std::string& path, Scenario base = {});

/// Applies a single key/value pair; shared by the parser and CLI overrides.
void apply_setting(Scenario& s, std::string_view key, std::string_view value);

void validate(const Scenario& s);

}  // namespace covert_irs
