// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace covert_irs {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CRowVector = Eigen::RowVectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// All randomness flows through explicitly passed engines of this type.
using Rng = std::mt19937_64;

// Error taxonomy. The C API maps each class to a distinct status code.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unit-modulus IRS reflection vector. Entry i is v_i = exp(-j*theta_i).
class PhaseVector {
 public:
  PhaseVector() = default;

  /// Throws InvalidArgument unless every entry has modulus 1 within 1e-10.
  explicit PhaseVector(CVector values);

  static PhaseVector from_angles(std::span<const double> theta);
  static PhaseVector ones(Index n);
  /// Projects arbitrary nonzero entries onto the unit circle (zero maps to 1).
  static PhaseVector from_phases_of(const CVector& x);

  const CVector& values() const { return v_; }
  Index size() const { return v_.size(); }
  std::vector<double> angles() const;

 private:
  CVector v_;
};

struct Beamformer {
  CVector w;
  double power() const { return w.squaredNorm(); }
};

enum class SolveStatus {
  kConverged,
  kMaxIterations,
  kSinglePass,
  kBudgetExhausted,
};

const char* to_string(SolveStatus s);

struct SolveReport {
  double rate = 0.0;          // bits/s/Hz
  double power = 0.0;         // ||w||^2 in watts
  PhaseVector phases;
  CVector beamformer;         // length M; for M=1 a single complex weight
  double willie_power = 0.0;  // received signal power at Willie (nominal channels)
  std::vector<double> rate_trajectory;
  int iterations = 0;
  SolveStatus status = SolveStatus::kSinglePass;
  // Robust solvers: worst-case Willie power certified by the error bound,
  // and (AliceIrs) the rate implied by the worst-case Bob gain.
  std::optional<double> willie_bound;
  std::optional<double> bound_rate;
};

inline double rate_from_snr(double snr) { return std::log2(1.0 + std::max(snr, 0.0)); }

}  // namespace covert_irs
