// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "covert_irs/types.hpp"

namespace covert_irs {

/// Tr(A X) <= b (inequality) or Tr(A X) = b (equality); A Hermitian.
struct SdpConstraint {
  CMatrix A;
  double b = 0.0;
};

/// maximize Tr(C X) over Hermitian X >= 0 subject to the listed constraints
/// and, optionally, X_ii = 1 for every i.
struct SdpProblem {
  CMatrix objective;
  std::vector<SdpConstraint> ineq_constraints;
  std::vector<SdpConstraint> eq_constraints;
  bool unit_diagonal = false;
};

enum class SdpStatus { kOptimal, kInfeasible, kMaxIterations };

const char* to_string(SdpStatus s);

struct SdpOptions {
  int max_iterations = 200;
  double tolerance = 1e-9;
};

struct SdpSolution {
  CMatrix X;
  double objective_value = 0.0;
  double duality_gap = 0.0;       // relative
  double primal_residual = 0.0;   // relative, max over constraints
  SdpStatus status = SdpStatus::kMaxIterations;
  int iterations = 0;
};

/// Infeasible-start primal-dual interior-point method with Nesterov-Todd
/// scaling and Mehrotra predictor-corrector steps, working directly on
/// complex Hermitian matrices. Inequalities carry nonnegative slack variables.
/// Throws InvalidArgument for malformed problems (non-Hermitian data,
/// dimension mismatch, non-finite entries).
SdpSolution solve_sdp(const SdpProblem& problem, const SdpOptions& options = {});

/// Quadratic gain in lifted form: gain(vbar) = vbar^H matrix vbar + offset,
/// where vbar = [v; 1] for a unit-modulus phase vector v.
struct LiftedForm {
  CMatrix matrix;
  double offset = 0.0;

  double evaluate(const PhaseVector& v) const;
  /// matrix with offset folded into the last diagonal entry; equals the gain
  /// for any vbar whose last entry has unit modulus.
  CMatrix homogenized() const;
};

/// [Phi Phi^H, Phi conj(alpha); alpha Phi^H, 0] with Phi = diag(g^H) H_as w and
/// alpha = h^H w; offset |alpha|^2.
LiftedForm build_lifted_R(const CVector& h, const CVector& g, const CMatrix& H_as, const CVector& w);

/// Single-antenna special case (w = 1). Throws InvalidArgument unless M = 1.
LiftedForm build_lifted_T(const CVector& h, const CVector& g, const CMatrix& H_as);

/// Sum of build_lifted_R over the canonical basis of C^M: the lifted form of
/// ||h^H + v^H diag(g^H) H_as||^2.
LiftedForm build_lifted_norm(const CVector& h, const CVector& g, const CMatrix& H_as);

struct CandidateScore {
  bool feasible = false;
  double value = 0.0;
};

using PhaseScorer = std::function<CandidateScore(const PhaseVector&)>;
using VectorScorer = std::function<CandidateScore(const CVector&)>;

struct PhaseRandomization {
  std::optional<PhaseVector> best_feasible;  // unset: fallback needed
  double best_feasible_value = 0.0;
  PhaseVector best_any;  // highest-value candidate regardless of feasibility
  double best_any_value = 0.0;
  bool rank_one = false;
  int candidates = 0;
};

/// Gaussian randomization of an (N+1)x(N+1) PSD matrix into unit-modulus
/// phase vectors of length N. A numerically rank-one input (second eigenvalue
/// below 1e-8 of the first) yields the leading eigenvector's phases only.
PhaseRandomization gaussian_randomize(const CMatrix& V, int L, const PhaseScorer& score, Rng& rng);

struct VectorRandomization {
  std::optional<CVector> best_feasible;
  double best_feasible_value = 0.0;
  bool rank_one = false;
  int candidates = 0;
};

/// Gaussian randomization of a PSD beamforming matrix W into vectors
/// w = X Sigma^{1/2} e. The scorer is expected to rescale as needed.
VectorRandomization randomize_beamformer(const CMatrix& W, int L, const VectorScorer& score, Rng& rng);

}  // namespace covert_irs
