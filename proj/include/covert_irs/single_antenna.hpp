// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------

#pragma once

#include "covert_irs/channel_model.hpp"
#include "covert_irs/config.hpp"
#include "covert_irs/types.hpp"

namespace covert_irs {

/// How the alternating solvers update the IRS phases.
enum class PhaseStepMode {
  /// Relax phases and transmit power jointly: Y = P vbar vbar^H with
  /// Y_ii = Y_nn, Y_nn <= P_max, Tr(T_aw Y) <= eta. Candidates are scored by
  /// the rate after re-optimizing power/beamformer.
  kJointPower,
  /// Phases only, power/beamformer held fixed; Willie's budget enters as
  /// Tr(T_aw V) <= eta/P - |h_aw|^2 with unit diagonal.
  kFixedPower,
};

struct AlternatingOptions {
  PhaseStepMode mode = PhaseStepMode::kJointPower;
  /// Polish each phase-step candidate by per-element coordinate ascent on the
  /// achieved rate (monotone; off reproduces the plain SDP iteration).
  bool refine = true;
};

/// theta_i = arg(h^H w) - arg(conj(g_i)) - arg((H_as w)_i), i.e. every
/// reflected path co-phased with the direct path. Add pi for anti-alignment.
PhaseVector aligned_phases(const CVector& h, const CVector& g, const CMatrix& H_as, const CVector& w,
                           double offset = 0.0);

SolveReport partial_csi_solve(const ChannelRealization& ch, const SystemConfig& cfg);
SolveReport direct_solve(const ChannelRealization& ch, const SystemConfig& cfg);

/// min(P_max, eta / |h_aw^H + v^H diag(g_sw^H) H_as|^2); P_max for zero gain.
double instantaneous_power(const PhaseVector& v, const ChannelRealization& ch, double eta, double P_max);

SolveReport instantaneous_solve(const ChannelRealization& ch, const SystemConfig& cfg,
                                const AlternatingOptions& opts = {});

struct SnrBounds {
  double gamma_upper_irs = 0.0;  // +inf when the Willie lower bound is non-positive
  double gamma_dir = 0.0;
};

SnrBounds snr_bounds(const ChannelRealization& ch, double eta, const SystemConfig& cfg);

}  // namespace covert_irs
