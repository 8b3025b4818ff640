// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------

#pragma once

#include "covert_irs/channel_model.hpp"
#include "covert_irs/config.hpp"
#include "covert_irs/single_antenna.hpp"
#include "covert_irs/types.hpp"

namespace covert_irs {

/// sqrt(power) * b^H / ||b||. Throws InvalidArgument for a zero channel.
Beamformer mrt_beamformer(const CRowVector& effective_bob, double power);

/// Unit vector along the projection of b^H onto the null space of the Willie
/// channel; zero when the two channels are parallel.
CVector zf_direction(const CRowVector& effective_bob, const CRowVector& effective_willie);

/// Maximizes |b w|^2 subject to ||w||^2 <= P_max and |omega w|^2 <= eta in
/// closed form for the effective channels b, omega.
Beamformer optimal_beamformer(const CRowVector& effective_bob, const CRowVector& effective_willie, double eta,
                              double P_max);

Beamformer optimal_beamformer_given_v(const PhaseVector& v, const ChannelRealization& ch, double eta,
                                      double P_max);

SolveReport multi_partial_csi_solve(const ChannelRealization& ch, const SystemConfig& cfg);

SolveReport alternating_optimal_solve(const ChannelRealization& ch, const SystemConfig& cfg,
                                      const AlternatingOptions& opts = {});

/// Throws ConfigError for M = 1.
SolveReport zf_solve(const ChannelRealization& ch, const SystemConfig& cfg);

SolveReport min_willie_solve(const ChannelRealization& ch, const SystemConfig& cfg);

SolveReport random_phase_baseline(const ChannelRealization& ch, const SystemConfig& cfg);

/// Mean-gain upper bound for the partial-CSI multi-antenna Bob link.
double multi_partial_gain_bound(const SystemConfig& cfg, const LinkVariances& var);

}  // namespace covert_irs
