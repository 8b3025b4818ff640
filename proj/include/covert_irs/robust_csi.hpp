// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------

#pragma once

#include <optional>

#include "covert_irs/channel_model.hpp"
#include "covert_irs/config.hpp"
#include "covert_irs/single_antenna.hpp"
#include "covert_irs/types.hpp"

namespace covert_irs {

/// Which links are known only up to a norm-bounded error.
enum class RobustKind {
  kAliceWillie,  // h_aw
  kIrsWillie,    // g_sw
  kAliceIrs,     // H_as (affects Bob and Willie)
  kBoth,         // h_aw and g_sw
};

const char* to_string(RobustKind k);

/// Norm used for ||H_as|| in the matrix bounds. The spectral norm is the
/// tight choice; Frobenius is a looser but also valid alternative.
enum class NormChoice { kSpectral, kFrobenius };

struct RobustCase {
  RobustKind kind = RobustKind::kAliceWillie;
  CsiErrorBounds bounds;  // only the fields of the active links are used
  NormChoice norm = NormChoice::kSpectral;

  /// Throws ConfigError for a negative bound on an active link.
  void validate() const;
};

/// M x M matrix U with w^H U w >= worst-case Willie power for phases v:
/// the nominal omega^H omega plus a case-dependent multiple of the identity.
CMatrix robust_willie_matrix(const RobustCase& rc, const PhaseVector& v, const ChannelRealization& est);

/// Objective matrix for the beamformer step. Equal to b^H b except for
/// kAliceIrs, where it is a lower bound on the worst-case Bob gain.
CMatrix robust_bob_matrix(const RobustCase& rc, const PhaseVector& v, const ChannelRealization& est);

struct ShrunkBudget {
  double budget = 0.0;  // right-hand side for Tr(R_aw V) in the phase SDP
  bool exhausted = false;
};

/// Budget left for the phase-dependent part of Willie's signal once the
/// worst-case error contribution for beamformer w is reserved.
ShrunkBudget robust_budget_shrink(const RobustCase& rc, const CVector& w, const ChannelRealization& est, double eta);

/// Worst-case Willie power bound for (v, w) built from the per-beamformer
/// reserve (the phase-step certificate); homogeneous of degree 2 in w.
double willie_bound(const RobustCase& rc, const PhaseVector& v, const CVector& w, const ChannelRealization& est);

/// Lower bound on Bob's gain |b w|^2 under the case's errors (the nominal
/// gain unless kAliceIrs).
double bob_gain_bound(const RobustCase& rc, const PhaseVector& v, const CVector& w, const ChannelRealization& est);

/// Best beamformer for fixed phases subject to ||w||^2 <= P_max and
/// w^H robust_willie_matrix w <= eta, in closed form via a one-dimensional
/// search over the transmit power.
Beamformer robust_beamformer(const RobustCase& rc, const PhaseVector& v, const ChannelRealization& est, double eta,
                             double P_max);

/// Alternating beamformer/phase optimization against the worst-case bounds.
/// The reported rate uses the estimated Bob channel. willie_bound holds the
/// tighter of the two certificates; rate_trajectory and (kAliceIrs)
/// bound_rate track the optimized worst-case objective.
SolveReport robust_solve(const RobustCase& rc, const ChannelRealization& est, const SystemConfig& cfg,
                         const AlternatingOptions& opts = {});

}  // namespace covert_irs
