// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------

// Internal helpers shared by the single-antenna, multi-antenna and robust
// solvers. Not installed.

#pragma once

#include <cstdint>
#include <functional>

#include "covert_irs/channel_model.hpp"
#include "covert_irs/config.hpp"
#include "covert_irs/sdp.hpp"
#include "covert_irs/types.hpp"

namespace covert_irs::detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Independent engine per (seed, salt) pair.
inline Rng solver_rng(const SystemConfig& cfg, std::uint64_t salt) {
  return Rng(splitmix64(cfg.seed ^ splitmix64(salt)));
}

/// Phase SDP with transmit power as the homogenizing coordinate, in units of
/// p_ref: maximize Tr(B Y) s.t. Tr(Wl Y) <= eta/p_ref, Y_nn <= P_max/p_ref,
/// Y_ii = Y_nn.
inline SdpProblem joint_phase_problem(const LiftedForm& bob, const LiftedForm& willie, double eta, double P_max,
                                      double p_ref) {
  const Index n = bob.matrix.rows();
  SdpProblem p;
  p.objective = bob.homogenized();
  p.ineq_constraints.push_back({willie.homogenized(), eta / p_ref});
  CMatrix E = CMatrix::Zero(n, n);
  E(n - 1, n - 1) = 1.0;
  p.ineq_constraints.push_back({E, P_max / p_ref});
  for (Index i = 0; i + 1 < n; ++i) {
    CMatrix D = CMatrix::Zero(n, n);
    D(i, i) = 1.0;
    D(n - 1, n - 1) = -1.0;
    p.eq_constraints.push_back({D, 0.0});
  }
  return p;
}

/// Phase-only SDP: maximize Tr(B V) s.t. Tr(Wl V) <= budget, V_ii = 1.
inline SdpProblem fixed_phase_problem(const LiftedForm& bob, const CMatrix& willie_matrix, double budget) {
  SdpProblem p;
  p.objective = bob.matrix;
  p.ineq_constraints.push_back({willie_matrix, budget});
  p.unit_diagonal = true;
  return p;
}

struct RefinedPhases {
  PhaseVector phases;
  double value = 0.0;
  int sweeps = 0;
};

/// Objective that depends on the phases only through Bob's and Willie's
/// effective channels.
using ChannelObjective = std::function<double(const CRowVector& bob, const CRowVector& willie)>;

/// Coordinate ascent over single IRS elements: each angle is set to the best
/// point of a uniform grid refined by golden-section search. Channels are
/// updated incrementally. Never returns a worse point than start.
RefinedPhases refine_phases(const ChannelRealization& ch, const PhaseVector& start, const ChannelObjective& objective,
                            int max_sweeps = 50);

/// |b w|^2 for the closed-form covert beamformer w.
double covert_gain(const CRowVector& bob, const CRowVector& willie, double eta, double P_max);

inline double snr(double gain, double power, double noise) { return gain * power / noise; }

}  // namespace covert_irs::detail
