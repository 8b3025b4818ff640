// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------

#pragma once

#include "covert_irs/config.hpp"
#include "covert_irs/types.hpp"

namespace covert_irs {

/// Per-link variances (path-loss gains) of the five channel blocks.
struct LinkVariances {
  double ab = 0.0;
  double aw = 0.0;
  double as = 0.0;
  double sb = 0.0;
  double sw = 0.0;
};

/// Euclidean link lengths for the planar layout: Alice at the origin, the IRS
/// on the same line at d_as_h, Willie and Bob offset vertically.
struct LinkDistances {
  double ab = 0.0;
  double aw = 0.0;
  double as = 0.0;
  double sb = 0.0;
  double sw = 0.0;
};

struct ChannelRealization {
  CVector h_ab;  // M
  CVector h_aw;  // M
  CMatrix H_as;  // N x M
  CVector g_sb;  // N
  CVector g_sw;  // N
  LinkVariances var;

  Index M() const { return h_ab.size(); }
  Index N() const { return g_sb.size(); }

  /// h_ab^H + v^H diag(g_sb^H) H_as
  CRowVector bob(const PhaseVector& v) const;
  /// h_aw^H + v^H diag(g_sw^H) H_as
  CRowVector willie(const PhaseVector& v) const;

  /// Throws InvalidArgument if block shapes disagree.
  void check_shapes() const;
};

/// 10^((PL0 - 10 mu log10(d/d0))/10). Throws InvalidArgument for d <= 0.
double path_loss_gain(double d, double mu, const Geometry& geo);

LinkDistances link_distances(const Geometry& geo);
LinkVariances link_variances(const Geometry& geo);

/// Draws every block i.i.d. CN(0, variance) with the configured dimensions.
ChannelRealization sample_channels(const SystemConfig& cfg, const Geometry& geo, Rng& rng);
ChannelRealization sample_channels(int M, int N, const LinkVariances& var, Rng& rng);

/// Adds an error drawn uniformly from the closed ball of radius zeta (Frobenius
/// norm for H_as) to h_aw, g_sw and H_as. Zero bounds leave the link untouched.
ChannelRealization perturb_csi(const ChannelRealization& truth, const CsiErrorBounds& bounds, Rng& rng);

/// Uniform sample from the closed complex ball {x : ||x|| <= radius} in C^dim.
CVector sample_complex_ball(Index dim, double radius, Rng& rng);

/// h_direct^H + v^H diag(g^H) H_as, a row vector of length M.
CRowVector effective_channel(const CVector& h_direct, const PhaseVector& v, const CVector& g, const CMatrix& H_as);

/// Draws one CN(0, variance) sample.
cplx complex_gaussian(double variance, Rng& rng);

}  // namespace covert_irs
