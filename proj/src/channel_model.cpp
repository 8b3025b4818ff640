// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------

#include "covert_irs/channel_model.hpp"

#include <cmath>

namespace covert_irs {

double path_loss_gain(double d, double mu, const Geometry& geo) {
  if (!(d > 0.0)) throw InvalidArgument("path_loss_gain: distance must be positive");
  return std::pow(10.0, (geo.pl0_db - 10.0 * mu * std::log10(d / geo.d0)) / 10.0);
}

LinkDistances link_distances(const Geometry& geo) {
  geo.validate();
  LinkDistances d;
  d.as = geo.d_as_h;
  d.aw = std::hypot(geo.d_aw_h, geo.h_w);
  d.ab = std::hypot(geo.d_ab_h, geo.h_b);
  const double sb_h =
      geo.bob_side == BobSide::kRight ? std::abs(geo.d_ab_h - geo.d_as_h) : geo.d_ab_h + geo.d_as_h;
  d.sb = std::hypot(sb_h, geo.h_b);
  d.sw = std::hypot(geo.d_aw_h - geo.d_as_h, geo.h_w);
  return d;
}

LinkVariances link_variances(const Geometry& geo) {
  const LinkDistances d = link_distances(geo);
  LinkVariances v;
  v.ab = path_loss_gain(d.ab, geo.mu_ab, geo);
  v.aw = path_loss_gain(d.aw, geo.mu_aw, geo);
  v.as = path_loss_gain(d.as, geo.mu_as, geo);
  v.sb = path_loss_gain(d.sb, geo.mu_sb, geo);
  v.sw = path_loss_gain(d.sw, geo.mu_sw, geo);
  return v;
}

cplx complex_gaussian(double variance, Rng& rng) {
  std::normal_distribution<double> n(0.0, std::sqrt(variance / 2.0));
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

namespace {

CVector gaussian_vector(Index n, double variance, Rng& rng) {
  CVector x(n);
  for (Index i = 0; i < n; ++i) x[i] = complex_gaussian(variance, rng);
  return x;
}

}  // namespace

ChannelRealization sample_channels(int M, int N, const LinkVariances& var, Rng& rng) {
  if (M < 1 || N < 0) throw InvalidArgument("sample_channels: need M >= 1 and N >= 0");
  ChannelRealization ch;
  ch.var = var;
  ch.h_ab = gaussian_vector(M, var.ab, rng);
  ch.h_aw = gaussian_vector(M, var.aw, rng);
  ch.H_as.resize(N, M);
  for (Index j = 0; j < M; ++j) {
    for (Index i = 0; i < N; ++i) ch.H_as(i, j) = complex_gaussian(var.as, rng);
  }
  ch.g_sb = gaussian_vector(N, var.sb, rng);
  ch.g_sw = gaussian_vector(N, var.sw, rng);
  return ch;
}

ChannelRealization sample_channels(const SystemConfig& cfg, const Geometry& geo, Rng& rng) {
  cfg.validate();
  return sample_channels(cfg.M, cfg.N, link_variances(geo), rng);
}

CVector sample_complex_ball(Index dim, double radius, Rng& rng) {
  CVector x = CVector::Zero(dim);
  if (dim == 0 || radius <= 0.0) return x;
  // Uniform direction on the sphere in R^{2 dim}, radius law r = R u^{1/(2 dim)}.
  double norm = 0.0;
  do {
    x = gaussian_vector(dim, 2.0, rng);
    norm = x.norm();
  } while (norm == 0.0);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double r = radius * std::pow(u01(rng), 1.0 / static_cast<double>(2 * dim));
  return x * (r / norm);
}

ChannelRealization perturb_csi(const ChannelRealization& truth, const CsiErrorBounds& bounds, Rng& rng) {
  bounds.validate();
  truth.check_shapes();
  ChannelRealization est = truth;
  if (bounds.zeta_aw > 0.0) est.h_aw += sample_complex_ball(truth.M(), bounds.zeta_aw, rng);
  if (bounds.zeta_sw > 0.0) est.g_sw += sample_complex_ball(truth.N(), bounds.zeta_sw, rng);
  if (bounds.zeta_as > 0.0 && truth.H_as.size() > 0) {
    const CVector flat = sample_complex_ball(truth.H_as.size(), bounds.zeta_as, rng);
    est.H_as += Eigen::Map<const CMatrix>(flat.data(), truth.H_as.rows(), truth.H_as.cols());
  }
  return est;
}

CRowVector effective_channel(const CVector& h_direct, const PhaseVector& v, const CVector& g, const CMatrix& H_as) {
  const Index N = g.size();
  if (v.size() != N || H_as.rows() != N || (N > 0 && H_as.cols() != h_direct.size())) {
    throw InvalidArgument("effective_channel: dimension mismatch");
  }
  CRowVector out = h_direct.adjoint();
  if (N == 0) return out;
  const CVector c = v.values().conjugate().cwiseProduct(g.conjugate());
  out += c.transpose() * H_as;
  return out;
}

CRowVector ChannelRealization::bob(const PhaseVector& v) const { return effective_channel(h_ab, v, g_sb, H_as); }

CRowVector ChannelRealization::willie(const PhaseVector& v) const { return effective_channel(h_aw, v, g_sw, H_as); }

void ChannelRealization::check_shapes() const {
  const Index m = h_ab.size();
  const Index n = g_sb.size();
  if (m < 1 || h_aw.size() != m || g_sw.size() != n || H_as.rows() != n || (n > 0 && H_as.cols() != m)) {
    throw InvalidArgument("channel realization: inconsistent block shapes");
  }
}

}  // namespace covert_irs
