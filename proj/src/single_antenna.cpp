// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------

#include "covert_irs/single_antenna.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "covert_irs/detection.hpp"
#include "covert_irs/sdp.hpp"
#include "solver_common.hpp"

namespace covert_irs {
namespace {

void require_single_antenna(const ChannelRealization& ch, const char* who) {
  ch.check_shapes();
  if (ch.M() != 1) throw ConfigError(std::string(who) + ": requires M = 1");
}

SolveReport single_report(const ChannelRealization& ch, const SystemConfig& cfg, const PhaseVector& v, double P) {
  SolveReport r;
  r.power = P;
  r.phases = v;
  r.beamformer = CVector::Constant(1, std::sqrt(P));
  r.rate = rate_from_snr(detail::snr(ch.bob(v).squaredNorm(), P, cfg.noise_b));
  r.willie_power = P * ch.willie(v).squaredNorm();
  return r;
}

}  // namespace

PhaseVector aligned_phases(const CVector& h, const CVector& g, const CMatrix& H_as, const CVector& w, double offset) {
  const Index N = g.size();
  if (H_as.rows() != N || w.size() != h.size() || (N > 0 && H_as.cols() != h.size())) {
    throw InvalidArgument("aligned_phases: shape mismatch");
  }
  const double ref = std::arg(h.dot(w));  // arg(h^H w)
  std::vector<double> theta(static_cast<std::size_t>(N));
  if (N > 0) {
    const CVector hw = H_as * w;
    for (Index i = 0; i < N; ++i) {
      theta[static_cast<std::size_t>(i)] = offset + ref - std::arg(std::conj(g[i])) - std::arg(hw[i]);
    }
  }
  return PhaseVector::from_angles(theta);
}

SolveReport partial_csi_solve(const ChannelRealization& ch, const SystemConfig& cfg) {
  require_single_antenna(ch, "partial_csi_solve");
  const double P = max_power_for_covertness(z_mean_irs(cfg, ch.var), detection_params(cfg), cfg.P_max);
  const PhaseVector v = aligned_phases(ch.h_ab, ch.g_sb, ch.H_as, CVector::Ones(1));
  SolveReport r = single_report(ch, cfg, v, P);
  // Closed-form SNR with all paths co-phased.
  double amp = std::abs(ch.h_ab[0]);
  for (Index i = 0; i < ch.N(); ++i) amp += std::abs(ch.H_as(i, 0)) * std::abs(ch.g_sb[i]);
  r.rate = rate_from_snr(P * amp * amp / cfg.noise_b);
  r.rate_trajectory = {r.rate};
  r.status = SolveStatus::kSinglePass;
  return r;
}

SolveReport direct_solve(const ChannelRealization& ch, const SystemConfig& cfg) {
  require_single_antenna(ch, "direct_solve");
  const double P = max_power_for_covertness(ch.var.aw, detection_params(cfg), cfg.P_max);
  SolveReport r;
  r.power = P;
  r.beamformer = CVector::Constant(1, std::sqrt(P));
  r.rate = rate_from_snr(P * std::norm(ch.h_ab[0]) / cfg.noise_b);
  r.willie_power = P * std::norm(ch.h_aw[0]);
  r.rate_trajectory = {r.rate};
  r.status = SolveStatus::kSinglePass;
  return r;
}

double instantaneous_power(const PhaseVector& v, const ChannelRealization& ch, double eta, double P_max) {
  const double gain = ch.willie(v).squaredNorm();
  if (gain == 0.0) return P_max;
  return std::min(P_max, eta / gain);
}

SolveReport instantaneous_solve(const ChannelRealization& ch, const SystemConfig& cfg, const AlternatingOptions& opts) {
  require_single_antenna(ch, "instantaneous_solve");
  cfg.validate();
  const double eta = covert_budget(detection_params(cfg)).eta;
  const Index N = ch.N();

  PhaseVector v = aligned_phases(ch.h_ab, ch.g_sb, ch.H_as, CVector::Ones(1));
  double P = instantaneous_power(v, ch, eta, cfg.P_max);
  SolveReport best = single_report(ch, cfg, v, P);
  best.rate_trajectory = {best.rate};
  best.status = SolveStatus::kConverged;
  if (N == 0 || eta == 0.0) return best;

  const LiftedForm T_ab = build_lifted_T(ch.h_ab, ch.g_sb, ch.H_as);
  const LiftedForm T_aw = build_lifted_T(ch.h_aw, ch.g_sw, ch.H_as);
  Rng rng = detail::solver_rng(cfg, 0x51A7);
  const double noise = cfg.noise_b;

  auto rate_of = [&](const PhaseVector& cand) {
    const double p = instantaneous_power(cand, ch, eta, cfg.P_max);
    return rate_from_snr(detail::snr(T_ab.evaluate(cand), p, noise));
  };
  const detail::ChannelObjective gain_of = [&](const CRowVector& b, const CRowVector& omega) {
    return detail::covert_gain(b, omega, eta, cfg.P_max);
  };

  std::vector<double> trajectory = {best.rate};
  SolveStatus status = SolveStatus::kMaxIterations;
  int iterations = 0;
  for (int it = 1; it <= cfg.max_iters; ++it) {
    iterations = it;
    // (a) power for the incumbent phases; (b) phases.
    P = instantaneous_power(v, ch, eta, cfg.P_max);
    std::optional<PhaseVector> next;
    if (opts.mode == PhaseStepMode::kJointPower) {
      const SdpSolution s = solve_sdp(detail::joint_phase_problem(T_ab, T_aw, eta, cfg.P_max, P));
      if (s.status != SdpStatus::kInfeasible) {
        const auto rr = gaussian_randomize(s.X, cfg.L, [&](const PhaseVector& c) {
          return CandidateScore{true, rate_of(c)};
        }, rng);
        next = rr.best_feasible;
      }
    } else {
      const double budget = eta / P - T_aw.offset;
      const SdpSolution s = solve_sdp(detail::fixed_phase_problem(T_ab, T_aw.matrix, budget));
      if (s.status != SdpStatus::kInfeasible) {
        const auto rr = gaussian_randomize(s.X, cfg.L, [&](const PhaseVector& c) {
          const bool ok = P * T_aw.evaluate(c) <= eta * (1.0 + 1e-9);
          return CandidateScore{ok, T_ab.evaluate(c)};
        }, rng);
        // No feasible draw: take the best-gain draw; its power is re-derived
        // by the next power step.
        next = rr.best_feasible ? *rr.best_feasible : rr.best_any;
      }
    }

    if (next && opts.refine) {
      const PhaseVector polished = detail::refine_phases(ch, *next, gain_of).phases;
      if (rate_of(polished) > rate_of(*next)) next = polished;
    }
    double gain = 0.0;
    if (next) {
      const double r_next = rate_of(*next);
      if (r_next > best.rate) {
        gain = r_next - best.rate;
        v = *next;
        best = single_report(ch, cfg, v, instantaneous_power(v, ch, eta, cfg.P_max));
      }
    }
    trajectory.push_back(best.rate);
    if (gain < cfg.gamma_tol) {
      status = SolveStatus::kConverged;
      break;
    }
  }
  best.iterations = iterations;
  best.status = status;
  best.rate_trajectory = std::move(trajectory);
  return best;
}

SnrBounds snr_bounds(const ChannelRealization& ch, double eta, const SystemConfig& cfg) {
  require_single_antenna(ch, "snr_bounds");
  const Index N = ch.N();
  const LiftedForm T_aw = build_lifted_T(ch.h_aw, ch.g_sw, ch.H_as);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(T_aw.matrix, Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues().minCoeff();
  double amp = std::abs(ch.h_ab[0]);
  for (Index i = 0; i < N; ++i) amp += std::abs(ch.H_as(i, 0)) * std::abs(ch.g_sb[i]);
  SnrBounds b;
  const double denom = lmin * static_cast<double>(N + 1) + std::norm(ch.h_aw[0]);
  b.gamma_upper_irs =
      denom > 0.0 ? eta * amp * amp / (cfg.noise_b * denom) : std::numeric_limits<double>::infinity();
  b.gamma_dir = eta * std::norm(ch.h_ab[0]) / (cfg.noise_b * std::norm(ch.h_aw[0]));
  return b;
}

}  // namespace covert_irs
