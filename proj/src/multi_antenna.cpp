// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------

#include "covert_irs/multi_antenna.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "covert_irs/detection.hpp"
#include "covert_irs/sdp.hpp"
#include "solver_common.hpp"

namespace covert_irs {
namespace {

double bob_gain(const ChannelRealization& ch, const PhaseVector& v, const CVector& w) {
  return std::norm((ch.bob(v) * w)(0, 0));
}

SolveReport multi_report(const ChannelRealization& ch, const SystemConfig& cfg, const PhaseVector& v,
                         const CVector& w) {
  SolveReport r;
  r.phases = v;
  r.beamformer = w;
  r.power = w.squaredNorm();
  r.rate = rate_from_snr(bob_gain(ch, v, w) / cfg.noise_b);
  r.willie_power = std::norm((ch.willie(v) * w)(0, 0));
  return r;
}

// Keeps the best (v, w) seen; a candidate replaces the incumbent only when it
// strictly improves the rate, so the recorded trajectory never decreases.
class Incumbent {
 public:
  Incumbent(const ChannelRealization& ch, const SystemConfig& cfg) : ch_(ch), cfg_(cfg) {}

  // Returns the rate improvement (0 when rejected).
  double offer(const PhaseVector& v, const CVector& w) {
    SolveReport cand = multi_report(ch_, cfg_, v, w);
    if (!have_ || cand.rate > best_.rate) {
      const double gain = have_ ? cand.rate - best_.rate : std::numeric_limits<double>::infinity();
      best_ = std::move(cand);
      have_ = true;
      return gain;
    }
    return 0.0;
  }

  void record() { trajectory_.push_back(best_.rate); }

  const SolveReport& best() const { return best_; }

  SolveReport finish(int iterations, SolveStatus status) {
    SolveReport out = best_;
    out.iterations = iterations;
    out.status = status;
    out.rate_trajectory = trajectory_;
    return out;
  }

 private:
  const ChannelRealization& ch_;
  const SystemConfig& cfg_;
  SolveReport best_;
  bool have_ = false;
  std::vector<double> trajectory_;
};

PhaseVector bob_aligned_start(const ChannelRealization& ch, double P_max) {
  const PhaseVector ones = PhaseVector::ones(ch.N());
  const CRowVector b = ch.bob(ones);
  const CVector w = b.squaredNorm() > 0.0 ? mrt_beamformer(b, P_max).w : CVector(CVector::Ones(ch.M()));
  return aligned_phases(ch.h_ab, ch.g_sb, ch.H_as, w);
}

}  // namespace

Beamformer mrt_beamformer(const CRowVector& effective_bob, double power) {
  const double nb = effective_bob.norm();
  if (!(nb > 0.0)) throw InvalidArgument("mrt_beamformer: zero channel");
  if (power < 0.0) throw InvalidArgument("mrt_beamformer: negative power");
  return {std::sqrt(power) * effective_bob.adjoint() / nb};
}

CVector zf_direction(const CRowVector& effective_bob, const CRowVector& effective_willie) {
  const CVector bh = effective_bob.adjoint();
  CVector p = bh;
  const double nw2 = effective_willie.squaredNorm();
  if (nw2 > 0.0) p -= effective_willie.adjoint() * ((effective_willie * bh)(0, 0) / nw2);
  const double np = p.norm();
  if (!(np > 1e-12 * bh.norm())) return CVector::Zero(bh.size());
  p /= np;
  // One re-orthogonalization pass keeps leakage at rounding level.
  if (nw2 > 0.0) {
    p -= effective_willie.adjoint() * ((effective_willie * p)(0, 0) / nw2);
    p.normalize();
  }
  return p;
}

Beamformer optimal_beamformer(const CRowVector& b, const CRowVector& omega, double eta, double P_max) {
  const Index M = b.size();
  if (omega.size() != M) throw InvalidArgument("optimal_beamformer: dimension mismatch");
  const double nb = b.norm();
  if (!(nb > 0.0)) return {CVector::Zero(M)};
  const CVector u_mrt = b.adjoint() / nb;
  const double nw = omega.norm();
  if (!(nw > 0.0)) return {std::sqrt(P_max) * u_mrt};
  const double c = std::abs((omega * u_mrt)(0, 0)) / nw;  // |cos Omega|
  const double tau = std::sqrt(eta / (P_max * nw * nw));
  if (tau >= c) return {std::sqrt(P_max) * u_mrt};
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  const double A = tau / c;
  const double B = std::sqrt(1.0 - tau * tau) - tau * s / c;
  const CVector u_zf = zf_direction(b, omega);
  CVector w = std::sqrt(P_max) * (A * u_mrt + B * u_zf);
  // Guard against rounding pushing Willie's power above eta.
  const double leak = std::norm((omega * w)(0, 0));
  if (leak > eta) w *= std::sqrt(eta / leak);
  const double pw = w.squaredNorm();
  if (pw > P_max) w *= std::sqrt(P_max / pw);
  return {w};
}

Beamformer optimal_beamformer_given_v(const PhaseVector& v, const ChannelRealization& ch, double eta, double P_max) {
  ch.check_shapes();
  return optimal_beamformer(ch.bob(v), ch.willie(v), eta, P_max);
}

SolveReport multi_partial_csi_solve(const ChannelRealization& ch, const SystemConfig& cfg) {
  ch.check_shapes();
  cfg.validate();
  const double P = max_power_for_covertness(z_mean_irs(cfg, ch.var), detection_params(cfg), cfg.P_max);
  PhaseVector v = PhaseVector::ones(ch.N());
  if (ch.N() > 0) {
    const LiftedForm R = build_lifted_norm(ch.h_ab, ch.g_sb, ch.H_as);
    SdpProblem prob;
    prob.objective = R.matrix;
    prob.unit_diagonal = true;
    const SdpSolution s = solve_sdp(prob);
    Rng rng = detail::solver_rng(cfg, 0x9A27);
    const auto rr = gaussian_randomize(s.X, cfg.L, [&](const PhaseVector& c) {
      return CandidateScore{true, ch.bob(c).squaredNorm()};
    }, rng);
    v = rr.best_feasible ? *rr.best_feasible : rr.best_any;
  }
  const CRowVector b = ch.bob(v);
  const CVector w = b.squaredNorm() > 0.0 ? mrt_beamformer(b, P).w : CVector(CVector::Zero(ch.M()));
  SolveReport r = multi_report(ch, cfg, v, w);
  r.rate_trajectory = {r.rate};
  r.status = SolveStatus::kSinglePass;
  return r;
}

SolveReport alternating_optimal_solve(const ChannelRealization& ch, const SystemConfig& cfg,
                                      const AlternatingOptions& opts) {
  ch.check_shapes();
  cfg.validate();
  const double eta = covert_budget(detection_params(cfg)).eta;
  Rng rng = detail::solver_rng(cfg, 0x0A17);
  Incumbent inc(ch, cfg);

  const PhaseVector v = bob_aligned_start(ch, cfg.P_max);
  inc.offer(v, optimal_beamformer_given_v(v, ch, eta, cfg.P_max).w);
  inc.record();
  if (ch.N() == 0 || eta == 0.0) return inc.finish(0, SolveStatus::kConverged);

  auto rate_of = [&](const PhaseVector& cand) {
    const CVector w = optimal_beamformer_given_v(cand, ch, eta, cfg.P_max).w;
    return rate_from_snr(bob_gain(ch, cand, w) / cfg.noise_b);
  };
  const detail::ChannelObjective gain_of = [&](const CRowVector& b, const CRowVector& omega) {
    return detail::covert_gain(b, omega, eta, cfg.P_max);
  };

  for (int it = 1; it <= cfg.max_iters; ++it) {
    // (a) beamformer for the incumbent phases.
    const CVector w = inc.best().beamformer;
    const double pw = w.squaredNorm();
    std::optional<PhaseVector> next;
    if (pw > 0.0) {
      const LiftedForm R_ab = build_lifted_R(ch.h_ab, ch.g_sb, ch.H_as, w);
      const LiftedForm R_aw = build_lifted_R(ch.h_aw, ch.g_sw, ch.H_as, w);
      if (opts.mode == PhaseStepMode::kJointPower) {
        // Direction u = w/||w|| fixed; power (scale) relaxed with the phases.
        const LiftedForm Rb{R_ab.matrix / pw, R_ab.offset / pw};
        const LiftedForm Rw{R_aw.matrix / pw, R_aw.offset / pw};
        const SdpSolution s = solve_sdp(detail::joint_phase_problem(Rb, Rw, eta, cfg.P_max, pw));
        if (s.status != SdpStatus::kInfeasible) {
          const auto rr = gaussian_randomize(s.X, cfg.L, [&](const PhaseVector& c) {
            return CandidateScore{true, rate_of(c)};
          }, rng);
          next = rr.best_feasible;
        }
      } else {
        const SdpSolution s = solve_sdp(detail::fixed_phase_problem(R_ab, R_aw.matrix, eta - R_aw.offset));
        if (s.status != SdpStatus::kInfeasible) {
          const auto rr = gaussian_randomize(s.X, cfg.L, [&](const PhaseVector& c) {
            const bool ok = R_aw.evaluate(c) <= eta * (1.0 + 1e-9);
            return CandidateScore{ok, R_ab.evaluate(c)};
          }, rng);
          next = rr.best_feasible;  // none feasible: keep the previous phases
        }
      }
    }
    double gain = 0.0;
    if (next) {
      gain = inc.offer(*next, optimal_beamformer_given_v(*next, ch, eta, cfg.P_max).w);
      if (opts.refine) {
        const PhaseVector polished = detail::refine_phases(ch, *next, gain_of).phases;
        gain += inc.offer(polished, optimal_beamformer_given_v(polished, ch, eta, cfg.P_max).w);
      }
    }
    inc.record();
    if (gain < cfg.gamma_tol) return inc.finish(it, SolveStatus::kConverged);
  }
  return inc.finish(cfg.max_iters, SolveStatus::kMaxIterations);
}

SolveReport zf_solve(const ChannelRealization& ch, const SystemConfig& cfg) {
  ch.check_shapes();
  cfg.validate();
  if (ch.M() < 2) throw ConfigError("zf_solve: zero-forcing requires M >= 2");
  Incumbent inc(ch, cfg);
  const PhaseVector ones = PhaseVector::ones(ch.N());
  const CRowVector b0 = ch.bob(ones);
  CVector w = b0.squaredNorm() > 0.0 ? mrt_beamformer(b0, cfg.P_max).w : CVector(CVector::Ones(ch.M()));
  int it = 0;
  while (it < cfg.max_iters) {
    ++it;
    // (a) phases co-phased with the current beamformer, (b) ZF beamformer.
    const PhaseVector v = aligned_phases(ch.h_ab, ch.g_sb, ch.H_as, w);
    const CVector w_next = std::sqrt(cfg.P_max) * zf_direction(ch.bob(v), ch.willie(v));
    const double gain = inc.offer(v, w_next);
    inc.record();
    if (gain < cfg.gamma_tol) return inc.finish(it, SolveStatus::kConverged);
    if (w_next.squaredNorm() == 0.0) return inc.finish(it, SolveStatus::kConverged);
    w = w_next;
  }
  return inc.finish(it, SolveStatus::kMaxIterations);
}

SolveReport min_willie_solve(const ChannelRealization& ch, const SystemConfig& cfg) {
  ch.check_shapes();
  cfg.validate();
  const double eta = covert_budget(detection_params(cfg)).eta;
  Incumbent inc(ch, cfg);
  PhaseVector v = bob_aligned_start(ch, cfg.P_max);
  CVector w = optimal_beamformer_given_v(v, ch, eta, cfg.P_max).w;
  inc.offer(v, w);
  inc.record();
  if (ch.N() == 0) return inc.finish(0, SolveStatus::kConverged);
  for (int it = 1; it <= cfg.max_iters; ++it) {
    // Beamformer is computed first for the current phases, then the phases
    // are anti-aligned against Willie's direct path for that beamformer.
    if (w.squaredNorm() == 0.0) return inc.finish(it - 1, SolveStatus::kConverged);
    v = aligned_phases(ch.h_aw, ch.g_sw, ch.H_as, w, std::numbers::pi);
    w = optimal_beamformer_given_v(v, ch, eta, cfg.P_max).w;
    const double gain = inc.offer(v, w);
    inc.record();
    if (gain < cfg.gamma_tol) return inc.finish(it, SolveStatus::kConverged);
  }
  return inc.finish(cfg.max_iters, SolveStatus::kMaxIterations);
}

SolveReport random_phase_baseline(const ChannelRealization& ch, const SystemConfig& cfg) {
  ch.check_shapes();
  cfg.validate();
  const double eta = covert_budget(detection_params(cfg)).eta;
  Rng rng = detail::solver_rng(cfg, 0x7A4D);
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  std::vector<double> theta(static_cast<std::size_t>(ch.N()));
  for (auto& t : theta) t = u(rng);
  const PhaseVector v = PhaseVector::from_angles(theta);
  SolveReport r = multi_report(ch, cfg, v, optimal_beamformer_given_v(v, ch, eta, cfg.P_max).w);
  r.rate_trajectory = {r.rate};
  r.status = SolveStatus::kSinglePass;
  return r;
}

double multi_partial_gain_bound(const SystemConfig& cfg, const LinkVariances& var) {
  const double N = cfg.N;
  const double pi = std::numbers::pi;
  return cfg.M * (var.ab + N * (1.0 + (N - 1.0) * pi * pi / 16.0) * var.as * var.sb +
                  N * std::pow(pi, 1.5) * std::sqrt(var.ab * var.as * var.sb) / 4.0);
}

}  // namespace covert_irs
