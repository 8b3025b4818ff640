// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------

#include "covert_irs/robust_csi.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "covert_irs/detection.hpp"
#include "covert_irs/multi_antenna.hpp"
#include "covert_irs/sdp.hpp"
#include "solver_common.hpp"

namespace covert_irs {
namespace {

constexpr int kPowerGrid = 64;
constexpr int kPowerGolden = 40;
constexpr int kMaxHalvings = 40;

bool uses_aw(RobustKind k) { return k == RobustKind::kAliceWillie || k == RobustKind::kBoth; }
bool uses_sw(RobustKind k) { return k == RobustKind::kIrsWillie || k == RobustKind::kBoth; }
bool uses_as(RobustKind k) { return k == RobustKind::kAliceIrs; }

double matrix_norm(const CMatrix& H, NormChoice choice) {
  if (H.size() == 0) return 0.0;
  if (choice == NormChoice::kFrobenius) return H.norm();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(H.adjoint() * H, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

// Per-realization constants of the error model.
class ErrorModel {
 public:
  ErrorModel(const RobustCase& rc, const ChannelRealization& est) : rc_(rc), est_(est) {
    const auto& z = rc.bounds;
    const double nH = uses_sw(rc.kind) ? matrix_norm(est.H_as, rc.norm) : 0.0;
    switch (rc.kind) {
      case RobustKind::kAliceWillie: k_w_ = z.zeta_aw; break;
      case RobustKind::kIrsWillie: k_w_ = z.zeta_sw * nH; break;
      case RobustKind::kAliceIrs: k_w_ = z.zeta_as * est.g_sw.norm(); break;
      case RobustKind::kBoth: k_w_ = z.zeta_sw * nH + z.zeta_aw; break;
    }
    if (uses_as(rc.kind)) k_b_ = z.zeta_as * est.g_sb.norm();
  }

  const RobustCase& rc() const { return rc_; }
  const ChannelRealization& est() const { return est_; }

  /// Worst-case norm of the error in Willie's effective channel (any v).
  double willie_error() const { return k_w_; }

  /// c with w^H (omega^H omega + c I) w >= worst-case Willie power.
  double willie_inflation(const CRowVector& omega) const { return k_w_ * k_w_ + 2.0 * k_w_ * omega.norm(); }

  /// d with w^H (b^H b + d I) w <= worst-case Bob gain.
  double bob_inflation(const CRowVector& b) const { return k_b_ * k_b_ - 2.0 * k_b_ * b.norm(); }

  double matrix_bound(const CRowVector& omega, const CVector& w) const {
    return std::norm((omega * w)(0, 0)) + willie_inflation(omega) * w.squaredNorm();
  }

  double bob_bound(const CRowVector& b, const CVector& w) const {
    const double bw = std::abs((b * w)(0, 0));
    if (k_b_ == 0.0) return bw * bw;
    const double lb = std::max(0.0, bw - k_b_ * w.norm());
    return lb * lb;
  }

  /// Scales w to the largest power admitted by P_max and the matrix bound.
  CVector scale_to_admissible(const CRowVector& omega, CVector w, double eta, double P_max) const {
    const double pw = w.squaredNorm();
    if (!(pw > 0.0)) return w;
    double s2 = P_max / pw;
    const double L = matrix_bound(omega, w);
    if (L > 0.0) s2 = std::min(s2, eta / L);
    return w * std::sqrt(s2);
  }

  CVector beamformer(const CRowVector& b, const CRowVector& omega, double eta, double P_max) const;

 private:
  const RobustCase& rc_;
  const ChannelRealization& est_;
  double k_w_ = 0.0;
  double k_b_ = 0.0;
};

CVector ErrorModel::beamformer(const CRowVector& b, const CRowVector& omega, double eta, double P_max) const {
  const Index M = b.size();
  const double nb = b.norm();
  if (!(nb > 0.0) || !(eta > 0.0)) return CVector::Zero(M);
  const double c = willie_inflation(omega);
  const double d = bob_inflation(b);
  const double p_hi = c > 0.0 ? std::min(P_max, eta / c) : P_max;
  const double nw = omega.norm();
  const cplx bo = (b * omega.adjoint())(0, 0);
  const double cos_o = nw > 0.0 ? std::min(1.0, std::abs(bo) / (nb * nw)) : 0.0;
  const double sin_o = std::sqrt(std::max(0.0, 1.0 - cos_o * cos_o));

  // With ||w||^2 = p the best split puts x along omega^H and the rest along
  // the zero-forcing direction; x is capped by the leakage left after c p.
  auto along = [&](double p) {
    const double x_mrt = std::sqrt(p) * cos_o;
    if (!(nw > 0.0)) return x_mrt;
    return std::min(x_mrt, std::sqrt(std::max(0.0, eta - c * p)) / nw);
  };
  auto value = [&](double p) {
    const double x = along(p);
    const double y = std::sqrt(std::max(0.0, p - x * x));
    const double amp = x * cos_o + y * sin_o;
    return nb * nb * amp * amp + d * p;
  };

  double p_best = 0.0, f_best = 0.0;
  const double step = p_hi / kPowerGrid;
  for (int k = 1; k <= kPowerGrid; ++k) {
    const double f = value(k * step);
    if (f > f_best) {
      f_best = f;
      p_best = k * step;
    }
  }
  if (!(f_best > 0.0)) return CVector::Zero(M);
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = std::max(0.0, p_best - step), hi = std::min(p_hi, p_best + step);
  double c1 = hi - r * (hi - lo), c2 = lo + r * (hi - lo);
  double f1 = value(c1), f2 = value(c2);
  for (int k = 0; k < kPowerGolden; ++k) {
    if (f1 >= f2) {
      hi = c2;
      c2 = c1;
      f2 = f1;
      c1 = hi - r * (hi - lo);
      f1 = value(c1);
    } else {
      lo = c1;
      c1 = c2;
      f1 = f2;
      c2 = lo + r * (hi - lo);
      f2 = value(c2);
    }
  }
  if (f1 > f_best) {
    f_best = f1;
    p_best = c1;
  }
  if (f2 > f_best) p_best = c2;

  CVector w;
  if (nw > 0.0) {
    const double x = along(p_best);
    const double y = std::sqrt(std::max(0.0, p_best - x * x));
    const cplx align = std::abs(bo) > 0.0 ? std::conj(bo) / std::abs(bo) : cplx(1.0);
    w = (x / nw) * align * omega.adjoint() + y * zf_direction(b, omega);
  } else {
    w = std::sqrt(p_best) * b.adjoint() / nb;
  }
  return scale_to_admissible(omega, w, eta, P_max);
}

// Worst-case |error term| on Willie's signal for beamformer w (not v).
struct WillieTerms {
  double beta = 0.0;     // |h_aw^H w|
  double cascade = 0.0;  // ||g_sw|| ||H_as w||, bounds the reflected part
  double err = 0.0;      // bound on the error term
};

WillieTerms willie_terms(const RobustCase& rc, const CVector& w, const ChannelRealization& est) {
  WillieTerms t;
  t.beta = std::abs(est.h_aw.dot(w));
  const double hw = est.N() > 0 ? (est.H_as * w).norm() : 0.0;
  t.cascade = est.g_sw.norm() * hw;
  const auto& z = rc.bounds;
  switch (rc.kind) {
    case RobustKind::kAliceWillie: t.err = z.zeta_aw * w.norm(); break;
    case RobustKind::kIrsWillie: t.err = z.zeta_sw * hw; break;
    case RobustKind::kAliceIrs: t.err = z.zeta_as * est.g_sw.norm() * w.norm(); break;
    case RobustKind::kBoth: t.err = z.zeta_sw * hw + z.zeta_aw * w.norm(); break;
  }
  return t;
}

// Lambda: the v-independent reserve added to |a(v)|^2 - |beta|^2.
double lambda_reserve(const WillieTerms& t) {
  return t.beta * t.beta + t.err * t.err + 2.0 * t.err * (t.beta + t.cascade);
}

// The tighter of the two worst-case certificates.
double certified_bound(const ErrorModel& m, const PhaseVector& v, const CVector& w) {
  return std::min(willie_bound(m.rc(), v, w, m.est()), m.matrix_bound(m.est().willie(v), w));
}

class RobustIncumbent {
 public:
  RobustIncumbent(const ErrorModel& m, const SystemConfig& cfg, double eta) : m_(m), cfg_(cfg), eta_(eta) {}

  double offer(const PhaseVector& v, const CVector& w) {
    if (w.squaredNorm() > cfg_.P_max * (1.0 + 1e-10) || certified_bound(m_, v, w) > eta_ * (1.0 + 1e-9)) {
      return 0.0;
    }
    const double obj = m_.bob_bound(m_.est().bob(v), w);
    if (!have_ || obj > obj_) {
      const double gain = have_ ? rate_of(obj) - rate_of(obj_) : std::numeric_limits<double>::infinity();
      v_ = v;
      w_ = w;
      obj_ = obj;
      have_ = true;
      return gain;
    }
    return 0.0;
  }

  double rate_of(double gain) const { return rate_from_snr(gain / cfg_.noise_b); }
  double rate() const { return rate_of(obj_); }
  void record() { trajectory_.push_back(rate_of(obj_)); }
  bool have() const { return have_; }
  const PhaseVector& v() const { return v_; }
  const CVector& w() const { return w_; }

  SolveReport finish(int iterations, SolveStatus status) const {
    const ChannelRealization& est = m_.est();
    SolveReport r;
    r.phases = v_;
    r.beamformer = w_;
    r.power = w_.squaredNorm();
    r.rate = rate_from_snr(std::norm((est.bob(v_) * w_)(0, 0)) / cfg_.noise_b);
    r.willie_power = std::norm((est.willie(v_) * w_)(0, 0));
    r.willie_bound = certified_bound(m_, v_, w_);
    if (uses_as(m_.rc().kind)) r.bound_rate = rate_of(obj_);
    r.rate_trajectory = trajectory_;
    r.iterations = iterations;
    r.status = obj_ > 0.0 ? status : SolveStatus::kBudgetExhausted;
    return r;
  }

 private:
  const ErrorModel& m_;
  const SystemConfig& cfg_;
  double eta_;
  PhaseVector v_;
  CVector w_;
  double obj_ = 0.0;
  bool have_ = false;
  std::vector<double> trajectory_;
};

// Beamformer SDP over W' = W / P_max followed by randomization.
std::optional<CVector> beamformer_sdp_step(const ErrorModel& m, const PhaseVector& v, double eta, double P_max, int L,
                                           Rng& rng) {
  const Index M = m.est().M();
  const CRowVector b = m.est().bob(v);
  const CRowVector omega = m.est().willie(v);
  SdpProblem prob;
  // Unit-scale objective and right-hand sides; the raw Willie budget eta/P_max
  // is many orders of magnitude below 1.
  const CMatrix B = robust_bob_matrix(m.rc(), v, m.est());
  const double b_scale = B.trace().real();
  prob.objective = b_scale > 0.0 ? CMatrix(B / b_scale) : B;
  prob.ineq_constraints.push_back({CMatrix::Identity(M, M), 1.0});
  prob.ineq_constraints.push_back({robust_willie_matrix(m.rc(), v, m.est()) * (P_max / eta), 1.0});
  const SdpSolution s = solve_sdp(prob);
  if (s.status == SdpStatus::kInfeasible) return std::nullopt;
  const auto rr = randomize_beamformer(P_max * s.X, L, [&](const CVector& c) {
    return CandidateScore{true, m.bob_bound(b, m.scale_to_admissible(omega, c, eta, P_max))};
  }, rng);
  if (!rr.best_feasible) return std::nullopt;
  return m.scale_to_admissible(omega, *rr.best_feasible, eta, P_max);
}

// Quadratic-in-vbar upper bound on u^H U(v) u (the matrix bound) for a unit
// direction u, tight at the incumbent phases v0:
// 2k||omega|| <= k (||omega||^2 / n0 + n0).
LiftedForm willie_majorizer(const ErrorModel& m, const CVector& u, const PhaseVector& v0) {
  const ChannelRealization& est = m.est();
  LiftedForm R = build_lifted_R(est.h_aw, est.g_sw, est.H_as, u);
  const double k = m.willie_error();
  if (k == 0.0) return R;
  const double n0 = std::max(est.willie(v0).norm(), 1e-6 * k);
  const LiftedForm Q = build_lifted_norm(est.h_aw, est.g_sw, est.H_as);
  return {R.matrix + (k / n0) * Q.matrix, R.offset + k * k + k * n0 + (k / n0) * Q.offset};
}

}  // namespace

const char* to_string(RobustKind k) {
  switch (k) {
    case RobustKind::kAliceWillie: return "alice-willie";
    case RobustKind::kIrsWillie: return "irs-willie";
    case RobustKind::kAliceIrs: return "alice-irs";
    case RobustKind::kBoth: return "both";
  }
  return "unknown";
}

void RobustCase::validate() const {
  if ((uses_aw(kind) && !(bounds.zeta_aw >= 0.0)) || (uses_sw(kind) && !(bounds.zeta_sw >= 0.0)) ||
      (uses_as(kind) && !(bounds.zeta_as >= 0.0))) {
    throw ConfigError("robust case: error bounds must be non-negative");
  }
}

CMatrix robust_willie_matrix(const RobustCase& rc, const PhaseVector& v, const ChannelRealization& est) {
  const ErrorModel m(rc, est);
  const CRowVector omega = est.willie(v);
  CMatrix U = omega.adjoint() * omega;
  U.diagonal().array() += m.willie_inflation(omega);
  return U;
}

CMatrix robust_bob_matrix(const RobustCase& rc, const PhaseVector& v, const ChannelRealization& est) {
  const ErrorModel m(rc, est);
  const CRowVector b = est.bob(v);
  CMatrix U = b.adjoint() * b;
  U.diagonal().array() += m.bob_inflation(b);
  return U;
}

ShrunkBudget robust_budget_shrink(const RobustCase& rc, const CVector& w, const ChannelRealization& est, double eta) {
  const WillieTerms t = willie_terms(rc, w, est);
  ShrunkBudget out;
  if (rc.kind == RobustKind::kAliceWillie) {
    const double room = std::sqrt(eta) - t.err;
    out.budget = room > 0.0 ? room * room - t.beta * t.beta : -t.beta * t.beta;
    out.exhausted = !(room > 0.0);
  } else {
    out.budget = eta - lambda_reserve(t);
  }
  // Tr(R V) >= -|beta|^2 always (|a|^2 >= 0); below that nothing is feasible.
  if (out.budget < -t.beta * t.beta) out.exhausted = true;
  return out;
}

double willie_bound(const RobustCase& rc, const PhaseVector& v, const CVector& w, const ChannelRealization& est) {
  const double a = std::abs((est.willie(v) * w)(0, 0));
  const WillieTerms t = willie_terms(rc, w, est);
  if (rc.kind == RobustKind::kAliceWillie) return (a + t.err) * (a + t.err);
  return a * a - t.beta * t.beta + lambda_reserve(t);
}

double bob_gain_bound(const RobustCase& rc, const PhaseVector& v, const CVector& w, const ChannelRealization& est) {
  return ErrorModel(rc, est).bob_bound(est.bob(v), w);
}

Beamformer robust_beamformer(const RobustCase& rc, const PhaseVector& v, const ChannelRealization& est, double eta,
                             double P_max) {
  const ErrorModel m(rc, est);
  return {m.beamformer(est.bob(v), est.willie(v), eta, P_max)};
}

SolveReport robust_solve(const RobustCase& rc, const ChannelRealization& est, const SystemConfig& cfg,
                         const AlternatingOptions& opts) {
  est.check_shapes();
  cfg.validate();
  rc.validate();
  const double eta = covert_budget(detection_params(cfg)).eta;
  const double P_max = cfg.P_max;
  const ErrorModel m(rc, est);
  Rng rng = detail::solver_rng(cfg, 0xB0B5 + static_cast<std::uint64_t>(rc.kind));
  RobustIncumbent inc(m, cfg, eta);

  // Random initial phases.
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<double> theta(static_cast<std::size_t>(est.N()));
  for (auto& t : theta) t = angle(rng);
  PhaseVector v = PhaseVector::from_angles(theta);

  const detail::ChannelObjective value_of = [&](const CRowVector& b, const CRowVector& omega) {
    return m.bob_bound(b, m.beamformer(b, omega, eta, P_max));
  };
  auto score = [&](const PhaseVector& c) { return value_of(est.bob(c), est.willie(c)); };
  auto offer_with_beamformer = [&](const PhaseVector& c) {
    return inc.offer(c, m.beamformer(est.bob(c), est.willie(c), eta, P_max));
  };

  double previous = -std::numeric_limits<double>::infinity();
  for (int it = 1; it <= cfg.max_iters; ++it) {
    // (a) beamformer for the current phases.
    if (const auto w = beamformer_sdp_step(m, v, eta, P_max, cfg.L, rng)) inc.offer(v, *w);
    offer_with_beamformer(v);

    // (b) phases for the incumbent beamformer.
    const CVector w = inc.have() ? inc.w() : CVector(CVector::Zero(est.M()));
    const double pw = w.squaredNorm();
    if (est.N() > 0 && pw > 0.0) {
      std::optional<PhaseVector> next;
      if (opts.mode == PhaseStepMode::kJointPower) {
        const CVector u = w / std::sqrt(pw);
        const LiftedForm Rb = build_lifted_R(est.h_ab, est.g_sb, est.H_as, u);
        const LiftedForm Rw = willie_majorizer(m, u, inc.v());
        const SdpSolution s = solve_sdp(detail::joint_phase_problem(Rb, Rw, eta, P_max, pw));
        if (s.status != SdpStatus::kInfeasible) {
          const auto rr = gaussian_randomize(s.X, cfg.L, [&](const PhaseVector& c) {
            return CandidateScore{true, score(c)};
          }, rng);
          next = rr.best_feasible;
        }
      } else {
        // Shrink the beamformer until the reserved error leaves room.
        CVector ws = w;
        ShrunkBudget sb = robust_budget_shrink(rc, ws, est, eta);
        for (int h = 0; h < kMaxHalvings && sb.exhausted; ++h) {
          ws *= 0.5;
          sb = robust_budget_shrink(rc, ws, est, eta);
        }
        if (!sb.exhausted) {
          const LiftedForm R_ab = build_lifted_R(est.h_ab, est.g_sb, est.H_as, ws);
          const LiftedForm R_aw = build_lifted_R(est.h_aw, est.g_sw, est.H_as, ws);
          const SdpSolution s = solve_sdp(detail::fixed_phase_problem(R_ab, R_aw.matrix, sb.budget));
          if (s.status != SdpStatus::kInfeasible) {
            const auto rr = gaussian_randomize(s.X, cfg.L, [&](const PhaseVector& c) {
              const bool ok = willie_bound(rc, c, ws, est) <= eta * (1.0 + 1e-9);
              return CandidateScore{ok, m.bob_bound(est.bob(c), ws)};
            }, rng);
            if (rr.best_feasible) {
              inc.offer(*rr.best_feasible, ws);
              next = rr.best_feasible;
            }
          }
        }
      }
      if (next) {
        offer_with_beamformer(*next);
        if (opts.refine) offer_with_beamformer(detail::refine_phases(est, *next, value_of).phases);
      }
    }
    inc.record();
    const double current = inc.rate();
    if (std::abs(current - previous) <= cfg.gamma_tol) return inc.finish(it, SolveStatus::kConverged);
    previous = current;
    if (inc.have()) v = inc.v();
  }
  return inc.finish(cfg.max_iters, SolveStatus::kMaxIterations);
}

}  // namespace covert_irs
