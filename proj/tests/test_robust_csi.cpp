// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------

#include <cmath>

#include "covert_irs/detection.hpp"
#include "covert_irs/multi_antenna.hpp"
#include "covert_irs/robust_csi.hpp"
#include "covert_irs/sdp.hpp"
#include "doctest.h"

using namespace covert_irs;

namespace {

constexpr RobustKind kKinds[] = {RobustKind::kAliceWillie, RobustKind::kIrsWillie, RobustKind::kAliceIrs,
                                 RobustKind::kBoth};

SystemConfig small_system() {
  SystemConfig cfg;
  cfg.M = 3;
  cfg.N = 6;
  return cfg;
}

Geometry robust_geometry() {
  Geometry g;
  g.d_as_h = 40;
  g.d_ab_h = 60;
  g.d_aw_h = 20;
  g.h_w = 20 * std::sqrt(3.0);
  g.h_b = 20;
  g.mu_ab = g.mu_sb = 2;
  g.mu_as = g.mu_aw = g.mu_sw = 3;
  return g;
}

const CsiErrorBounds kBounds{5e-9, 5e-6, 5e-6};

CsiErrorBounds active(RobustKind k, const CsiErrorBounds& b) {
  const bool aw = k == RobustKind::kAliceWillie || k == RobustKind::kBoth;
  const bool sw = k == RobustKind::kIrsWillie || k == RobustKind::kBoth;
  const bool as = k == RobustKind::kAliceIrs;
  return {aw ? b.zeta_aw : 0.0, sw ? b.zeta_sw : 0.0, as ? b.zeta_as : 0.0};
}

PhaseVector random_phases(Index N, Rng& rng) {
  std::vector<double> theta(static_cast<std::size_t>(N));
  for (auto& a : theta) a = std::uniform_real_distribution<double>(0.0, 2.0 * M_PI)(rng);
  return PhaseVector::from_angles(theta);
}

CVector random_vector(Index M, double var, Rng& rng) {
  CVector w(M);
  for (Index i = 0; i < M; ++i) w[i] = complex_gaussian(var, rng);
  return w;
}

double min_eig(const CMatrix& X) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (X + X.adjoint()));
  return es.eigenvalues()[0];
}

}  // namespace

TEST_CASE("zero error bound gives the nominal Willie matrix") {
  const SystemConfig cfg = small_system();
  Rng rng(1);
  const ChannelRealization ch = sample_channels(cfg, robust_geometry(), rng);
  const PhaseVector v = random_phases(cfg.N, rng);
  const CRowVector om = ch.willie(v);
  const CMatrix nominal = om.adjoint() * om;
  for (RobustKind k : kKinds) {
    CAPTURE(to_string(k));
    const RobustCase zero{k, CsiErrorBounds{}};
    CHECK((robust_willie_matrix(zero, v, ch) - nominal).norm() <= 1e-14 * nominal.norm());
    const RobustCase rc{k, kBounds};
    CHECK(min_eig(robust_willie_matrix(rc, v, ch) - nominal) >= -1e-12 * nominal.norm());
  }
}

TEST_CASE("Willie certificates dominate sampled channel errors") {
  const SystemConfig cfg = small_system();
  Rng rng(2);
  const ChannelRealization ch = sample_channels(cfg, robust_geometry(), rng);
  for (RobustKind k : kKinds) {
    CAPTURE(to_string(k));
    const RobustCase rc{k, kBounds};
    for (int t = 0; t < 5; ++t) {
      const PhaseVector v = random_phases(cfg.N, rng);
      const CVector w = random_vector(cfg.M, 1e-3, rng);
      const CMatrix U = robust_willie_matrix(rc, v, ch);
      const double matrix_bound = (w.adjoint() * U * w)(0, 0).real();
      const double tight = willie_bound(rc, v, w, ch);
      const double bob = bob_gain_bound(rc, v, w, ch);
      int violations = 0;
      for (int s = 0; s < 2000; ++s) {
        const ChannelRealization truth = perturb_csi(ch, active(k, kBounds), rng);
        const double p = std::norm((truth.willie(v) * w)(0, 0));
        if (p > matrix_bound * (1 + 1e-9) || p > tight * (1 + 1e-9)) ++violations;
        if (std::norm((truth.bob(v) * w)(0, 0)) < bob * (1 - 1e-9)) ++violations;
      }
      CHECK(violations == 0);
    }
  }
}

TEST_CASE("shrunk budget") {
  const SystemConfig cfg = small_system();
  const double eta = covert_budget(detection_params(cfg)).eta;
  Rng rng(3);
  const ChannelRealization ch = sample_channels(cfg, robust_geometry(), rng);
  const CVector w = random_vector(cfg.M, 1e-4, rng);
  const double beta2 = std::norm(ch.h_aw.dot(w));

  const ShrunkBudget zero = robust_budget_shrink({RobustKind::kAliceWillie, CsiErrorBounds{}}, w, ch, eta);
  CHECK(zero.budget == doctest::Approx(eta - beta2).epsilon(1e-12));
  CHECK_FALSE(zero.exhausted);

  // Error alone can reach the full budget.
  const double z = 2.0 * std::sqrt(eta) / w.norm();
  const ShrunkBudget gone = robust_budget_shrink({RobustKind::kAliceWillie, {z, 0.0, 0.0}}, w, ch, eta);
  CHECK(gone.exhausted);

  for (RobustKind k : kKinds) {
    const ShrunkBudget a = robust_budget_shrink({k, CsiErrorBounds{}}, w, ch, eta);
    const ShrunkBudget b = robust_budget_shrink({k, kBounds}, w, ch, eta);
    CHECK(b.budget <= a.budget);
  }
}

TEST_CASE("robust beamformer matches the robust beamforming SDP") {
  const SystemConfig cfg = small_system();
  const double eta = covert_budget(detection_params(cfg)).eta;
  Rng rng(4);
  for (RobustKind k : {RobustKind::kAliceWillie, RobustKind::kIrsWillie, RobustKind::kBoth}) {
    CAPTURE(to_string(k));
    const RobustCase rc{k, kBounds};
    for (int t = 0; t < 3; ++t) {
      const ChannelRealization ch = sample_channels(cfg, robust_geometry(), rng);
      const PhaseVector v = random_phases(cfg.N, rng);
      const CRowVector b = ch.bob(v);
      const CMatrix U = robust_willie_matrix(rc, v, ch);
      SdpProblem p;
      p.objective = b.adjoint() * b / b.squaredNorm();
      p.ineq_constraints.push_back({CMatrix::Identity(cfg.M, cfg.M), 1.0});
      p.ineq_constraints.push_back({U * (cfg.P_max / eta), 1.0});
      const SdpSolution s = solve_sdp(p);
      REQUIRE(s.status == SdpStatus::kOptimal);
      const double ref = s.objective_value * b.squaredNorm() * cfg.P_max;

      const Beamformer w = robust_beamformer(rc, v, ch, eta, cfg.P_max);
      const double got = std::norm((b * w.w)(0, 0));
      CHECK(got >= ref * (1 - 1e-4));
      CHECK(willie_bound(rc, v, w.w, ch) <= eta * (1 + 1e-6));
      CHECK(w.power() <= cfg.P_max * (1 + 1e-10));
    }
  }
}

TEST_CASE("robust solve is sound and never beats perfect CSI") {
  SystemConfig cfg = small_system();
  const double eta = covert_budget(detection_params(cfg)).eta;
  Rng rng(5);
  for (int t = 0; t < 2; ++t) {
    cfg.seed = static_cast<std::uint64_t>(t);
    const ChannelRealization ch = sample_channels(cfg, robust_geometry(), rng);
    const SolveReport perfect = alternating_optimal_solve(ch, cfg);
    for (RobustKind k : kKinds) {
      CAPTURE(to_string(k));
      const RobustCase rc{k, kBounds};
      const SolveReport r = robust_solve(rc, ch, cfg);
      REQUIRE(r.willie_bound);
      CHECK(*r.willie_bound <= eta * (1 + 1e-6));
      CHECK(r.rate <= perfect.rate + 1e-9);
      for (std::size_t i = 1; i < r.rate_trajectory.size(); ++i) {
        CHECK(r.rate_trajectory[i] >= r.rate_trajectory[i - 1] - 1e-9);
      }
      int violations = 0;
      for (int s = 0; s < 2000; ++s) {
        const ChannelRealization truth = perturb_csi(ch, active(k, kBounds), rng);
        if (std::norm((truth.willie(r.phases) * r.beamformer)(0, 0)) > eta * (1 + 1e-6)) ++violations;
      }
      CHECK(violations == 0);
    }
  }
}

TEST_CASE("robust solve with zero error tracks the perfect-CSI solver") {
  SystemConfig cfg = small_system();
  Rng rng(6);
  const ChannelRealization ch = sample_channels(cfg, robust_geometry(), rng);
  const SolveReport perfect = alternating_optimal_solve(ch, cfg);
  for (RobustKind k : kKinds) {
    const SolveReport r = robust_solve({k, CsiErrorBounds{}}, ch, cfg);
    CHECK(r.rate >= 0.99 * perfect.rate);
  }
}

TEST_CASE("robust solve options and validation") {
  SystemConfig cfg = small_system();
  const double eta = covert_budget(detection_params(cfg)).eta;
  Rng rng(7);
  const ChannelRealization ch = sample_channels(cfg, robust_geometry(), rng);
  const SolveReport r = robust_solve({RobustKind::kBoth, kBounds}, ch, cfg, {PhaseStepMode::kFixedPower, false});
  REQUIRE(r.willie_bound);
  CHECK(*r.willie_bound <= eta * (1 + 1e-6));
  CHECK_THROWS_AS(robust_solve({RobustKind::kIrsWillie, {0.0, -1.0, 0.0}}, ch, cfg), ConfigError);
  CHECK_THROWS_AS(RobustCase({RobustKind::kAliceWillie, {-1.0, 0.0, 0.0}}).validate(), ConfigError);
}
