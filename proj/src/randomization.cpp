// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------

#include <Eigen/Eigenvalues>

#include "covert_irs/channel_model.hpp"
#include "covert_irs/sdp.hpp"

namespace covert_irs {
namespace {

constexpr double kRankOneRatio = 1e-8;

struct Factor {
  CMatrix F;          // X Sigma^{1/2}
  CVector principal;  // leading eigenvector scaled by sqrt(lambda_max)
  bool rank_one = false;
};

Factor factorize(const CMatrix& V) {
  const Index n = V.rows();
  if (n < 1 || V.cols() != n) throw InvalidArgument("randomization: square matrix required");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (V + V.adjoint()));
  if (es.info() != Eigen::Success) throw SolverError("randomization: eigendecomposition failed");
  const RVector lam = es.eigenvalues().cwiseMax(0.0);
  Factor f;
  const double l1 = lam[n - 1];
  const double l2 = n > 1 ? lam[n - 2] : 0.0;
  f.rank_one = n == 1 || l2 <= kRankOneRatio * l1;
  f.principal = es.eigenvectors().col(n - 1) * std::sqrt(l1);
  f.F = es.eigenvectors() * lam.cwiseSqrt().cast<cplx>().asDiagonal();
  return f;
}

CVector draw(Index n, Rng& rng) {
  CVector e(n);
  for (Index i = 0; i < n; ++i) e[i] = complex_gaussian(1.0, rng);
  return e;
}

PhaseVector dehomogenize(const CVector& c) {
  const Index N = c.size() - 1;
  const double ref = std::arg(c[N]);
  CVector v(N);
  for (Index i = 0; i < N; ++i) v[i] = std::polar(1.0, std::arg(c[i]) - ref);
  return PhaseVector(std::move(v));
}

}  // namespace

PhaseRandomization gaussian_randomize(const CMatrix& V, int L, const PhaseScorer& score, Rng& rng) {
  if (L < 1) throw InvalidArgument("gaussian_randomize: L must be >= 1");
  const Factor f = factorize(V);
  PhaseRandomization out;
  out.rank_one = f.rank_one;
  bool have_any = false;
  auto consider = [&](const PhaseVector& cand) {
    const CandidateScore s = score(cand);
    ++out.candidates;
    if (!have_any || s.value > out.best_any_value) {
      out.best_any = cand;
      out.best_any_value = s.value;
      have_any = true;
    }
    if (s.feasible && (!out.best_feasible || s.value > out.best_feasible_value)) {
      out.best_feasible = cand;
      out.best_feasible_value = s.value;
    }
  };
  if (f.rank_one) {
    consider(dehomogenize(f.principal));
    return out;
  }
  const Index n = V.rows();
  for (int l = 0; l < L; ++l) consider(dehomogenize(f.F * draw(n, rng)));
  return out;
}

VectorRandomization randomize_beamformer(const CMatrix& W, int L, const VectorScorer& score, Rng& rng) {
  if (L < 1) throw InvalidArgument("randomize_beamformer: L must be >= 1");
  const Factor f = factorize(W);
  VectorRandomization out;
  out.rank_one = f.rank_one;
  auto consider = [&](const CVector& cand) {
    const CandidateScore s = score(cand);
    ++out.candidates;
    if (s.feasible && (!out.best_feasible || s.value > out.best_feasible_value)) {
      out.best_feasible = cand;
      out.best_feasible_value = s.value;
    }
  };
  if (f.rank_one) {
    consider(f.principal);
    return out;
  }
  const Index n = W.rows();
  for (int l = 0; l < L; ++l) consider(f.F * draw(n, rng));
  return out;
}

}  // namespace covert_irs
