// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------

#include <cmath>
#include <limits>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "covert_irs/sdp.hpp"

namespace covert_irs {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

CMatrix hermitian_part(const CMatrix& A) { return 0.5 * (A + A.adjoint()); }

double inner(const CMatrix& A, const CMatrix& B) { return (A.conjugate().cwiseProduct(B)).sum().real(); }

bool is_real_diagonal(const CMatrix& A) {
  for (Index j = 0; j < A.cols(); ++j) {
    for (Index i = 0; i < A.rows(); ++i) {
      if (i != j && A(i, j) != cplx(0.0, 0.0)) return false;
    }
    if (A(j, j).imag() != 0.0) return false;
  }
  return true;
}

// Linear map X -> (<A_k, X>)_k with diagonal rows stored as columns of a real
// matrix so the Schur complement of diagonal/diagonal pairs is a single GEMM.
class ConstraintMap {
 public:
  explicit ConstraintMap(Index n) : n_(n) {}

  void add(const CMatrix& A) {
    if (is_real_diagonal(A)) {
      kind_.push_back({true, static_cast<Index>(diag_.size())});
      diag_.push_back(A.diagonal().real());
    } else {
      kind_.push_back({false, static_cast<Index>(dense_.size())});
      dense_.push_back(A);
    }
  }

  void finalize() {
    D_.resize(n_, static_cast<Index>(diag_.size()));
    for (std::size_t j = 0; j < diag_.size(); ++j) D_.col(static_cast<Index>(j)) = diag_[j];
    diag_rows_.clear();
    dense_rows_.clear();
    for (std::size_t k = 0; k < kind_.size(); ++k) {
      (kind_[k].diag ? diag_rows_ : dense_rows_).push_back(static_cast<Index>(k));
    }
  }

  Index rows() const { return static_cast<Index>(kind_.size()); }

  void scale_row(Index k, double s) {
    const auto& kd = kind_[static_cast<std::size_t>(k)];
    if (kd.diag) {
      diag_[static_cast<std::size_t>(kd.idx)] *= s;
    } else {
      dense_[static_cast<std::size_t>(kd.idx)] *= s;
    }
  }

  double row_norm_sq(Index k) const {
    const auto& kd = kind_[static_cast<std::size_t>(k)];
    return kd.diag ? diag_[static_cast<std::size_t>(kd.idx)].squaredNorm()
                   : dense_[static_cast<std::size_t>(kd.idx)].squaredNorm();
  }

  RVector apply(const CMatrix& X) const {
    RVector out(rows());
    const RVector xd = X.diagonal().real();
    if (!diag_rows_.empty()) {
      const RVector t = D_.transpose() * xd;
      for (std::size_t j = 0; j < diag_rows_.size(); ++j) out[diag_rows_[j]] = t[static_cast<Index>(j)];
    }
    for (std::size_t j = 0; j < dense_rows_.size(); ++j) out[dense_rows_[j]] = inner(dense_[j], X);
    return out;
  }

  CMatrix adjoint(const RVector& y) const {
    CMatrix S = CMatrix::Zero(n_, n_);
    if (!diag_rows_.empty()) {
      RVector yd(static_cast<Index>(diag_rows_.size()));
      for (std::size_t j = 0; j < diag_rows_.size(); ++j) yd[static_cast<Index>(j)] = y[diag_rows_[j]];
      S.diagonal() += (D_ * yd).cast<cplx>();
    }
    for (std::size_t j = 0; j < dense_rows_.size(); ++j) S += y[dense_rows_[j]] * dense_[j];
    return S;
  }

  // M_ij = <A_i, W A_j W>
  RMatrix schur(const CMatrix& W) const {
    const Index m = rows();
    RMatrix M(m, m);
    if (!diag_rows_.empty()) {
      const RMatrix Q = W.cwiseAbs2();
      const RMatrix block = D_.transpose() * Q * D_;
      for (std::size_t a = 0; a < diag_rows_.size(); ++a) {
        for (std::size_t b = 0; b < diag_rows_.size(); ++b) {
          M(diag_rows_[a], diag_rows_[b]) = block(static_cast<Index>(a), static_cast<Index>(b));
        }
      }
    }
    for (std::size_t j = 0; j < dense_rows_.size(); ++j) {
      const CMatrix P = W * dense_[j] * W;
      const RVector pd = P.diagonal().real();
      for (std::size_t a = 0; a < diag_rows_.size(); ++a) {
        const double v = D_.col(static_cast<Index>(a)).dot(pd);
        M(diag_rows_[a], dense_rows_[j]) = v;
        M(dense_rows_[j], diag_rows_[a]) = v;
      }
      for (std::size_t i = 0; i <= j; ++i) {
        const double v = inner(dense_[i], P);
        M(dense_rows_[i], dense_rows_[j]) = v;
        M(dense_rows_[j], dense_rows_[i]) = v;
      }
    }
    return M;
  }

 private:
  struct Kind {
    bool diag;
    Index idx;
  };
  Index n_;
  std::vector<Kind> kind_;
  std::vector<RVector> diag_;
  std::vector<CMatrix> dense_;
  RMatrix D_;
  std::vector<Index> diag_rows_;
  std::vector<Index> dense_rows_;
};

// min <C,X> + c'x  s.t.  A(X) + B x = b,  X >= 0, x >= 0.
struct StandardForm {
  Index n = 0;
  ConstraintMap A{0};
  RMatrix B;  // m x q
  RVector b;
  CMatrix C;
  RVector c;
};

struct IpmResult {
  CMatrix X;
  RVector x;
  RVector y;
  double pinf = kInf;
  double dinf = kInf;
  double gap = kInf;
  double pobj = 0.0;
  double dobj = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Largest alpha with I + alpha * Linv dM Linv^H >= 0, given the Cholesky
// factor of the current iterate.
double max_step_psd(const Eigen::LLT<CMatrix>& chol, const CMatrix& dM) {
  CMatrix T = chol.matrixL().solve(dM);
  T = chol.matrixL().solve(T.adjoint().eval());
  T = hermitian_part(T);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(T, Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues().minCoeff();
  return lmin < 0.0 ? -1.0 / lmin : kInf;
}

double max_step_lp(const RVector& x, const RVector& dx) {
  double a = kInf;
  for (Index i = 0; i < x.size(); ++i) {
    if (dx[i] < 0.0) a = std::min(a, -x[i] / dx[i]);
  }
  return a;
}

constexpr int kStallAcceptable = 5;
constexpr int kStallAny = 30;

IpmResult interior_point(const StandardForm& P, const SdpOptions& opt, double accept_gap, double accept_res) {
  const Index n = P.n;
  const Index m = P.A.rows();
  const Index q = P.B.cols();
  const double nu = static_cast<double>(n + q);
  const double normb = P.b.norm();
  const double normC = std::sqrt(P.C.squaredNorm() + P.c.squaredNorm());

  double xi0 = std::max(10.0, std::sqrt(static_cast<double>(n)));
  for (Index k = 0; k < m; ++k) xi0 = std::max(xi0, std::sqrt(static_cast<double>(n)) * (1.0 + std::abs(P.b[k])));
  const double eta0 = std::max({10.0, std::sqrt(static_cast<double>(n)), normC});

  CMatrix X = xi0 * CMatrix::Identity(n, n);
  RVector x = RVector::Constant(q, xi0);
  RVector y = RVector::Zero(m);
  CMatrix Z = eta0 * CMatrix::Identity(n, n);
  RVector z = RVector::Constant(q, eta0);

  IpmResult best;
  double best_merit = kInf;
  int stall = 0;

  for (int iter = 0; iter <= opt.max_iterations; ++iter) {
    const RVector rp = P.b - P.A.apply(X) - P.B * x;
    const CMatrix Rd = hermitian_part(P.C - P.A.adjoint(y) - Z);
    const RVector rd = P.c - P.B.transpose() * y - z;
    const double pobj = inner(P.C, X) + P.c.dot(x);
    const double dobj = P.b.dot(y);
    const double compl_ = inner(X, Z) + x.dot(z);
    const double denom = 1.0 + std::abs(pobj) + std::abs(dobj);
    const double pinf = rp.norm() / (1.0 + normb);
    const double dinf = std::sqrt(Rd.squaredNorm() + rd.squaredNorm()) / (1.0 + normC);
    const double gap = std::max(std::abs(compl_), std::abs(pobj - dobj)) / denom;

    const double merit = std::max({pinf, dinf, gap});
    if (merit < best_merit) {
      best_merit = merit;
      best = {X, x, y, pinf, dinf, gap, pobj, dobj, iter, false};
    }
    // Past the attainable accuracy the iterates drift; stop once the best
    // point has not improved for a while.
    const bool acceptable = best.pinf <= accept_res && best.dinf <= accept_res && best.gap <= accept_gap;
    if (iter - best.iterations >= (acceptable ? kStallAcceptable : kStallAny)) break;
    if (pinf <= opt.tolerance && dinf <= opt.tolerance && gap <= opt.tolerance) {
      best = {X, x, y, pinf, dinf, gap, pobj, dobj, iter, true};
      return best;
    }
    if (iter == opt.max_iterations) break;

    const double mu = compl_ / nu;

    // Nesterov-Todd scaling: X = L L^H, L^H Z L = U S^2 U^H, G = L U S^{-1/2}.
    Eigen::LLT<CMatrix> cholX(X);
    Eigen::LLT<CMatrix> cholZ(Z);
    if (cholX.info() != Eigen::Success || cholZ.info() != Eigen::Success) break;
    const CMatrix Lx = cholX.matrixL();
    const CMatrix K = hermitian_part(Lx.adjoint() * Z * Lx);
    Eigen::SelfAdjointEigenSolver<CMatrix> esK(K);
    if (esK.info() != Eigen::Success || esK.eigenvalues().minCoeff() <= 0.0) break;
    const RVector s = esK.eigenvalues().cwiseSqrt();
    const CMatrix G = Lx * esK.eigenvectors() * s.cwiseInverse().cwiseSqrt().cast<cplx>().asDiagonal();
    const CMatrix W = hermitian_part(G * G.adjoint());
    // G^{-1} = S^{1/2} U^H L^{-1}
    auto scale_primal = [&](const CMatrix& dX) {
      CMatrix T = cholX.matrixL().solve(dX);
      T = cholX.matrixL().solve(T.adjoint().eval()).adjoint();
      const CMatrix U = esK.eigenvectors();
      const RVector sh = s.cwiseSqrt();
      return CMatrix(sh.cast<cplx>().asDiagonal() * (U.adjoint() * T * U) * sh.cast<cplx>().asDiagonal());
    };
    auto scale_dual = [&](const CMatrix& dZ) { return CMatrix(G.adjoint() * dZ * G); };

    const RVector D = x.cwiseQuotient(z);
    RMatrix M = P.A.schur(W);
    if (q > 0) M += P.B * D.asDiagonal() * P.B.transpose();
    M = 0.5 * (M + M.transpose());
    Eigen::LDLT<RMatrix> ldlt(M);
    if (ldlt.info() != Eigen::Success) break;

    const CMatrix WRdW = W * Rd * W;
    auto newton = [&](const CMatrix& Rc, const RVector& rc, CMatrix& dX, RVector& dx, RVector& dy, CMatrix& dZ,
                      RVector& dz) {
      RVector rhs = rp - P.A.apply(Rc - WRdW);
      if (q > 0) rhs -= P.B * (rc - D.cwiseProduct(rd));
      dy = ldlt.solve(rhs);
      dZ = hermitian_part(Rd - P.A.adjoint(dy));
      dX = hermitian_part(Rc - W * dZ * W);
      dz = rd - P.B.transpose() * dy;
      dx = rc - D.cwiseProduct(dz);
    };

    auto steps = [&](const CMatrix& dX, const RVector& dx, const CMatrix& dZ, const RVector& dz) {
      const double ap = std::min(max_step_psd(cholX, dX), max_step_lp(x, dx));
      const double ad = std::min(max_step_psd(cholZ, dZ), max_step_lp(z, dz));
      return std::pair<double, double>{ap, ad};
    };

    // Predictor.
    CMatrix dXa, dZa;
    RVector dxa, dya, dza;
    newton(-X, -x, dXa, dxa, dya, dZa, dza);
    auto [apa, ada] = steps(dXa, dxa, dZa, dza);
    apa = std::min(1.0, apa);
    ada = std::min(1.0, ada);
    const double mu_aff =
        (inner(X + apa * dXa, Z + ada * dZa) + (x + apa * dxa).dot(z + ada * dza)) / nu;
    const double sigma = std::clamp(std::pow(std::max(mu_aff, 0.0) / mu, 3.0), 0.0, 1.0);

    // Corrector.
    const CMatrix dXh = scale_primal(dXa);
    const CMatrix dZh = scale_dual(dZa);
    CMatrix rhs_h = -(dXh * dZh + dZh * dXh);
    for (Index i = 0; i < n; ++i) rhs_h(i, i) += 2.0 * sigma * mu - 2.0 * s[i] * s[i];
    for (Index j = 0; j < n; ++j) {
      for (Index i = 0; i < n; ++i) rhs_h(i, j) /= (s[i] + s[j]);
    }
    const CMatrix Rc = hermitian_part(G * rhs_h * G.adjoint());
    RVector rc(q);
    for (Index i = 0; i < q; ++i) rc[i] = (sigma * mu - x[i] * z[i] - dxa[i] * dza[i]) / z[i];

    CMatrix dX, dZ;
    RVector dx, dy, dz;
    newton(Rc, rc, dX, dx, dy, dZ, dz);
    auto [ap, ad] = steps(dX, dx, dZ, dz);
    const double tau = 0.98;
    ap = std::min(1.0, tau * ap);
    ad = std::min(1.0, tau * ad);

    if (ap < 1e-10 && ad < 1e-10) {
      if (++stall >= 3) break;
    } else {
      stall = 0;
    }

    X = hermitian_part(X + ap * dX);
    x += ap * dx;
    y += ad * dy;
    Z = hermitian_part(Z + ad * dZ);
    z += ad * dz;
  }

  best.converged = best.pinf <= accept_res && best.dinf <= accept_res && best.gap <= accept_gap;
  return best;
}

void check_hermitian(const CMatrix& A, Index n, const char* what) {
  if (A.rows() != n || A.cols() != n) throw InvalidArgument(std::string("solve_sdp: ") + what + " has wrong shape");
  if (!A.allFinite()) throw InvalidArgument(std::string("solve_sdp: ") + what + " has non-finite entries");
  const double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
  if ((A - A.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw InvalidArgument(std::string("solve_sdp: ") + what + " is not Hermitian");
  }
}

struct Row {
  CMatrix A;
  double b;
  bool equality;
};

// Builds the normalized standard form. Phase I replaces the objective with
// min t + sum(p + q): inequality rows get a shared elastic variable t and each
// equality row a pair of elastic variables.
StandardForm build_standard_form(Index n, const std::vector<Row>& rows, const CMatrix& C, bool phase_one) {
  StandardForm F;
  F.n = n;
  F.A = ConstraintMap(n);
  const Index m = static_cast<Index>(rows.size());
  Index n_ineq = 0, n_eq = 0;
  for (const auto& r : rows) (r.equality ? n_eq : n_ineq)++;
  const Index q = n_ineq + (phase_one ? (n_ineq > 0 ? 1 : 0) + 2 * n_eq : 0);
  F.B = RMatrix::Zero(m, q);
  F.b.resize(m);
  F.c = RVector::Zero(q);
  Index slack = 0;
  const Index t_col = n_ineq;
  Index pair_col = n_ineq + (n_ineq > 0 ? 1 : 0);
  for (Index k = 0; k < m; ++k) {
    const Row& r = rows[static_cast<std::size_t>(k)];
    F.A.add(hermitian_part(r.A));
    F.b[k] = r.b;
    if (!r.equality) {
      F.B(k, slack++) = 1.0;
      if (phase_one) F.B(k, t_col) = -1.0;
    } else if (phase_one) {
      F.B(k, pair_col) = 1.0;
      F.B(k, pair_col + 1) = -1.0;
      pair_col += 2;
    }
  }
  if (phase_one) {
    F.C = CMatrix::Zero(n, n);
    for (Index j = n_ineq; j < q; ++j) F.c[j] = 1.0;
  } else {
    F.C = C;
  }
  // Row normalization.
  for (Index k = 0; k < m; ++k) {
    const double nk = std::sqrt(F.A.row_norm_sq(k) + F.B.row(k).squaredNorm());
    if (nk > 0.0) {
      F.A.scale_row(k, 1.0 / nk);
      F.B.row(k) /= nk;
      F.b[k] /= nk;
    }
  }
  F.A.finalize();
  return F;
}

}  // namespace

const char* to_string(SdpStatus s) {
  switch (s) {
    case SdpStatus::kOptimal:
      return "optimal";
    case SdpStatus::kInfeasible:
      return "infeasible";
    case SdpStatus::kMaxIterations:
      return "max-iterations";
  }
  return "unknown";
}

SdpSolution solve_sdp(const SdpProblem& problem, const SdpOptions& options) {
  const Index n = problem.objective.rows();
  if (n < 1) throw InvalidArgument("solve_sdp: empty objective");
  check_hermitian(problem.objective, n, "objective");

  std::vector<Row> rows;
  bool trivially_infeasible = false;
  auto push = [&](const CMatrix& A, double b, bool eq) {
    if (!std::isfinite(b)) throw InvalidArgument("solve_sdp: non-finite bound");
    if (A.squaredNorm() == 0.0) {
      // 0 <= b or 0 == b: either vacuous or impossible.
      if (eq ? b != 0.0 : b < 0.0) trivially_infeasible = true;
      return;
    }
    rows.push_back({A, b, eq});
  };
  for (const auto& c : problem.ineq_constraints) {
    check_hermitian(c.A, n, "inequality constraint");
    push(c.A, c.b, false);
  }
  for (const auto& c : problem.eq_constraints) {
    check_hermitian(c.A, n, "equality constraint");
    push(c.A, c.b, true);
  }
  if (problem.unit_diagonal) {
    for (Index i = 0; i < n; ++i) {
      CMatrix E = CMatrix::Zero(n, n);
      E(i, i) = 1.0;
      rows.push_back({E, 1.0, true});
    }
  }

  SdpSolution sol;
  if (trivially_infeasible) {
    sol.X = CMatrix::Zero(n, n);
    sol.status = SdpStatus::kInfeasible;
    return sol;
  }

  const double cnorm = problem.objective.norm();
  const CMatrix C = cnorm > 0.0 ? CMatrix(-problem.objective / cnorm) : CMatrix(CMatrix::Zero(n, n));
  const StandardForm F = build_standard_form(n, rows, C, false);
  const IpmResult r = interior_point(F, options, 1e-6, 1e-7);

  // Residuals against the caller's (unnormalized) constraints.
  auto residual = [&](const CMatrix& X) {
    double worst = 0.0;
    for (const auto& row : rows) {
      const double val = inner(hermitian_part(row.A), X);
      const double viol = row.equality ? std::abs(val - row.b) : std::max(0.0, val - row.b);
      worst = std::max(worst, viol / (1.0 + std::abs(row.b) + row.A.norm() * X.norm()));
    }
    return worst;
  };

  sol.X = hermitian_part(r.X);
  sol.iterations = r.iterations;
  sol.objective_value = inner(problem.objective, sol.X);
  sol.duality_gap = r.gap;
  sol.primal_residual = residual(sol.X);
  if (r.converged) {
    sol.status = SdpStatus::kOptimal;
    return sol;
  }

  // Not converged: decide between infeasibility and a numerical stall.
  const StandardForm F1 = build_standard_form(n, rows, C, true);
  const IpmResult r1 = interior_point(F1, options, 1e-6, 1e-7);
  if (r1.converged && r1.pobj > 1e-7) {
    sol.status = SdpStatus::kInfeasible;
  } else {
    sol.status = SdpStatus::kMaxIterations;
  }
  return sol;
}

}  // namespace covert_irs
