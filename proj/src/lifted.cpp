// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------

#include "covert_irs/sdp.hpp"

namespace covert_irs {

double LiftedForm::evaluate(const PhaseVector& v) const {
  const Index n = matrix.rows();
  if (v.size() + 1 != n) throw InvalidArgument("LiftedForm::evaluate: dimension mismatch");
  CVector vbar(n);
  vbar.head(n - 1) = v.values();
  vbar[n - 1] = 1.0;
  return (vbar.adjoint() * matrix * vbar)(0, 0).real() + offset;
}

CMatrix LiftedForm::homogenized() const {
  CMatrix out = matrix;
  const Index n = out.rows();
  out(n - 1, n - 1) += offset;
  return out;
}

LiftedForm build_lifted_R(const CVector& h, const CVector& g, const CMatrix& H_as, const CVector& w) {
  const Index N = g.size();
  const Index M = h.size();
  if (w.size() != M || H_as.rows() != N || (N > 0 && H_as.cols() != M)) {
    throw InvalidArgument("build_lifted_R: shape mismatch");
  }
  const cplx alpha = h.dot(w);  // h^H w
  CVector phi = CVector::Zero(N);
  if (N > 0) phi = g.conjugate().cwiseProduct(H_as * w);
  LiftedForm out;
  out.matrix = CMatrix::Zero(N + 1, N + 1);
  out.matrix.topLeftCorner(N, N) = phi * phi.adjoint();
  out.matrix.topRightCorner(N, 1) = phi * std::conj(alpha);
  out.matrix.bottomLeftCorner(1, N) = alpha * phi.adjoint();
  out.offset = std::norm(alpha);
  return out;
}

LiftedForm build_lifted_T(const CVector& h, const CVector& g, const CMatrix& H_as) {
  if (h.size() != 1) throw InvalidArgument("build_lifted_T: single-antenna shapes required");
  return build_lifted_R(h, g, H_as, CVector::Ones(1));
}

LiftedForm build_lifted_norm(const CVector& h, const CVector& g, const CMatrix& H_as) {
  const Index M = h.size();
  LiftedForm out;
  out.matrix = CMatrix::Zero(g.size() + 1, g.size() + 1);
  for (Index k = 0; k < M; ++k) {
    const LiftedForm part = build_lifted_R(h, g, H_as, CVector::Unit(M, k));
    out.matrix += part.matrix;
    out.offset += part.offset;
  }
  return out;
}

}  // namespace covert_irs
