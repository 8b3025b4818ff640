// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------

#include "covert_irs/types.hpp"

namespace covert_irs {

PhaseVector::PhaseVector(CVector values) : v_(std::move(values)) {
  for (Index i = 0; i < v_.size(); ++i) {
    if (!(std::abs(std::abs(v_[i]) - 1.0) <= 1e-10)) {
      throw InvalidArgument("phase vector entry " + std::to_string(i) + " is not unit-modulus");
    }
  }
}

PhaseVector PhaseVector::from_angles(std::span<const double> theta) {
  PhaseVector p;
  p.v_.resize(static_cast<Index>(theta.size()));
  for (std::size_t i = 0; i < theta.size(); ++i) {
    p.v_[static_cast<Index>(i)] = std::polar(1.0, -theta[i]);
  }
  return p;
}

PhaseVector PhaseVector::ones(Index n) {
  PhaseVector p;
  p.v_ = CVector::Ones(n);
  return p;
}

PhaseVector PhaseVector::from_phases_of(const CVector& x) {
  PhaseVector p;
  p.v_.resize(x.size());
  for (Index i = 0; i < x.size(); ++i) {
    const double a = std::abs(x[i]);
    p.v_[i] = a > 0.0 ? std::polar(1.0, std::arg(x[i])) : cplx(1.0, 0.0);
  }
  return p;
}

std::vector<double> PhaseVector::angles() const {
  std::vector<double> out(static_cast<std::size_t>(v_.size()));
  for (Index i = 0; i < v_.size(); ++i) out[static_cast<std::size_t>(i)] = -std::arg(v_[i]);
  return out;
}

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kConverged:
      return "converged";
    case SolveStatus::kMaxIterations:
      return "max-iterations";
    case SolveStatus::kSinglePass:
      return "single-pass";
    case SolveStatus::kBudgetExhausted:
      return "budget-exhausted";
  }
  return "unknown";
}

}  // namespace covert_irs
