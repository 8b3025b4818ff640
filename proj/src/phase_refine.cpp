// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------

#include <cmath>
#include <numbers>

#include "covert_irs/multi_antenna.hpp"
#include "solver_common.hpp"

namespace covert_irs::detail {
namespace {

constexpr int kGridPoints = 32;
constexpr int kGoldenSteps = 24;

// Maximizes f over one angle: uniform grid anchored at phi, then golden-section
// search around the grid winner. Updates phi only on strict improvement over
// f_phi and returns the best value.
template <class F>
double maximize_angle(const F& f, double& phi, double f_phi) {
  const double step = 2.0 * std::numbers::pi / kGridPoints;
  double phi_best = phi;
  double v_best = f_phi;
  for (int k = 1; k < kGridPoints; ++k) {
    const double t = phi + k * step;
    const double v = f(t);
    if (v > v_best) {
      v_best = v;
      phi_best = t;
    }
  }
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = phi_best - step, hi = phi_best + step;
  double c1 = hi - r * (hi - lo), c2 = lo + r * (hi - lo);
  double f1 = f(c1), f2 = f(c2);
  for (int k = 0; k < kGoldenSteps; ++k) {
    if (f1 >= f2) {
      hi = c2;
      c2 = c1;
      f2 = f1;
      c1 = hi - r * (hi - lo);
      f1 = f(c1);
    } else {
      lo = c1;
      c1 = c2;
      f1 = f2;
      c2 = lo + r * (hi - lo);
      f2 = f(c2);
    }
  }
  if (f1 > v_best) {
    v_best = f1;
    phi_best = c1;
  }
  if (f2 > v_best) {
    v_best = f2;
    phi_best = c2;
  }
  phi = phi_best;
  return v_best;
}

}  // namespace

double covert_gain(const CRowVector& b, const CRowVector& omega, double eta, double P_max) {
  const CVector w = optimal_beamformer(b, omega, eta, P_max).w;
  return std::norm((b * w)(0, 0));
}

RefinedPhases refine_phases(const ChannelRealization& ch, const PhaseVector& start, const ChannelObjective& objective,
                            int max_sweeps) {
  const Index N = ch.N();
  const Index M = ch.M();
  // Row i of Rb/Rw is the contribution of element i per unit conj(v_i).
  CMatrix Rb(N, M), Rw(N, M);
  for (Index i = 0; i < N; ++i) {
    Rb.row(i) = std::conj(ch.g_sb[i]) * ch.H_as.row(i);
    Rw.row(i) = std::conj(ch.g_sw[i]) * ch.H_as.row(i);
  }
  CVector x = start.values().conjugate();
  CRowVector b = ch.bob(start);
  CRowVector omega = ch.willie(start);
  double best = objective(b, omega);

  RefinedPhases out{start, best, 0};
  if (N == 0) return out;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const double at_sweep_start = best;
    for (Index i = 0; i < N; ++i) {
      const CRowVector b_rest = b - x[i] * Rb.row(i);
      const CRowVector w_rest = omega - x[i] * Rw.row(i);
      auto value = [&](double phi) {
        const cplx xi = std::polar(1.0, phi);
        return objective(b_rest + xi * Rb.row(i), w_rest + xi * Rw.row(i));
      };
      double phi_best = std::arg(x[i]);
      const double v_best = maximize_angle(value, phi_best, best);
      if (v_best > best) {
        x[i] = std::polar(1.0, phi_best);
        b = b_rest + x[i] * Rb.row(i);
        omega = w_rest + x[i] * Rw.row(i);
        best = v_best;
      }
    }
    out.sweeps = sweep + 1;
    if (best - at_sweep_start <= 1e-10 * std::abs(best)) break;
  }
  out.phases = PhaseVector(CVector(x.conjugate()));
  out.value = best;
  return out;
}

}  // namespace covert_irs::detail
