// Copyright (c) 2026 the rfopt authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "rfopt/objective.hpp"

#include <cmath>

namespace rfopt {

double ObjectiveValue::grad_norm() const {
  return std::sqrt(grad_w.squaredNorm() + grad_gamma.squaredNorm());
}

namespace detail {

void check_domain(const std::vector<cplx>& poles) {
  for (cplx w : poles) {
    if (!(w.real() > 0.0) || !(w.imag() > 0.0))
      throw DomainEscape("pole left the first quadrant");
    if (std::abs(w) > 1e6) throw DomainEscape("pole magnitude exceeds 1e6");
    if (w.imag() < 1e-14) throw DomainEscape("pole too close to the real axis");
  }
}

namespace {

Eigen::Map<const VectorXcd> as_vec(const std::vector<cplx>& v) {
  return Eigen::Map<const VectorXcd>(v.data(), static_cast<long>(v.size()));
}

double level_from_system(const AssembledSystem& s, const VectorXcd& g) {
  const cplx xq = g.adjoint() * s.X * g;
  const cplx wq = g.adjoint() * s.W * g.conjugate();
  const cplx yq = g.adjoint() * s.Y * g.conjugate();
  const cplx zq = g.adjoint() * s.Z * g;
  const cplx th = s.theta.adjoint() * g;
  const cplx tp = s.theta_pty.transpose() * g;
  return 2.0 * xq.real() + 2.0 * wq.real() - 2.0 * yq.real() - 2.0 * zq.real() -
         2.0 * th.real() + 2.0 * tp.real() + 0.5 * s.h_norm_sq;
}

double penalty_level(const std::vector<cplx>& poles, const std::vector<cplx>& coeffs,
                     double c) {
  double fp1 = 0.0;
  for (size_t k = 0; k < poles.size(); ++k) {
    const cplx dm = 1.0 - poles[k];
    const cplx dp = 1.0 + poles[k];
    fp1 += -2.0 * (coeffs[k] / (dm * dm)).real() + 2.0 * (coeffs[k] / (dp * dp)).real();
  }
  return c * fp1;
}

}  // namespace

double residual_level_raw(const std::vector<cplx>& poles, const std::vector<cplx>& coeffs,
                          const WeightFunction& w, double penalty_c) {
  check_domain(poles);
  const AssembledSystem s = assemble(poles, w);
  double level = level_from_system(s, as_vec(coeffs));
  if (penalty_c != 0.0) level += penalty_level(poles, coeffs, penalty_c);
  return level;
}

ObjectiveValue gradient_raw(const std::vector<cplx>& poles, const std::vector<cplx>& coeffs,
                            const WeightFunction& w, double penalty_c) {
  check_domain(poles);
  const int q = static_cast<int>(poles.size());
  const AssembledSystem s = assemble(poles, w);
  const GradientSystem gs = assemble_grad(poles, w);
  const VectorXcd g = as_vec(coeffs);

  ObjectiveValue out;
  out.value = level_from_system(s, g);

  // Row vectors gH * M + gT * N entering both gradient components.
  const VectorXcd row_w =
      ((g.adjoint() * (gs.gX - gs.gZ)) + (g.transpose() * (gs.gWbar - gs.gYbar)))
          .transpose();
  const VectorXcd row_g =
      ((g.adjoint() * (s.X - s.Z)) + (g.transpose() * (s.W.conjugate() - s.Y.conjugate())))
          .transpose();

  out.grad_w.resize(q);
  out.grad_gamma.resize(q);
  for (int k = 0; k < q; ++k) {
    // The conjugated CP gradient rows are exactly the packed real-coordinate
    // gradient of the (1/2)||h-f||^2 level.
    const cplx row_w_k = 4.0 * (row_w(k) - gs.gtheta(k)) * g(k);
    const cplx row_g_k = 4.0 * (row_g(k) - std::conj(s.theta(k)));
    out.grad_w(k) = std::conj(row_w_k);
    out.grad_gamma(k) = std::conj(row_g_k);
  }

  if (penalty_c != 0.0) {
    out.value += penalty_level(poles, coeffs, penalty_c);
    for (int k = 0; k < q; ++k) {
      const cplx dm = 1.0 - poles[k];
      const cplx dp = 1.0 + poles[k];
      const cplx dfp_dw = -2.0 * coeffs[k] * (1.0 / (dm * dm * dm) + 1.0 / (dp * dp * dp));
      const cplx dfp_dg = -1.0 / (dm * dm) + 1.0 / (dp * dp);
      out.grad_w(k) += 2.0 * penalty_c * std::conj(dfp_dw);
      out.grad_gamma(k) += 2.0 * penalty_c * std::conj(dfp_dg);
    }
  }
  return out;
}

}  // namespace detail

double residual_level(const CPFilter& f, const WeightFunction& w) {
  return detail::residual_level_raw(f.poles(), f.coeffs(), w, 0.0);
}

double residual_level_oracle(const CPFilter& f, const WeightFunction& w) {
  const FullFilter full = expand_cp(f);
  const int n = full.n();
  MatrixXcd G(n, n);
  VectorXcd eta(n);
  for (int i = 0; i < n; ++i) {
    const cplx ci = std::conj(full.poles[i]);
    for (int j = 0; j < n; ++j) G(i, j) = weighted_pair(w, ci, full.poles[j]);
    eta(i) = weighted_lin(w, ci, true);
  }
  const VectorXcd a = Eigen::Map<const VectorXcd>(full.coeffs.data(), n);
  const cplx quad = a.adjoint() * G * a;
  const cplx lin = eta.adjoint() * a;
  return quad.real() - 2.0 * lin.real() + h_norm_sq(w);
}

ObjectiveValue gradient(const CPFilter& f, const WeightFunction& w) {
  return detail::gradient_raw(f.poles(), f.coeffs(), w, 0.0);
}

double steepness(const CPFilter& f) { return eval_derivative(f, 1.0); }

PenaltyValue penalty(const CPFilter& f, const PenaltyConfig& cfg) {
  const int q = f.q();
  PenaltyValue out;
  out.grad_w = VectorXcd::Zero(q);
  out.grad_gamma = VectorXcd::Zero(q);
  if (cfg.c == 0.0) return out;
  out.value = cfg.c * steepness(f);
  for (int k = 0; k < q; ++k) {
    const cplx dm = 1.0 - f.poles()[k];
    const cplx dp = 1.0 + f.poles()[k];
    const cplx dfp_dw =
        -2.0 * f.coeffs()[k] * (1.0 / (dm * dm * dm) + 1.0 / (dp * dp * dp));
    const cplx dfp_dg = -1.0 / (dm * dm) + 1.0 / (dp * dp);
    out.grad_w(k) = 2.0 * cfg.c * std::conj(dfp_dw);
    out.grad_gamma(k) = 2.0 * cfg.c * std::conj(dfp_dg);
  }
  return out;
}

}  // namespace rfopt
