// Copyright (c) 2026 the rfopt authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "rfopt/errors.hpp"
#include "rfopt/weights.hpp"

namespace rfopt {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

// Closed forms of the definite integrals over a real segment [a,b] with
// poles off the real axis. Logarithms are evaluated as differences of
// principal logs, which is branch-safe here: Im(t - omega) has constant
// sign along the segment.

// int_a^b dt / (t - w)
cplx int_lin(cplx w, double a, double b);
// int_a^b dt / (t - w)^2
cplx int_sq(cplx w, double a, double b);
// int_a^b dt / ((t - w1)(t - w2)); dispatches to int_sq near confluence
cplx int_pair(cplx w1, cplx w2, double a, double b);
// int_a^b dt / ((t - w1)^2 (t - w2)); dispatches to int_cube near confluence
cplx int_sq_lin(cplx w1, cplx w2, double a, double b);
// int_a^b dt / (t - w)^3
cplx int_cube(cplx w, double a, double b);
// int_a^b dt / ((t - w1)^2 (t - w2)^2); dispatches to int_quart near confluence
cplx int_sq_sq(cplx w1, cplx w2, double a, double b);
// int_a^b dt / (t - w)^4
cplx int_quart(cplx w, double a, double b);

// Weighted sums of the kernels over the pieces of an even weight function.
// Each positive piece [lo,hi) is accumulated together with its mirror
// [-hi,-lo). `restrict_to_indicator` clips pieces to [-1,1].
cplx weighted_lin(const WeightFunction& w, cplx pole, bool restrict_to_indicator);
cplx weighted_pair(const WeightFunction& w, cplx w1, cplx w2);
cplx weighted_sq_lin(const WeightFunction& w, cplx w1, cplx w2);
cplx weighted_sq(const WeightFunction& w, cplx pole, bool restrict_to_indicator);
cplx weighted_sq_sq(const WeightFunction& w, cplx w1, cplx w2);

// Matrices of the residual level function in the CP parameterization.
//   X_kl = <1/(t-w_k), 1/(t-w_l)>      W_kl = int G /((t-cw_k)(t-cw_l))
//   Y_kl = int G /((t-cw_k)(t+cw_l))   Z_kl = int G /((t-cw_k)(t+w_l))
//   theta_k = int_{-1}^{1} G /(t-cw_k），theta_pty_k = int_{-1}^{1} G /(t+w_k)
// with cw = conj(w). X and Z are Hermitian, W and Y complex symmetric.
struct AssembledSystem {
  MatrixXcd X, Y, W, Z;
  VectorXcd theta, theta_pty;
  double h_norm_sq = 0.0;
};

// Gradient matrices: gX_kl = int G /((t-cw_k)(t-w_l)^2), gZ with +w_l and a
// leading minus, gWbar with (w_k, w_l), gYbar with (w_k, -w_l) and a minus;
// gtheta_k = int_{-1}^{1} G /(t-w_k)^2.
struct GradientSystem {
  MatrixXcd gX, gZ, gWbar, gYbar;
  VectorXcd gtheta;
};

// Gauss-Newton second-derivative matrices built from the quartic kernels.
struct HessianSystem {
  MatrixXcd ggWbar, ggYbar, ggX, ggZ;
};

AssembledSystem assemble(const std::vector<cplx>& poles, const WeightFunction& w);
GradientSystem assemble_grad(const std::vector<cplx>& poles, const WeightFunction& w);
HessianSystem assemble_hess(const std::vector<cplx>& poles, const WeightFunction& w);

}  // namespace rfopt
