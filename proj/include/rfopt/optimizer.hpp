// Copyright (c) 2026 the rfopt authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rfopt/objective.hpp"

namespace rfopt {

enum class Method { GradientDescent, LevenbergMarquardt };
enum class Damping { DiagH, Identity };

struct OptimizerConfig {
  Method method = Method::LevenbergMarquardt;
  // 0 selects the method default (20000 for LM, 2000000 for GD).
  long max_iters = 0;
  double grad_tol = 1e-10;
  double level_tol = 1e-14;
  double mu0 = 1e-3;
  double mu_up = 4.0;
  double mu_down = 1.0 / 3.0;
  Damping damping = Damping::DiagH;
  double penalty_c = 0.0;
  std::optional<double> box_lb;
};

enum class Termination {
  GradientTol,
  LevelTol,
  MaxIterations,
  StepRejected,
  MuOverflow,
};

const char* to_string(Termination t);

struct TraceEntry {
  double level;
  double grad_norm;
  double step;  // line-search s for GD, dampening mu for LM
};

struct OptResult {
  CPFilter filter;
  double level = 0.0;
  long iterations = 0;
  std::vector<TraceEntry> trace;
  Termination reason = Termination::MaxIterations;
};

// One backtracking line search: s starts at 1 and halves until the Armijo
// inequality F(x + s d) < F(x) + (s/2) Re(grad^H d) holds. Throws
// StepRejected once s underflows 1e-12.
double backtracking_step(const CPFilter& f, const VectorXcd& dir_w,
                         const VectorXcd& dir_gamma, const WeightFunction& w,
                         const OptimizerConfig& cfg);

OptResult gradient_descent(const CPFilter& start, const WeightFunction& w,
                           const OptimizerConfig& cfg = {});

struct ReducedSystem {
  MatrixXcd M;    // 2q x 2q
  VectorXcd rhs;  // 2q, ordered [w-block; gamma-block]
};

// Reduced Levenberg-Marquardt system M dy = rhs whose solution equals the
// (w, gamma) block of the dampened 8q x 8q CP Gauss-Newton solve. Built by
// eliminating the conjugate block exactly (Schur complement); see the
// H2/H1 Gram matrices of the CP parameterization.
ReducedSystem lm_reduced_matrix(const std::vector<cplx>& poles,
                                const std::vector<cplx>& coeffs, const WeightFunction& w,
                                double mu, Damping damping = Damping::DiagH,
                                double penalty_c = 0.0);

OptResult levenberg_marquardt(const CPFilter& start, const WeightFunction& w,
                              const OptimizerConfig& cfg = {});

// Convenience dispatcher on cfg.method.
OptResult optimize(const CPFilter& start, const WeightFunction& w,
                   const OptimizerConfig& cfg = {});

// Clamps pole imaginary parts from below: Im(w) < lb becomes lb.
CPFilter project_box(const CPFilter& f, double lb);

}  // namespace rfopt
