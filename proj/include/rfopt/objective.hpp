// Copyright (c) 2026 the rfopt authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "rfopt/filter.hpp"
#include "rfopt/integrals.hpp"
#include "rfopt/weights.hpp"

namespace rfopt {

// Level and gradient of the residual level function in the CP
// parameterization. Gradients are packed per complex coordinate as
//   grad[k] = dF/dRe(x_k) + i * dF/dIm(x_k),
// so each component matches central finite differences of the level in the
// corresponding real coordinate, and x - s*grad is a plain descent step.
struct ObjectiveValue {
  double value = 0.0;
  VectorXcd grad_w;
  VectorXcd grad_gamma;
  double grad_norm() const;
};

struct PenaltyConfig {
  double c = 0.0;
};

// Residual level F of a filter against the indicator of [-1,1] under the
// weight, assembled from the CP-reduced matrices. Includes the (1/2)||h||^2
// term, so the zero filter scores (1/2)||h||^2 and F = (1/2)||h - f||^2_G.
double residual_level(const CPFilter& f, const WeightFunction& w);

// Full-form evaluation through the expanded 4q-pole representation:
// alpha^H G alpha - 2 Re(eta^H alpha) + ||h||^2 = ||h - f||^2_G. Testing
// oracle; equals exactly twice residual_level.
double residual_level_oracle(const CPFilter& f, const WeightFunction& w);

// Level plus analytic gradient (no penalty term).
ObjectiveValue gradient(const CPFilter& f, const WeightFunction& w);

// Derivative of the filter at the search-interval endpoint t = 1.
double steepness(const CPFilter& f);

struct PenaltyValue {
  double value = 0.0;
  VectorXcd grad_w;
  VectorXcd grad_gamma;
};

// Steepness penalty c * f'(1) with its analytic gradient, packed like
// ObjectiveValue. Added to level and gradient when c != 0.
PenaltyValue penalty(const CPFilter& f, const PenaltyConfig& cfg);

namespace detail {

// Raw-vector versions used by the optimizer on tentative iterates. They
// enforce the domain guard (first-quadrant poles, |w| <= 1e6,
// Im(w) >= 1e-14) and throw DomainEscape otherwise.
void check_domain(const std::vector<cplx>& poles);
double residual_level_raw(const std::vector<cplx>& poles, const std::vector<cplx>& coeffs,
                          const WeightFunction& w, double penalty_c);
ObjectiveValue gradient_raw(const std::vector<cplx>& poles, const std::vector<cplx>& coeffs,
                            const WeightFunction& w, double penalty_c);

}  // namespace detail

}  // namespace rfopt
