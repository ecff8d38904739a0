// Copyright (c) 2026 the rfopt authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "rfopt/errors.hpp"

namespace rfopt {

using cplx = std::complex<double>;

// Affine map between the canonical search interval [-1,1] and [a,b].
struct IntervalMap {
  IntervalMap(double a, double b) : a(a), b(b) {
    if (!(a < b)) throw InvalidInterval("interval endpoints must satisfy a < b");
  }
  double a;
  double b;
  double center() const { return 0.5 * (a + b); }
  double halfwidth() const { return 0.5 * (b - a); }
  // Canonical coordinate of a physical point.
  double to_canonical(double x) const { return (x - center()) / halfwidth(); }
  double from_canonical(double t) const { return halfwidth() * t + center(); }
};

// Rational filter in the conjugation/parity-reduced parameterization:
// q first-quadrant poles w_k with coefficients g_k represent the 4q-pole
// partial-fraction sum
//   f(t) = sum_k [ g_k/(t-w_k) + conj(g_k)/(t-conj(w_k))
//               - g_k/(t+w_k) - conj(g_k)/(t+conj(w_k)) ],
// which is real and even on the real axis.
class CPFilter {
 public:
  // Requires strictly first-quadrant, pairwise distinct poles.
  CPFilter(std::vector<cplx> poles, std::vector<cplx> coeffs);

  // Accepts poles anywhere off the axes and folds them into the first
  // quadrant using the exact identities f(w,g) = f(conj(w),conj(g)) and
  // f(w,g) = f(-conj(w),-conj(g)). Used when reading external data.
  static CPFilter canonicalized(std::vector<cplx> poles, std::vector<cplx> coeffs);

  int q() const { return static_cast<int>(poles_.size()); }
  const std::vector<cplx>& poles() const { return poles_; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }

 private:
  CPFilter() = default;
  void validate_and_sort();
  std::vector<cplx> poles_;
  std::vector<cplx> coeffs_;
};

// Plain partial-fraction form f(t) = sum_i a_i/(t - z_i); n poles total.
// Serves as the expanded/interchange representation and as the testing
// oracle path.
struct FullFilter {
  std::vector<cplx> poles;
  std::vector<cplx> coeffs;
  int n() const { return static_cast<int>(poles.size()); }
};

double eval(const CPFilter& f, double t);
double eval_derivative(const CPFilter& f, double t);

// Complex-sum evaluation of the expanded form; imaginary residue is the
// caller's business (tests assert it is at roundoff level).
cplx eval_complex(const FullFilter& f, double t);
double eval(const FullFilter& f, double t);

// Relabels the q first-quadrant poles into the full 4q pole/coefficient set
// {w, conj(w), -w, -conj(w)} x {g, conj(g), -g, -conj(g)}.
FullFilter expand_cp(const CPFilter& f);

// Verifies CP symmetry of the pole multiset (within `tol` on pole distance,
// with matching coefficients) and returns the first-quadrant representatives.
CPFilter reduce_to_cp(const FullFilter& f, double tol = 1e-12);

// Poles z' = r z + c, coefficients a' = r a, so that the mapped filter at
// r t + c equals the original at t.
FullFilter map_interval(const FullFilter& f, const IntervalMap& m);

// Local extrema of f on [lo, hi], located by derivative sign changes on a
// uniform grid (default 2000 points per unit length) and refined by
// bisection on the derivative. Sorted by t.
std::vector<std::pair<double, double>> local_extrema(const CPFilter& f, double lo,
                                                     double hi, int grid = 0);

}  // namespace rfopt
