// Copyright (c) 2026 the rfopt authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "rfopt/filter.hpp"

namespace rfopt {

// Sorted eigenvalue list standing in for the spectrum of a Hermitian matrix.
class Spectrum {
 public:
  explicit Spectrum(std::vector<double> eigenvalues);
  const std::vector<double>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  // Number of eigenvalues in the closed interval [a, b].
  int count_in(double a, double b) const;

 private:
  std::vector<double> values_;
};

struct BenchmarkProblem {
  double a;
  double b;
  int m;  // eigenvalues inside [a,b]
  int p;  // subspace size
};

struct ProfilePoint {
  double x;
  double phi;
};

struct ProfileCurve {
  std::string method;
  std::vector<ProfilePoint> points;
};

// Search intervals from the "feature points" of a smooth density
// approximant: a Chebyshev fit of degree M to the kernel-smoothed
// eigenvalue density; feature points are the real zeros of its first and
// second derivatives. Keeps interval pairs whose exact eigenvalue count is
// within [fmin, fmax] of the spectrum.
std::vector<BenchmarkProblem> generate_intervals(const Spectrum& s, int M = 45,
                                                 double fmin = 0.05, double fmax = 0.20,
                                                 double p_factor = 1.5);

// Subspace-iteration convergence rate tau = |f(l_{p+1})| / |f(l_m)| under
// the descending ordering of |f| over the mapped spectrum.
double convergence_rate(const CPFilter& f, const Spectrum& s, const BenchmarkProblem& prob);

// Largest shifted-system condition number max_i |l_i - z| / min_i |l_i - z|
// over the poles of the filter mapped to the interval.
double worst_condition(const CPFilter& f, const Spectrum& s, const IntervalMap& interval);

// Dolan-More performance profiles; metrics[m].second holds one positive
// value per problem, aligned across methods.
std::vector<ProfileCurve> performance_profile(
    const std::vector<std::pair<std::string, std::vector<double>>>& metrics);

}  // namespace rfopt
