// Copyright (c) 2026 the rfopt authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rfopt/errors.hpp"
#include "rfopt/filter.hpp"

namespace rfopt {

// Even, piecewise-constant least-squares weight with finite support.
// Breakpoints 0 < b_1 < ... < b_s define half-open pieces [0,b_1), ...,
// [b_{s-1}, b_s) on the half-axis, each carrying a non-negative value; the
// function extends evenly to t < 0 and vanishes on [b_s, inf).
class WeightFunction {
 public:
  WeightFunction(std::vector<double> breakpoints, std::vector<double> values);

  double operator()(double t) const;
  double support() const { return breakpoints_.back(); }
  int piece_count() const { return static_cast<int>(values_.size()); }
  // Piece j as (lo, hi, value) on the half-axis.
  std::tuple<double, double, double> piece(int j) const;
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

double weight_at(const WeightFunction& w, double t);

// Scales all piece values so the piece containing 0 has value 1.
WeightFunction normalize(const WeightFunction& w);

// ||h||^2 = integral of the weight over [-1,1].
double h_norm_sq(const WeightFunction& w);

struct GuidelineReport {
  int id = 0;
  bool pass = true;
  bool degenerate = false;
  // Offending locations with magnitudes (meaning depends on the guideline).
  std::vector<std::pair<double, double>> offenders;
  std::string note;
};

// Outside: local extrema of |f| beyond the search interval must not grow
// with distance (1% slack for refinement noise).
GuidelineReport check_guideline1(const CPFilter& f, const WeightFunction& w);

// Endpoints: the weight must be mirror-symmetric around |t| = 1 for offsets
// up to eps_max.
GuidelineReport check_guideline2(const WeightFunction& w, double eps_max = 0.2);

// Inside: the filter's oscillation max-min on the search interval must stay
// below `threshold`.
GuidelineReport check_guideline3(const CPFilter& f, double threshold = 0.12);

}  // namespace rfopt
