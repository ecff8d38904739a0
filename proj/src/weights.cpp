// Copyright (c) 2026 the rfopt authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "rfopt/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rfopt {

WeightFunction::WeightFunction(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.empty() || breakpoints_.size() != values_.size())
    throw InvalidWeight("need equally many breakpoints and piece values");
  double prev = 0.0;
  for (double b : breakpoints_) {
    if (!std::isfinite(b)) throw InvalidWeight("weight support must be finite");
    if (!(b > prev)) throw InvalidWeight("breakpoints must be strictly increasing and positive");
    prev = b;
  }
  for (double g : values_) {
    if (!std::isfinite(g) || g < 0.0) throw InvalidWeight("piece values must be non-negative");
  }
  if (!(breakpoints_.back() > 1.0))
    throw InvalidWeight("weight support must cover the search interval (b_s > 1)");
}

double WeightFunction::operator()(double t) const {
  const double x = std::abs(t);
  if (x >= breakpoints_.back()) return 0.0;
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return values_[static_cast<size_t>(it - breakpoints_.begin())];
}

std::tuple<double, double, double> WeightFunction::piece(int j) const {
  const double lo = j == 0 ? 0.0 : breakpoints_[j - 1];
  return {lo, breakpoints_[j], values_[j]};
}

double weight_at(const WeightFunction& w, double t) { return w(t); }

WeightFunction normalize(const WeightFunction& w) {
  const double g1 = w.values().front();
  if (g1 == 0.0) throw ZeroAtOrigin("piece containing 0 has zero weight");
  std::vector<double> vals = w.values();
  for (double& v : vals) v /= g1;
  return WeightFunction(w.breakpoints(), std::move(vals));
}

double h_norm_sq(const WeightFunction& w) {
  double acc = 0.0;
  for (int j = 0; j < w.piece_count(); ++j) {
    const auto [lo, hi, g] = w.piece(j);
    if (lo >= 1.0) break;
    acc += g * (std::min(hi, 1.0) - lo);
  }
  return 2.0 * acc;
}

GuidelineReport check_guideline1(const CPFilter& f, const WeightFunction& w) {
  GuidelineReport rep;
  rep.id = 1;
  const double lo = 1.0 + 0.01;
  const double hi = w.support();
  if (hi <= lo) {
    rep.note = "weight support ends inside the transition band; nothing to check";
    return rep;
  }
  const auto extrema = local_extrema(f, lo, hi);
  double running_max_of_later = 0.0;
  // Scan right-to-left: an extremum is offending if some later (larger-t)
  // extremum exceeds it by more than 1%.
  for (auto it = extrema.rbegin(); it != extrema.rend(); ++it) {
    const double mag = std::abs(it->second);
    if (running_max_of_later > 1.01 * mag)
      rep.offenders.emplace_back(it->first, mag);
    running_max_of_later = std::max(running_max_of_later, mag);
  }
  std::reverse(rep.offenders.begin(), rep.offenders.end());
  rep.pass = rep.offenders.empty();
  if (!rep.pass) rep.note = "local extrema of |f| grow away from the search interval";
  return rep;
}

GuidelineReport check_guideline2(const WeightFunction& w, double eps_max) {
  GuidelineReport rep;
  rep.id = 2;
  if (!(eps_max > 0.0)) throw InvalidWeight("eps_max must be positive");
  const int n = 10000;
  // Midpoint grid avoids sampling exactly on piece boundaries.
  for (int i = 0; i < n; ++i) {
    const double eps = eps_max * (i + 0.5) / n;
    const double inside = w(1.0 - eps);
    const double outside = w(1.0 + eps);
    if (inside != outside) {
      rep.pass = false;
      rep.offenders.emplace_back(eps, inside - outside);
      rep.note = "weight is asymmetric around the search interval endpoint";
      return rep;
    }
  }
  return rep;
}

GuidelineReport check_guideline3(const CPFilter& f, double threshold) {
  GuidelineReport rep;
  rep.id = 3;
  const double lo = -1.0 + 0.01;
  const double hi = 1.0 - 0.01;
  double fmin = std::numeric_limits<double>::infinity();
  double fmax = -fmin;
  double tmin = lo, tmax = lo;
  const int grid = 4001;
  for (int i = 0; i < grid; ++i) {
    const double t = lo + (hi - lo) * i / (grid - 1);
    const double v = eval(f, t);
    if (v < fmin) { fmin = v; tmin = t; }
    if (v > fmax) { fmax = v; tmax = t; }
  }
  for (const auto& [t, v] : local_extrema(f, lo, hi)) {
    if (v < fmin) { fmin = v; tmin = t; }
    if (v > fmax) { fmax = v; tmax = t; }
  }
  bool all_zero = true;
  for (cplx g : f.coeffs())
    if (g != cplx(0.0, 0.0)) all_zero = false;
  rep.degenerate = all_zero;
  if (fmax - fmin > threshold) {
    rep.pass = false;
    rep.offenders.emplace_back(tmin, fmin);
    rep.offenders.emplace_back(tmax, fmax);
    rep.note = "filter oscillates inside the search interval";
  }
  if (rep.degenerate) rep.note = "degenerate zero filter";
  return rep;
}

}  // namespace rfopt
