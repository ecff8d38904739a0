// Copyright (c) 2026 the rfopt authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "rfopt/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "rfopt/errors.hpp"

namespace rfopt {

Spectrum::Spectrum(std::vector<double> eigenvalues) : values_(std::move(eigenvalues)) {
  if (values_.size() < 2) throw DegenerateSpectrum("need at least two eigenvalues");
  for (double v : values_)
    if (!std::isfinite(v)) throw DegenerateSpectrum("non-finite eigenvalue");
  std::sort(values_.begin(), values_.end());
}

int Spectrum::count_in(double a, double b) const {
  const auto lo = std::lower_bound(values_.begin(), values_.end(), a);
  const auto hi = std::upper_bound(values_.begin(), values_.end(), b);
  return static_cast<int>(hi - lo);
}

namespace {

// Chebyshev series utilities on [-1, 1].
double clenshaw(const std::vector<double>& c, double x) {
  double b1 = 0.0, b2 = 0.0;
  for (size_t k = c.size(); k-- > 1;) {
    const double b0 = 2.0 * x * b1 - b2 + c[k];
    b2 = b1;
    b1 = b0;
  }
  return x * b1 - b2 + c[0];
}

std::vector<double> cheb_derivative(const std::vector<double>& c) {
  const int n = static_cast<int>(c.size());
  if (n <= 1) return {0.0};
  std::vector<double> d(n + 1, 0.0);
  for (int k = n - 1; k >= 1; --k) d[k - 1] = d[k + 1] + 2.0 * k * c[k];
  d[0] *= 0.5;
  d.resize(n - 1);
  return d;
}

std::vector<double> real_zeros(const std::vector<double>& c) {
  std::vector<double> zeros;
  const int grid = 10000;
  double x0 = -1.0;
  double f0 = clenshaw(c, x0);
  for (int i = 1; i <= grid; ++i) {
    const double x1 = -1.0 + 2.0 * i / grid;
    const double f1 = clenshaw(c, x1);
    if (f0 == 0.0) zeros.push_back(x0);
    if (f0 * f1 < 0.0) {
      double a = x0, b = x1, fa = f0;
      for (int it = 0; it < 80; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = clenshaw(c, m);
        if (fa * fm <= 0.0) {
          b = m;
        } else {
          a = m;
          fa = fm;
        }
      }
      zeros.push_back(0.5 * (a + b));
    }
    x0 = x1;
    f0 = f1;
  }
  return zeros;
}

}  // namespace

std::vector<BenchmarkProblem> generate_intervals(const Spectrum& s, int M, double fmin,
                                                 double fmax, double p_factor) {
  if (!(0.0 < fmin && fmin < fmax && fmax < 1.0))
    throw InvalidInterval("need 0 < fmin < fmax < 1");
  const auto& ev = s.values();
  const int n = s.size();
  const double lo = ev.front();
  const double hi = ev.back();
  if (!(hi > lo)) throw DegenerateSpectrum("spectrum has zero range");
  const double bw = (hi - lo) / 200.0;

  // Kernel-smoothed empirical density sampled at Chebyshev points, then
  // projected onto a degree-M Chebyshev series.
  const int ns = 2048;
  std::vector<double> samples(ns);
  for (int j = 0; j < ns; ++j) {
    const double xi = std::cos(std::numbers::pi * (j + 0.5) / ns);
    const double x = lo + 0.5 * (xi + 1.0) * (hi - lo);
    double acc = 0.0;
    for (double lambda : ev) {
      const double u = (x - lambda) / bw;
      acc += std::exp(-0.5 * u * u);
    }
    samples[j] = acc;
  }
  std::vector<double> coef(M + 1, 0.0);
  for (int k = 0; k <= M; ++k) {
    double acc = 0.0;
    for (int j = 0; j < ns; ++j)
      acc += samples[j] * std::cos(k * std::numbers::pi * (j + 0.5) / ns);
    coef[k] = 2.0 * acc / ns;
  }
  coef[0] *= 0.5;

  const std::vector<double> d1 = cheb_derivative(coef);
  const std::vector<double> d2 = cheb_derivative(d1);
  std::set<double> feature_set;
  for (double z : real_zeros(d1)) feature_set.insert(lo + 0.5 * (z + 1.0) * (hi - lo));
  for (double z : real_zeros(d2)) feature_set.insert(lo + 0.5 * (z + 1.0) * (hi - lo));
  if (feature_set.size() < 2)
    throw DegenerateSpectrum("fewer than two feature points in the density");
  const std::vector<double> feats(feature_set.begin(), feature_set.end());

  std::vector<BenchmarkProblem> out;
  for (size_t i = 0; i < feats.size(); ++i) {
    for (size_t j = i + 1; j < feats.size(); ++j) {
      const int m = s.count_in(feats[i], feats[j]);
      if (m < 1 || m < fmin * n || m > fmax * n) continue;
      const int p = static_cast<int>(std::ceil(p_factor * m));
      out.push_back({feats[i], feats[j], m, p});
    }
  }
  return out;
}

double convergence_rate(const CPFilter& f, const Spectrum& s, const BenchmarkProblem& prob) {
  const int n = s.size();
  if (prob.p + 1 > n)
    throw InsufficientSpectrum("need at least p + 1 eigenvalues");
  const IntervalMap map(prob.a, prob.b);
  std::vector<double> mag(n);
  for (int i = 0; i < n; ++i) mag[i] = std::abs(eval(f, map.to_canonical(s.values()[i])));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return mag[i] > mag[j]; });
  const double denom = mag[order[prob.m - 1]];
  if (denom == 0.0) throw ZeroDenominator("|f| vanishes at the m-th eigenvalue");
  return mag[order[prob.p]] / denom;
}

double worst_condition(const CPFilter& f, const Spectrum& s, const IntervalMap& interval) {
  const FullFilter mapped = map_interval(expand_cp(f), interval);
  double worst = 0.0;
  for (cplx z : mapped.poles) {
    double dmin = std::numeric_limits<double>::infinity();
    double dmax = 0.0;
    for (double lambda : s.values()) {
      const double d = std::abs(lambda - z);
      dmin = std::min(dmin, d);
      dmax = std::max(dmax, d);
    }
    worst = std::max(worst, dmax / dmin);
  }
  return worst;
}

std::vector<ProfileCurve> performance_profile(
    const std::vector<std::pair<std::string, std::vector<double>>>& metrics) {
  if (metrics.empty() || metrics.front().second.empty())
    throw EmptyInput("no metrics to profile");
  const size_t P = metrics.front().second.size();
  for (const auto& [name, vals] : metrics) {
    if (vals.size() != P) throw EmptyInput("methods disagree on the problem count");
    for (double v : vals)
      if (!(v > 0.0)) throw EmptyInput("metrics must be positive");
  }
  std::vector<double> best(P, std::numeric_limits<double>::infinity());
  for (const auto& [name, vals] : metrics)
    for (size_t p = 0; p < P; ++p) best[p] = std::min(best[p], vals[p]);

  std::set<double> ratio_set;
  std::vector<std::vector<double>> ratios(metrics.size(), std::vector<double>(P));
  for (size_t m = 0; m < metrics.size(); ++m)
    for (size_t p = 0; p < P; ++p) {
      ratios[m][p] = metrics[m].second[p] / best[p];
      ratio_set.insert(ratios[m][p]);
    }

  std::vector<ProfileCurve> curves;
  for (size_t m = 0; m < metrics.size(); ++m) {
    ProfileCurve c;
    c.method = metrics[m].first;
    for (double x : ratio_set) {
      const auto cnt = std::count_if(ratios[m].begin(), ratios[m].end(),
                                     [&](double r) { return r <= x; });
      c.points.push_back({x, static_cast<double>(cnt) / static_cast<double>(P)});
    }
    curves.push_back(std::move(c));
  }
  return curves;
}

}  // namespace rfopt
