// Copyright (c) 2026 the rfopt authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <string>

#include "rfopt/filter.hpp"
#include "rfopt/io.hpp"
#include "rfopt/weights.hpp"

namespace rfopt::test {

inline std::string fixture(const std::string& name) {
  return std::string(RFOPT_FIXTURE_DIR) + "/" + name;
}

// Adaptive Simpson quadrature for complex integrands; the independent
// oracle used against every closed-form kernel.
namespace detail_quad {

template <typename F>
std::complex<double> simpson(const F& f, double a, double b, std::complex<double> fa,
                             std::complex<double> fm, std::complex<double> fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
std::complex<double> adapt(const F& f, double a, double m, double b,
                           std::complex<double> fa, std::complex<double> fm,
                           std::complex<double> fb, std::complex<double> whole,
                           double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const std::complex<double> flm = f(lm);
  const std::complex<double> frm = f(rm);
  const std::complex<double> left = simpson(f, a, m, fa, flm, fm);
  const std::complex<double> right = simpson(f, m, b, fm, frm, fb);
  const std::complex<double> delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adapt(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adapt(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail_quad

template <typename F>
std::complex<double> quad(const F& f, double a, double b, double tol = 1e-13,
                          int depth = 60) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const std::complex<double> fa = f(a);
  const std::complex<double> fm = f(m);
  const std::complex<double> fb = f(b);
  const std::complex<double> whole = detail_quad::simpson(f, a, b, fa, fm, fb);
  return detail_quad::adapt(f, a, m, b, fa, fm, fb, whole, tol, depth);
}

// Quadrature of g(t) * integrand over every piece of the weight (both
// signs), with long pieces split for adaptivity.
template <typename F>
std::complex<double> quad_weighted(const WeightFunction& w, const F& integrand,
                                   bool indicator_only = false, double tol = 1e-13) {
  std::complex<double> acc = 0.0;
  for (int j = 0; j < w.piece_count(); ++j) {
    auto [lo, hi, g] = w.piece(j);
    if (g == 0.0) continue;
    if (indicator_only) {
      hi = std::min(hi, 1.0);
      if (lo >= hi) break;
    }
    // Split wide pieces logarithmically so the adaptive rule converges.
    double a = lo;
    while (a < hi) {
      const double b = std::min(hi, std::max(a * 4.0, a + 2.0));
      acc += g * quad(integrand, a, b, tol);
      acc += g * quad(integrand, -b, -a, tol);
      a = b;
    }
  }
  return acc;
}

inline double rel_err(std::complex<double> got, std::complex<double> want) {
  const double scale = std::max(1e-300, std::abs(want));
  return std::abs(got - want) / scale;
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

// Random CP filters with poles kept away from the axes so quadrature
// oracles converge quickly.
inline CPFilter random_filter(std::mt19937_64& rng, int q) {
  std::uniform_real_distribution<double> re(0.05, 1.4);
  std::uniform_real_distribution<double> im(0.05, 1.2);
  std::uniform_real_distribution<double> co(-0.4, 0.4);
  while (true) {
    std::vector<cplx> poles, coeffs;
    for (int k = 0; k < q; ++k) {
      poles.emplace_back(re(rng), im(rng));
      coeffs.emplace_back(co(rng), co(rng));
    }
    try {
      return CPFilter(poles, coeffs);
    } catch (const DomainError&) {
      continue;  // resample duplicate poles
    }
  }
}

inline WeightFunction random_weight(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int pieces = 1 + static_cast<int>(u(rng) * 4);
  std::vector<double> bp, vals;
  double b = 0.3 + u(rng);
  for (int j = 0; j < pieces; ++j) {
    bp.push_back(b);
    vals.push_back(u(rng) * 4.0);
    b += 0.3 + 1.5 * u(rng);
  }
  bp.back() = std::max(bp.back(), 1.5);  // support must cover [-1,1]
  vals.front() = std::max(vals.front(), 0.2);
  return WeightFunction(bp, vals);
}

}  // namespace rfopt::test
