// Copyright (c) 2026 the rfopt authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "rfopt/seeds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace rfopt {

namespace detail {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[n - 1 - i] = weights[i];
  }
}

double elliptic_K(double k) {
  if (!(k >= 0.0 && k < 1.0)) throw ConstructionFailure("elliptic modulus out of range");
  double a = 1.0;
  double b = std::sqrt(1.0 - k * k);
  for (int it = 0; it < 64 && std::abs(a - b) > 1e-15 * a; ++it) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return std::numbers::pi / (2.0 * a);
}

void jacobi_sn_cn(double u, double k, double& sn, double& cn) {
  if (k < 1e-12) {
    sn = std::sin(u);
    cn = std::cos(u);
    return;
  }
  double a[64], c[64];
  a[0] = 1.0;
  c[0] = k;
  double b = std::sqrt(1.0 - k * k);
  int n = 0;
  while (n < 62 && std::abs(c[n]) > 1e-15 * a[n]) {
    a[n + 1] = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
  }
  double phi = std::ldexp(a[n] * u, n);
  for (int i = n; i >= 1; --i) {
    const double s = std::clamp(c[i] * std::sin(phi) / a[i], -1.0, 1.0);
    phi = 0.5 * (std::asin(s) + phi);
  }
  sn = std::sin(phi);
  cn = std::cos(phi);
}

}  // namespace detail

namespace {

// Upper-semicircle contour quadrature: nodes z = e^{i phi} with
// coefficients -(weight/4) e^{i phi} realize the Cauchy integral of the
// unit disc (interior value 1); only first-quadrant nodes are kept.
CPFilter contour_filter(const std::vector<double>& phis, const std::vector<double>& wts) {
  std::vector<cplx> poles, coeffs;
  for (size_t j = 0; j < phis.size(); ++j) {
    if (phis[j] >= std::numbers::pi / 2.0) continue;
    const cplx z = std::polar(1.0, phis[j]);
    poles.push_back(z);
    coeffs.push_back(-0.25 * wts[j] * z);
  }
  return CPFilter(std::move(poles), std::move(coeffs));
}

}  // namespace

CPFilter gauss_filter(int q) {
  if (q < 1) throw ConstructionFailure("q must be at least 1");
  std::vector<double> x, w;
  detail::gauss_legendre(2 * q, x, w);
  // Legendre nodes mapped to arc angle; the plain Legendre weights (summing
  // to 2) make the Cauchy sum hit f(0) = 1 exactly.
  std::vector<double> phis(2 * q), wts(2 * q);
  for (int j = 0; j < 2 * q; ++j) {
    phis[j] = 0.5 * std::numbers::pi * (x[j] + 1.0);
    wts[j] = w[j];
  }
  return contour_filter(phis, wts);
}

CPFilter trapezoidal_filter(int q) {
  if (q < 1) throw ConstructionFailure("q must be at least 1");
  const int n = 2 * q;
  std::vector<double> phis(n), wts(n);
  for (int j = 0; j < n; ++j) {
    phis[j] = std::numbers::pi * (j + 0.5) / n;
    wts[j] = 2.0 / n;
  }
  return contour_filter(phis, wts);
}

CPFilter elliptic_filter(int q) {
  if (q < 1) throw ConstructionFailure("q must be at least 1");
  // Transition-band modulus; 0.0017438 pins min Im(w) = 0.0022 at q = 4 and
  // the q/4 exponent widens the band gracefully for low degrees.
  const double ell4 = 0.0017438335;
  const double ell = std::pow(ell4, q / 4.0);

  const double kp = std::sqrt(1.0 - ell * ell);
  const double Kp = detail::elliptic_K(kp);
  const int r = q;
  std::vector<double> c(2 * r);  // c[j] for j = 1..2r-1
  for (int j = 1; j <= 2 * r - 1; ++j) {
    double sn, cn;
    detail::jacobi_sn_cn(j * Kp / (2.0 * r), kp, sn, cn);
    if (std::abs(cn) < 1e-300) throw ConstructionFailure("elliptic node degenerated");
    c[j] = ell * ell * (sn * sn) / (cn * cn);
  }

  // g(x) = x prod_even (x^2+c_j) / prod_odd (x^2+c_j); the scaling M makes
  // M g equioscillate around 1 on [ell, 1].
  auto g = [&](double x) {
    double num = x, den = 1.0;
    for (int j = 2; j <= 2 * r - 2; j += 2) num *= x * x + c[j];
    for (int j = 1; j <= 2 * r - 1; j += 2) den *= x * x + c[j];
    return num / den;
  };
  double gmin = std::numeric_limits<double>::infinity();
  double gmax = -gmin;
  const int scan = 20001;
  auto scan_x = [&](int i) {
    // Logarithmic grid resolves the extrema clustered near ell.
    return ell * std::pow(1.0 / ell, static_cast<double>(i) / (scan - 1));
  };
  for (int i = 0; i < scan; ++i) {
    const double v = g(scan_x(i));
    gmin = std::min(gmin, v);
    gmax = std::max(gmax, v);
  }
  if (!(gmin > 0.0) || !std::isfinite(gmax))
    throw ConstructionFailure("equioscillation scan failed");
  const double M = 2.0 / (gmax + gmin);

  // Largest x0 in [ell, 1] with M g(x0) = 1. Anchoring the transport
  //   x(t) = x0 (1 - t^2)/(1 + t^2)
  // there sends t = 0, +-1, infinity to x0, 0, -x0, i.e. to an error zero,
  // the sign flip, and again an error zero of the approximant. That pins
  // f(0) = 1, f(+-1) = 1/2 and f(inf) = 0 exactly; without the x0 anchor
  // the composed function keeps a constant part at infinity that a pure
  // partial-fraction sum cannot carry.
  double x0 = 0.0;
  double xr = 1.0, fr = M * g(1.0) - 1.0;
  for (int i = scan - 2; i >= 0; --i) {
    const double xl = scan_x(i);
    const double fl = M * g(xl) - 1.0;
    if (fl == 0.0) {
      x0 = xl;
      break;
    }
    if (fl * fr < 0.0) {
      double a = xl, b = xr, fa = fl;
      for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = M * g(m) - 1.0;
        if (fa * fm <= 0.0) {
          b = m;
        } else {
          a = m;
          fa = fm;
        }
        if (b - a < 1e-16) break;
      }
      x0 = 0.5 * (a + b);
      break;
    }
    xr = xl;
    fr = fl;
  }
  if (x0 <= 0.0) throw ConstructionFailure("no unit crossing of the sign approximant");

  // First-quadrant poles w_j = e^{i theta_j} with x(w_j) = -i sqrt(c_j) for
  // odd j; residues follow from the product form and the transport.
  std::vector<cplx> poles, coeffs;
  for (int j = 1; j <= 2 * r - 1; j += 2) {
    const double sc = std::sqrt(c[j]);
    const double theta = std::atan(sc / x0);
    const cplx wp = std::polar(1.0, theta);
    const cplx xp(0.0, -sc);
    cplx num = xp;
    for (int m = 2; m <= 2 * r - 2; m += 2) num *= xp * xp + c[m];
    cplx dden = 2.0 * xp;
    for (int m = 1; m <= 2 * r - 1; m += 2)
      if (m != j) dden *= c[m] - c[j];
    const cplx res_x = M * num / dden;
    const cplx one_plus = 1.0 + wp * wp;
    const cplx dxdt = -4.0 * x0 * wp / (one_plus * one_plus);
    poles.push_back(wp);
    coeffs.push_back(0.5 * res_x / dxdt);
  }
  return CPFilter(std::move(poles), std::move(coeffs));
}

}  // namespace rfopt
