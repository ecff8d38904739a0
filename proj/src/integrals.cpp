// Copyright (c) 2026 the rfopt authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "rfopt/integrals.hpp"

#include <cmath>

namespace rfopt {

namespace {

void require_offaxis(cplx w) {
  if (w.imag() == 0.0) throw RealPole("pole on the real axis");
}

bool confluent(cplx w1, cplx w2) {
  return std::abs(w1 - w2) < 1e-12 * std::max(1.0, std::abs(w1));
}

// log(b - w) - log(a - w) with principal logs; never log of the ratio.
cplx log_diff(cplx w, double a, double b) {
  return std::log(b - w) - std::log(a - w);
}

// The generic two-pole formulas lose all digits when the poles nearly
// coincide. Between the exact-confluence dispatch and full separation they
// are evaluated as a series around the midpoint m = (w1+w2)/2:
//   1/((t-w1)(t-w2))     = sum_j  d^{2j} (t-m)^{-2j-2}
//   1/((t-w1)^2(t-w2))   = sum_n  c_n d^n (t-m)^{-n-3},  c_n = n/2 + 1
//   1/((t-w1)^2(t-w2)^2) = sum_j (j+1) d^{2j} (t-m)^{-2j-4}
// with d = (w1-w2)/2, convergent for |d| below the segment distance of m.
constexpr double kSeriesBand = 1e-4;

// Distance from the real segment [a,b] to m.
double segment_distance(cplx m, double a, double b) {
  if (m.real() < a) return std::abs(m - cplx(a, 0.0));
  if (m.real() > b) return std::abs(m - cplx(b, 0.0));
  return std::abs(m.imag());
}

bool series_applicable(cplx w1, cplx w2, double a, double b) {
  if (std::abs(w1 - w2) >= kSeriesBand * std::max(1.0, std::abs(w1))) return false;
  const cplx m = 0.5 * (w1 + w2);
  return std::abs(w1 - w2) < segment_distance(m, a, b);
}

// int_a^b (t-m)^{-p} dt for p >= 2.
cplx power_integral(cplx m, double a, double b, int p) {
  return (std::pow(b - m, 1 - p) - std::pow(a - m, 1 - p)) / cplx(1 - p);
}

template <typename Coef>
cplx midpoint_series(cplx w1, cplx w2, double a, double b, int p0, int stride,
                     Coef&& coef) {
  const cplx m = 0.5 * (w1 + w2);
  const cplx d = 0.5 * (w1 - w2);
  cplx acc = 0.0;
  cplx dn = 1.0;
  for (int n = 0; n < 96; ++n) {
    const cplx term = coef(n) * dn * power_integral(m, a, b, p0 + stride * n);
    acc += term;
    if (std::abs(term) < 1e-17 * std::max(1.0, std::abs(acc))) break;
    dn *= stride == 2 ? d * d : d;
  }
  return acc;
}

}  // namespace

cplx int_lin(cplx w, double a, double b) {
  require_offaxis(w);
  if (a == b) return 0.0;
  return log_diff(w, a, b);
}

cplx int_sq(cplx w, double a, double b) {
  require_offaxis(w);
  if (a == b) return 0.0;
  return (b - a) / ((b - w) * (a - w));
}

cplx int_pair(cplx w1, cplx w2, double a, double b) {
  require_offaxis(w1);
  require_offaxis(w2);
  if (a == b) return 0.0;
  if (confluent(w1, w2)) return int_sq(w1, a, b);
  if (series_applicable(w1, w2, a, b))
    return midpoint_series(w1, w2, a, b, 2, 2, [](int) { return 1.0; });
  return (log_diff(w1, a, b) - log_diff(w2, a, b)) / (w1 - w2);
}

cplx int_sq_lin(cplx w1, cplx w2, double a, double b) {
  require_offaxis(w1);
  require_offaxis(w2);
  if (a == b) return 0.0;
  if (confluent(w1, w2)) return int_cube(w1, a, b);
  if (series_applicable(w1, w2, a, b))
    return midpoint_series(w1, w2, a, b, 3, 1,
                           [](int n) { return static_cast<double>(n / 2 + 1); });
  const cplx d = w1 - w2;
  return (b - a) / (d * (b - w1) * (a - w1)) - log_diff(w1, a, b) / (d * d) +
         log_diff(w2, a, b) / (d * d);
}

cplx int_cube(cplx w, double a, double b) {
  require_offaxis(w);
  if (a == b) return 0.0;
  // Antiderivative -1/(2 (t-w)^2); written out this carries a factor 1/2
  // that the textbook-style product formula is prone to dropping.
  const cplx bw = b - w;
  const cplx aw = a - w;
  return 0.5 * (b - a) * (b + a - 2.0 * w) / (bw * bw * aw * aw);
}

cplx int_sq_sq(cplx w1, cplx w2, double a, double b) {
  require_offaxis(w1);
  require_offaxis(w2);
  if (a == b) return 0.0;
  if (confluent(w1, w2)) return int_quart(w1, a, b);
  if (series_applicable(w1, w2, a, b))
    return midpoint_series(w1, w2, a, b, 4, 2,
                           [](int n) { return static_cast<double>(n + 1); });
  const cplx d = w1 - w2;
  const cplx d2 = d * d;
  const cplx part1 = (b - a) / d2 *
                     (1.0 / ((b - w1) * (a - w1)) + 1.0 / ((b - w2) * (a - w2)));
  const cplx part2 = 2.0 / (d2 * d) * (log_diff(w2, a, b) - log_diff(w1, a, b));
  return part1 + part2;
}

cplx int_quart(cplx w, double a, double b) {
  require_offaxis(w);
  if (a == b) return 0.0;
  const cplx aw = a - w;
  const cplx wb = w - b;
  return (1.0 / (aw * aw * aw) + 1.0 / (wb * wb * wb)) / 3.0;
}

namespace {

// Accumulates g * kernel over every weight piece and its mirrored twin.
template <typename Kernel>
cplx accumulate_pieces(const WeightFunction& w, bool restrict_to_indicator, Kernel&& k) {
  cplx acc = 0.0;
  for (int j = 0; j < w.piece_count(); ++j) {
    auto [lo, hi, g] = w.piece(j);
    if (g == 0.0) continue;
    if (restrict_to_indicator) {
      hi = std::min(hi, 1.0);
      if (lo >= hi) break;
    }
    acc += g * (k(lo, hi) + k(-hi, -lo));
  }
  return acc;
}

}  // namespace

cplx weighted_lin(const WeightFunction& w, cplx pole, bool restrict_to_indicator) {
  return accumulate_pieces(w, restrict_to_indicator,
                           [&](double a, double b) { return int_lin(pole, a, b); });
}

cplx weighted_sq(const WeightFunction& w, cplx pole, bool restrict_to_indicator) {
  return accumulate_pieces(w, restrict_to_indicator,
                           [&](double a, double b) { return int_sq(pole, a, b); });
}

cplx weighted_pair(const WeightFunction& w, cplx w1, cplx w2) {
  return accumulate_pieces(w, false,
                           [&](double a, double b) { return int_pair(w1, w2, a, b); });
}

cplx weighted_sq_lin(const WeightFunction& w, cplx w1, cplx w2) {
  return accumulate_pieces(w, false,
                           [&](double a, double b) { return int_sq_lin(w1, w2, a, b); });
}

cplx weighted_sq_sq(const WeightFunction& w, cplx w1, cplx w2) {
  return accumulate_pieces(w, false,
                           [&](double a, double b) { return int_sq_sq(w1, w2, a, b); });
}

namespace {

void require_valid_poles(const std::vector<cplx>& poles) {
  for (size_t i = 0; i < poles.size(); ++i) {
    if (poles[i].imag() == 0.0) throw RealPole("pole on the real axis");
    for (size_t j = i + 1; j < poles.size(); ++j)
      if (std::abs(poles[i] - poles[j]) < 1e-12) throw DuplicatePoles("duplicate poles");
  }
}

}  // namespace

AssembledSystem assemble(const std::vector<cplx>& poles, const WeightFunction& w) {
  require_valid_poles(poles);
  const int q = static_cast<int>(poles.size());
  AssembledSystem s;
  s.X.resize(q, q);
  s.Y.resize(q, q);
  s.W.resize(q, q);
  s.Z.resize(q, q);
  s.theta.resize(q);
  s.theta_pty.resize(q);
  for (int k = 0; k < q; ++k) {
    const cplx cw = std::conj(poles[k]);
    for (int l = 0; l < q; ++l) {
      const cplx wl = poles[l];
      s.X(k, l) = weighted_pair(w, cw, wl);
      s.Y(k, l) = weighted_pair(w, cw, -std::conj(wl));
      s.W(k, l) = k == l ? weighted_sq(w, cw, false) : weighted_pair(w, cw, std::conj(wl));
      s.Z(k, l) = weighted_pair(w, cw, -wl);
    }
    s.theta(k) = weighted_lin(w, cw, true);
    s.theta_pty(k) = weighted_lin(w, -poles[k], true);
  }
  s.h_norm_sq = h_norm_sq(w);
  return s;
}

GradientSystem assemble_grad(const std::vector<cplx>& poles, const WeightFunction& w) {
  require_valid_poles(poles);
  const int q = static_cast<int>(poles.size());
  GradientSystem s;
  s.gX.resize(q, q);
  s.gZ.resize(q, q);
  s.gWbar.resize(q, q);
  s.gYbar.resize(q, q);
  s.gtheta.resize(q);
  for (int k = 0; k < q; ++k) {
    const cplx cw = std::conj(poles[k]);
    const cplx wk = poles[k];
    for (int l = 0; l < q; ++l) {
      const cplx wl = poles[l];
      // The squared factor carries the first argument of the kernel.
      s.gX(k, l) = weighted_sq_lin(w, wl, cw);
      s.gZ(k, l) = -weighted_sq_lin(w, -wl, cw);
      s.gWbar(k, l) = weighted_sq_lin(w, wl, wk);  // int_cube on the diagonal
      s.gYbar(k, l) = -weighted_sq_lin(w, -wl, wk);
    }
    s.gtheta(k) = weighted_sq(w, wk, true);
  }
  return s;
}

HessianSystem assemble_hess(const std::vector<cplx>& poles, const WeightFunction& w) {
  require_valid_poles(poles);
  const int q = static_cast<int>(poles.size());
  HessianSystem s;
  s.ggWbar.resize(q, q);
  s.ggYbar.resize(q, q);
  s.ggX.resize(q, q);
  s.ggZ.resize(q, q);
  for (int i = 0; i < q; ++i) {
    const cplx wi = poles[i];
    const cplx cwi = std::conj(wi);
    for (int j = 0; j < q; ++j) {
      const cplx wj = poles[j];
      s.ggWbar(i, j) = weighted_sq_sq(w, wi, wj);  // int_quart on the diagonal
      s.ggYbar(i, j) = -weighted_sq_sq(w, wi, -wj);
      s.ggX(i, j) = weighted_sq_sq(w, cwi, wj);
      s.ggZ(i, j) = -weighted_sq_sq(w, cwi, -wj);
    }
  }
  return s;
}

}  // namespace rfopt
