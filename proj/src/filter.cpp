// Copyright (c) 2026 the rfopt authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "rfopt/filter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rfopt {

namespace {

constexpr double kPairTol = 1e-12;

bool same_pole(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

CPFilter::CPFilter(std::vector<cplx> poles, std::vector<cplx> coeffs) {
  poles_ = std::move(poles);
  coeffs_ = std::move(coeffs);
  validate_and_sort();
}

void CPFilter::validate_and_sort() {
  if (poles_.empty()) throw InvalidFilter("filter needs at least one pole");
  if (poles_.size() != coeffs_.size())
    throw InvalidFilter("pole and coefficient counts differ");
  for (cplx w : poles_) {
    if (!(w.real() > 0.0) || !(w.imag() > 0.0))
      throw InvalidFilter("poles must lie strictly in the first quadrant");
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
      throw InvalidFilter("non-finite pole");
  }
  std::vector<int> idx(poles_.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int i, int j) {
    if (poles_[i].imag() != poles_[j].imag()) return poles_[i].imag() < poles_[j].imag();
    return poles_[i].real() < poles_[j].real();
  });
  std::vector<cplx> p(poles_.size()), c(poles_.size());
  for (size_t i = 0; i < idx.size(); ++i) {
    p[i] = poles_[idx[i]];
    c[i] = coeffs_[idx[i]];
  }
  poles_ = std::move(p);
  coeffs_ = std::move(c);
  for (size_t i = 0; i + 1 < poles_.size(); ++i)
    if (same_pole(poles_[i], poles_[i + 1], kPairTol))
      throw DuplicatePoles("poles must be pairwise distinct");
}

CPFilter CPFilter::canonicalized(std::vector<cplx> poles, std::vector<cplx> coeffs) {
  if (poles.size() != coeffs.size())
    throw InvalidFilter("pole and coefficient counts differ");
  for (size_t k = 0; k < poles.size(); ++k) {
    cplx w = poles[k];
    cplx g = coeffs[k];
    if (w.imag() < 0.0) {  // f(w,g) = f(conj w, conj g)
      w = std::conj(w);
      g = std::conj(g);
    }
    if (w.real() < 0.0) {  // f(w,g) = f(-conj w, -conj g)
      w = -std::conj(w);
      g = -std::conj(g);
    }
    poles[k] = w;
    coeffs[k] = g;
  }
  return CPFilter(std::move(poles), std::move(coeffs));
}

double eval(const CPFilter& f, double t) {
  // Pair the four monomials of each pole so the imaginary parts cancel
  // exactly: g/(t-w) + conj(g/(t-w)) = 2 Re[g/(t-w)].
  double acc = 0.0;
  for (int k = 0; k < f.q(); ++k) {
    const cplx w = f.poles()[k];
    const cplx g = f.coeffs()[k];
    acc += 2.0 * (g / (t - w)).real() - 2.0 * (g / (t + w)).real();
  }
  return acc;
}

double eval_derivative(const CPFilter& f, double t) {
  double acc = 0.0;
  for (int k = 0; k < f.q(); ++k) {
    const cplx w = f.poles()[k];
    const cplx g = f.coeffs()[k];
    const cplx dm = t - w;
    const cplx dp = t + w;
    acc += -2.0 * (g / (dm * dm)).real() + 2.0 * (g / (dp * dp)).real();
  }
  return acc;
}

cplx eval_complex(const FullFilter& f, double t) {
  cplx acc = 0.0;
  for (int i = 0; i < f.n(); ++i) acc += f.coeffs[i] / (t - f.poles[i]);
  return acc;
}

double eval(const FullFilter& f, double t) { return eval_complex(f, t).real(); }

FullFilter expand_cp(const CPFilter& f) {
  FullFilter out;
  out.poles.reserve(4 * f.q());
  out.coeffs.reserve(4 * f.q());
  for (int k = 0; k < f.q(); ++k) {
    const cplx w = f.poles()[k];
    const cplx g = f.coeffs()[k];
    out.poles.insert(out.poles.end(), {w, std::conj(w), -w, -std::conj(w)});
    out.coeffs.insert(out.coeffs.end(), {g, std::conj(g), -g, -std::conj(g)});
  }
  return out;
}

CPFilter reduce_to_cp(const FullFilter& f, double tol) {
  const int n = f.n();
  if (n % 4 != 0) throw SymmetryViolation("pole count not divisible by 4", 0.0);
  std::vector<bool> used(n, false);
  std::vector<cplx> poles, coeffs;
  double worst = 0.0;

  auto find_partner = [&](cplx target_pole, cplx target_coeff) -> int {
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      if (used[j]) continue;
      const double d = std::abs(f.poles[j] - target_pole);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    if (best < 0 || best_d > tol || std::abs(f.coeffs[best] - target_coeff) > tol) {
      const double cd = best < 0 ? std::numeric_limits<double>::infinity()
                                 : std::max(best_d, std::abs(f.coeffs[best] - target_coeff));
      throw SymmetryViolation("pole multiset is not CP-symmetric", std::max(worst, cd));
    }
    worst = std::max(worst, best_d);
    used[best] = true;
    return best;
  };

  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    cplx w = f.poles[i];
    cplx g = f.coeffs[i];
    if (std::abs(w.real()) <= tol || std::abs(w.imag()) <= tol)
      throw SymmetryViolation("pole on an axis has no first-quadrant representative",
                              std::abs(w.real()) + std::abs(w.imag()));
    // Fold the orbit representative into the first quadrant; one of the four
    // orbit members below is then exactly the scanned pole i.
    if (w.imag() < 0.0) {
      w = std::conj(w);
      g = std::conj(g);
    }
    if (w.real() < 0.0) {
      w = -std::conj(w);
      g = -std::conj(g);
    }
    find_partner(w, g);
    find_partner(std::conj(w), std::conj(g));
    find_partner(-w, -g);
    find_partner(-std::conj(w), -std::conj(g));
    poles.push_back(w);
    coeffs.push_back(g);
  }
  return CPFilter(std::move(poles), std::move(coeffs));
}

FullFilter map_interval(const FullFilter& f, const IntervalMap& m) {
  const double c = m.center();
  const double r = m.halfwidth();
  FullFilter out = f;
  for (int i = 0; i < out.n(); ++i) {
    out.poles[i] = r * out.poles[i] + c;
    out.coeffs[i] = r * out.coeffs[i];
  }
  return out;
}

std::vector<std::pair<double, double>> local_extrema(const CPFilter& f, double lo,
                                                     double hi, int grid) {
  if (!(lo < hi)) throw InvalidInterval("local_extrema requires lo < hi");
  if (grid <= 0) grid = std::max(3, static_cast<int>(std::ceil(2000.0 * (hi - lo))));
  if (grid < 3) grid = 3;

  std::vector<std::pair<double, double>> out;
  const double h = (hi - lo) / (grid - 1);
  double t_prev = lo;
  double d_prev = eval_derivative(f, t_prev);
  for (int i = 1; i < grid; ++i) {
    const double t = lo + i * h;
    const double d = eval_derivative(f, t);
    if (d == 0.0 && d_prev != 0.0) {
      out.emplace_back(t, eval(f, t));
    } else if (d_prev * d < 0.0) {
      // Bisection on the derivative sign change.
      double a = t_prev, b = t, da = d_prev;
      double mid = 0.5 * (a + b);
      for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (a + b);
        const double dm = eval_derivative(f, mid);
        if (std::abs(dm) < 1e-10 || (b - a) < 1e-14 * std::max(1.0, std::abs(mid))) break;
        if (da * dm < 0.0) {
          b = mid;
        } else {
          a = mid;
          da = dm;
        }
      }
      out.emplace_back(mid, eval(f, mid));
    }
    t_prev = t;
    d_prev = d;
  }
  return out;
}

}  // namespace rfopt
