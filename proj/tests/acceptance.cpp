// Copyright (c) 2026 the rfopt authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "rfopt/benchmark.hpp"
#include "rfopt/io.hpp"
#include "rfopt/objective.hpp"
#include "rfopt/optimizer.hpp"
#include "rfopt/seeds.hpp"
#include "rfopt/subspace.hpp"
#include "support.hpp"

using namespace rfopt;
using test::fixture;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& what, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", id, what.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

double quad_residual(const CPFilter& f, const WeightFunction& w) {
  return test::quad_weighted(
             w,
             [&](double t) {
               const double h = (t >= -1.0 && t <= 1.0) ? 1.0 : 0.0;
               const double d = h - eval(f, t);
               return cplx(d * d, 0.0);
             },
             false, 1e-14)
      .real();
}

double min_im(const CPFilter& f) {
  double m = 1e300;
  for (cplx w : f.poles()) m = std::min(m, w.imag());
  return m;
}

DenseHermitian with_spectrum(const std::vector<double>& evs, std::uint64_t seed) {
  const int n = static_cast<int>(evs.size());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  MatrixXcd g(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) g(i, j) = cplx(normal(rng), normal(rng));
  const Eigen::HouseholderQR<MatrixXcd> qr(g);
  const MatrixXcd q = qr.householderQ();
  MatrixXcd a = q * Eigen::Map<const VectorXd>(evs.data(), n).cast<cplx>().asDiagonal() *
                q.adjoint();
  return DenseHermitian(std::move(a));
}

// ---- criterion implementations ----------------------------------------

void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const WeightFunction unit = load_weight(fixture("weight_unit1000.json"));
  const CPFilter sp1 = load_filter(fixture("table1_sp1.json"));
  const CPFilter sp2 = load_filter(fixture("table1_sp2.json"));
  const CPFilter sp3 = load_filter(fixture("table1_sp3.json"));
  // One-time normalization resolution: the reduced level carries the factor
  // 1/2 against the quadrature of the squared error; the recorded table
  // values follow the reduced convention.
  const double r1 = residual_level(sp1, unit);
  const double factor = quad_residual(sp1, unit) / r1;
  const bool factor_ok = std::abs(factor - 2.0) < 1e-6;
  const double r2 = residual_level(sp2, unit);
  const double r3 = residual_level(sp3, unit);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool pass = factor_ok && std::abs(r1 - 0.005846) <= 1e-5 &&
                    std::abs(r2 - 0.005846) <= 1e-5 && std::abs(r3 - 0.033640) <= 1e-5 &&
                    secs < 1.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "levels %.6f / %.6f / %.6f, half-norm factor %.9f, %.2fs",
                r1, r2, r3, factor, secs);
  report(1, pass, "residual fixtures from the recorded table", buf);
}

void criterion_2() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240217);
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const CPFilter f = test::random_filter(rng, 1 + rep % 4);
    const WeightFunction w = test::random_weight(rng);
    const double reduced = residual_level(f, w);
    const double full = residual_level_oracle(f, w);
    const double byquad = quad_residual(f, w);
    worst = std::max(worst, test::rel_err(full, 2.0 * reduced));
    worst = std::max(worst, test::rel_err(full, byquad));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char buf[120];
  std::snprintf(buf, sizeof buf, "max relative spread %.2e over 50 pairs, %.1fs", worst,
                secs);
  report(2, worst < 1e-9 && secs < 30.0, "reduced/full/quadrature level equivalence",
         buf);
}

void criterion_3() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(777);
  const double h = 1e-6;
  double worst = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    const int q = 1 + rep % 6;
    const CPFilter f = test::random_filter(rng, q);
    const WeightFunction w = test::random_weight(rng);
    const ObjectiveValue obj = gradient(f, w);
    auto level_with = [&](int k, int comp, double delta) {
      std::vector<cplx> poles = f.poles();
      std::vector<cplx> coeffs = f.coeffs();
      cplx& target = comp < 2 ? poles[k] : coeffs[k];
      target += comp % 2 == 0 ? cplx(delta, 0.0) : cplx(0.0, delta);
      return detail::residual_level_raw(poles, coeffs, w, 0.0);
    };
    for (int k = 0; k < q; ++k)
      for (int comp = 0; comp < 4; ++comp) {
        const double fd = (level_with(k, comp, h) - level_with(k, comp, -h)) / (2.0 * h);
        const cplx g = comp < 2 ? obj.grad_w(k) : obj.grad_gamma(k);
        const double analytic = comp % 2 == 0 ? g.real() : g.imag();
        worst = std::max(worst, test::rel_err(analytic, fd));
      }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char buf[120];
  std::snprintf(buf, sizeof buf, "max relative error %.2e over 100 filters, %.1fs",
                worst, secs);
  report(3, worst < 1e-6 && secs < 60.0, "analytic CP gradient vs finite differences",
         buf);
}

void criterion_4() {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> ure(-1.5, 1.5);
  std::uniform_real_distribution<double> uim(0.15, 1.5);
  std::uniform_real_distribution<double> ub(-2.0, 2.0);
  double worst = 0.0;
  auto qk = [](auto f, double a, double b) { return test::quad(f, a, b, 1e-14); };
  for (int rep = 0; rep < 30; ++rep) {
    const cplx w1(ure(rng), uim(rng) * (rep % 2 ? 1.0 : -1.0));
    const cplx w2(ure(rng), uim(rng));
    double a = ub(rng), b = ub(rng);
    if (a > b) std::swap(a, b);
    if (b - a < 1e-3) b += 0.5;
    worst = std::max(worst, test::rel_err(int_lin(w1, a, b),
                                          qk([&](double t) { return 1.0 / (t - w1); }, a, b)));
    worst = std::max(worst, test::rel_err(int_sq(w1, a, b), qk([&](double t) {
                       const cplx d = t - w1;
                       return 1.0 / (d * d);
                     }, a, b)));
    worst = std::max(worst,
                     test::rel_err(int_pair(w1, w2, a, b), qk([&](double t) {
                       return 1.0 / ((t - w1) * (t - w2));
                     }, a, b)));
    worst = std::max(worst,
                     test::rel_err(int_sq_lin(w1, w2, a, b), qk([&](double t) {
                       const cplx d = t - w1;
                       return 1.0 / (d * d * (t - w2));
                     }, a, b)));
    worst = std::max(worst, test::rel_err(int_cube(w1, a, b), qk([&](double t) {
                       const cplx d = t - w1;
                       return 1.0 / (d * d * d);
                     }, a, b)));
    worst = std::max(worst,
                     test::rel_err(int_sq_sq(w1, w2, a, b), qk([&](double t) {
                       const cplx d1 = t - w1, d2 = t - w2;
                       return 1.0 / (d1 * d1 * d2 * d2);
                     }, a, b)));
    worst = std::max(worst, test::rel_err(int_quart(w1, a, b), qk([&](double t) {
                       const cplx d = t - w1;
                       return 1.0 / (d * d * d * d);
                     }, a, b)));
  }
  // Confluent-limit continuity of the paired kernels.
  const cplx w(0.6, 0.8);
  const cplx eps = 1e-7 * cplx(1.0, 1.0);
  const double c1 = std::abs(int_pair(w, w + eps, -1.0, 1.0) - int_sq(w, -1.0, 1.0));
  const double c2 =
      std::abs(int_sq_lin(w + eps, w, -1.0, 1.0) - int_cube(w, -1.0, 1.0));
  const double c3 = std::abs(int_sq_sq(w, w + eps, -1.0, 1.0) - int_quart(w, -1.0, 1.0));
  // The printed cube formula misses the antiderivative's factor 1/2.
  const cplx bb = 2.0 - w, aa = 0.0 - w;
  const double anti =
      std::abs(int_cube(w, 0.0, 2.0) - (-0.5) * (1.0 / (bb * bb) - 1.0 / (aa * aa)));
  const bool pass = worst < 1e-10 && c1 < 1e-6 && c2 < 1e-5 && c3 < 1e-4 && anti < 1e-15;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "max kernel error %.2e; confluence %.1e/%.1e/%.1e; antiderivative %.1e",
                worst, c1, c2, c3, anti);
  report(4, pass, "closed-form integrals vs adaptive quadrature", buf);
}

// Full dampened Gauss-Newton system assembled from the expanded atoms.
struct Atom {
  cplx coeff;
  cplx pole;
  int order;
};

cplx kernel_product(const WeightFunction& w, cplx p1, int o1, cplx p2, int o2) {
  if (o1 == 1 && o2 == 1) return weighted_pair(w, p1, p2);
  if (o1 == 2 && o2 == 1) return weighted_sq_lin(w, p1, p2);
  if (o1 == 1 && o2 == 2) return weighted_sq_lin(w, p2, p1);
  return weighted_sq_sq(w, p1, p2);
}

VectorXcd full_system_step(const CPFilter& f, const WeightFunction& w, double mu) {
  std::vector<std::vector<Atom>> atoms;
  for (int k = 0; k < f.q(); ++k)
    atoms.push_back({{f.coeffs()[k], f.poles()[k], 2}, {f.coeffs()[k], -f.poles()[k], 2}});
  for (int k = 0; k < f.q(); ++k)
    atoms.push_back({{1.0, f.poles()[k], 1}, {-1.0, -f.poles()[k], 1}});
  const int n2 = static_cast<int>(atoms.size());
  MatrixXcd C(n2, n2), S(n2, n2);
  for (int j = 0; j < n2; ++j)
    for (int k = 0; k < n2; ++k) {
      cplx cjk = 0.0, sjk = 0.0;
      for (const Atom& a : atoms[j])
        for (const Atom& b : atoms[k]) {
          cjk += std::conj(a.coeff) * b.coeff *
                 kernel_product(w, std::conj(a.pole), a.order, b.pole, b.order);
          sjk += a.coeff * b.coeff * kernel_product(w, a.pole, a.order, b.pole, b.order);
        }
      C(j, k) = cjk;
      S(j, k) = sjk;
    }
  const FullFilter full = expand_cp(f);
  VectorXcd rho(n2);
  for (int j = 0; j < n2; ++j) {
    cplx ph = 0.0, pf = 0.0;
    for (const Atom& a : atoms[j]) {
      const cplx cp = std::conj(a.pole);
      ph += std::conj(a.coeff) *
            (a.order == 1 ? weighted_lin(w, cp, true) : weighted_sq(w, cp, true));
      for (int i = 0; i < full.n(); ++i)
        pf += std::conj(a.coeff) * full.coeffs[i] *
              kernel_product(w, cp, a.order, full.poles[i], 1);
    }
    rho(j) = ph - pf;
  }
  const int n8 = 4 * n2;
  MatrixXcd H(n8, n8);
  auto put = [&](int br, int bc, const MatrixXcd& m) {
    H.block(br * n2, bc * n2, n2, n2) = m;
  };
  const MatrixXcd Cb = C.conjugate(), Sb = S.conjugate();
  put(0, 0, C);  put(0, 1, -Sb); put(0, 2, Sb);  put(0, 3, -C);
  put(1, 0, -S); put(1, 1, Cb);  put(1, 2, -Cb); put(1, 3, S);
  put(2, 0, S);  put(2, 1, -Cb); put(2, 2, Cb);  put(2, 3, -S);
  put(3, 0, -C); put(3, 1, Sb);  put(3, 2, -Sb); put(3, 3, C);
  VectorXcd rhs(n8);
  rhs.segment(0, n2) = rho;
  rhs.segment(n2, n2) = -rho.conjugate();
  rhs.segment(2 * n2, n2) = rho.conjugate();
  rhs.segment(3 * n2, n2) = -rho;
  MatrixXcd damped = H;
  damped.diagonal() += mu * H.diagonal().real().cast<cplx>();
  const VectorXcd dx = damped.partialPivLu().solve(rhs);
  return dx.segment(0, n2);
}

void criterion_5() {
  std::mt19937_64 rng(55);
  double worst = 0.0;
  for (int q = 1; q <= 4; ++q) {
    const CPFilter f = test::random_filter(rng, q);
    const WeightFunction w = test::random_weight(rng);
    for (double mu : {1e-3, 1.0, 1e3}) {
      const VectorXcd want = full_system_step(f, w, mu);
      const ReducedSystem sys = lm_reduced_matrix(f.poles(), f.coeffs(), w, mu);
      const VectorXcd got = sys.M.partialPivLu().solve(sys.rhs);
      worst = std::max(worst, (got - want).norm() / std::max(1.0, want.norm()));
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "max block mismatch %.2e", worst);
  report(5, worst < 1e-8, "reduced LM step vs full dampened system", buf);
}

void criterion_6() {
  const auto t0 = std::chrono::steady_clock::now();
  const WeightFunction unit = load_weight(fixture("weight_unit1000.json"));
  OptimizerConfig cfg;
  cfg.max_iters = 5000;
  const OptResult from_elliptic = levenberg_marquardt(elliptic_filter(4), unit, cfg);
  bool agree = true;
  for (int q : {2, 3, 4}) {
    OptimizerConfig c2;
    c2.max_iters = 8000;
    const OptResult a = levenberg_marquardt(gauss_filter(q), unit, c2);
    const OptResult b = levenberg_marquardt(elliptic_filter(q), unit, c2);
    for (int k = 0; k < q; ++k) {
      agree = agree && std::abs(a.filter.poles()[k] - b.filter.poles()[k]) < 1e-4;
      agree = agree && std::abs(a.filter.coeffs()[k] - b.filter.coeffs()[k]) < 1e-4;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool pass = from_elliptic.level <= 3.6e-4 &&
                    from_elliptic.iterations <= 5000 && agree && secs < 300.0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "elliptic-start level %.3e in %ld iterations; starts agree: %s; %.1fs",
                from_elliptic.level, from_elliptic.iterations, agree ? "yes" : "no",
                secs);
  report(6, pass, "optimization target and starting-position independence", buf);
}

void criterion_7() {
  const WeightFunction unit = load_weight(fixture("weight_unit1000.json"));
  bool pass = true;
  std::string detail;
  for (int q = 1; q <= 6; ++q) {
    const double fg = residual_level(gauss_filter(q), unit);
    const double fe = residual_level(elliptic_filter(q), unit);
    OptimizerConfig cfg;
    cfg.max_iters = 6000;
    const double fo = levenberg_marquardt(elliptic_filter(q), unit, cfg).level;
    pass = pass && fo < fe && fe < fg;
    char buf[64];
    std::snprintf(buf, sizeof buf, "q%d: %.1e<%.1e<%.1e ", q, fo, fe, fg);
    detail += buf;
  }
  report(7, pass, "residual ordering optimized < elliptic < gauss for q = 1..6", detail);
}

void criterion_8() {
  const WeightFunction unit = load_weight(fixture("weight_unit1000.json"));
  const CPFilter elliptic = elliptic_filter(4);

  OptimizerConfig box;
  box.box_lb = 0.0022;
  box.max_iters = 5000;
  // Feasibility at every accepted iterate: deterministic prefixes.
  bool feasible = true;
  for (long iters : {1L, 2L, 5L, 10L, 25L, 50L, 100L, 250L, 500L, 1000L, 5000L}) {
    box.max_iters = iters;
    const OptResult partial = levenberg_marquardt(elliptic, unit, box);
    feasible = feasible && min_im(partial.filter) >= 0.0022 - 1e-9;
  }
  box.max_iters = 5000;
  const OptResult constrained = levenberg_marquardt(elliptic, unit, box);

  OptimizerConfig unc;
  unc.max_iters = 5000;
  const OptResult unconstrained = levenberg_marquardt(elliptic, unit, unc);

  // 200 synthetic problems dense enough that the worst shifted-system
  // condition number is pinned by the smallest pole imaginary part.
  std::mt19937_64 rng(88);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  int identical = 0;
  bool unc_never_better = true;
  std::vector<double> k_box, k_ell, k_unc;
  for (int p = 0; p < 200; ++p) {
    std::vector<double> evs(5000);
    for (double& v : evs) v = u(rng);
    const Spectrum s(std::move(evs));
    const double c = u(rng) * 0.3;
    const IntervalMap interval(c - 1.0, c + 1.0);
    const double kb = worst_condition(constrained.filter, s, interval);
    const double ke = worst_condition(elliptic, s, interval);
    const double ku = worst_condition(unconstrained.filter, s, interval);
    k_box.push_back(kb);
    k_ell.push_back(ke);
    k_unc.push_back(ku);
    if (std::abs(kb - ke) <= 0.15 * std::max(kb, ke)) ++identical;
    if (ku < kb - 1e-9 || ku < ke - 1e-9) unc_never_better = false;
  }
  const auto curves = performance_profile(
      {{"box", k_box}, {"elliptic", k_ell}, {"unconstrained", k_unc}});
  // Profiles of box and elliptic coincide: both saturate by ratio 1.15.
  auto phi_at = [&](const ProfileCurve& c, double x) {
    double phi = 0.0;
    for (const auto& pt : c.points)
      if (pt.x <= x) phi = pt.phi;
    return phi;
  };
  const bool coincide = identical == 200 && phi_at(curves[0], 1.15) == 1.0 &&
                        phi_at(curves[1], 1.15) == 1.0;
  const bool pass = feasible && coincide && unc_never_better &&
                    min_im(constrained.filter) >= 0.0022 - 1e-9 &&
                    min_im(unconstrained.filter) < 0.0022;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "feasible: %s; profiles coincide on %d/200; unconstrained never better: "
                "%s (min Im %.2e vs bound %.4f)",
                feasible ? "yes" : "no", identical, unc_never_better ? "yes" : "no",
                min_im(unconstrained.filter), 0.0022);
  report(8, pass, "box-constrained optimization and condition-number profiles", buf);
}

void criterion_9() {
  const CPFilter gamma = load_filter(fixture("gamma_slise.json"));
  const CPFilter g = gauss_filter(4);
  bool pass = true;
  std::string losses;
  for (int i = 0; i <= 10; ++i) {
    const double x = 1.1 + 0.05 * i;
    const double fg = std::abs(eval(gamma, x));
    const double fgauss = std::abs(eval(g, x));
    if (!(fg < fgauss)) {
      pass = false;
      char buf[64];
      std::snprintf(buf, sizeof buf, "x=%.2f (%.1e vs %.1e) ", x, fg, fgauss);
      losses += buf;
    }
  }
  // The gauss filter crosses zero at t = 1.249 and 1.673; near those roots
  // |f_gauss| dips below any fixed competitor, so pointwise domination on
  // this grid is unattainable even though the band averages differ by an
  // order of magnitude (see the benchmark suite).
  report(9, pass, "gamma fixture below the gauss filter on [1.1, 1.6]",
         pass ? "" : "fails at " + losses + "(gauss zeros at 1.249, 1.673)");
}

void criterion_10() {
  const CPFilter g = gauss_filter(4);
  const bool gauss_ok = std::abs(eval(g, 0.0) - 1.0) <= 1e-6 &&
                        std::abs(eval(g, 1.0) - 0.5) <= 1e-2 &&
                        std::abs(eval(g, -1.0) - 0.5) <= 1e-2;
  const CPFilter e = elliptic_filter(4);
  const double mi = min_im(e);
  bool equi = true;
  const auto ext = local_extrema(e, 1.001, 10.0);
  for (size_t i = 0; i + 1 < ext.size(); ++i) {
    const double a = std::abs(ext[i].second);
    const double b = std::abs(ext[i + 1].second);
    equi = equi && std::abs(a - b) <= 0.05 * std::max(a, b);
  }
  const bool pass =
      gauss_ok && std::abs(mi - 0.0022) <= 0.1 * 0.0022 && equi && ext.size() >= 3;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "gauss f(0)=%.8f f(1)=%.4f; elliptic min Im %.5f, %zu equioscillating "
                "extrema",
                eval(g, 0.0), eval(g, 1.0), mi, ext.size());
  report(10, pass, "seed filter contracts", buf);
}

void criterion_11() {
  const auto t0 = std::chrono::steady_clock::now();
  const CPFilter gamma = load_filter(fixture("gamma_slise.json"));
  const CPFilter gauss4 = gauss_filter(4);
  int wins = 0;
  bool all_ok = true;
  long max_gauss_iters = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    std::mt19937_64 rng(seed * 13);
    std::uniform_real_distribution<double> inner(-1.0, 1.0);
    std::uniform_real_distribution<double> band(1.15, 1.45);
    std::uniform_real_distribution<double> far(1.65, 4.0);
    std::vector<double> evs;
    for (int i = 0; i < 20; ++i) evs.push_back(inner(rng));
    for (int i = 0; i < 15; ++i) evs.push_back(band(rng));
    for (int i = 0; i < 15; ++i) evs.push_back(-band(rng));
    for (int i = 0; i < 75; ++i) evs.push_back(far(rng));
    for (int i = 0; i < 75; ++i) evs.push_back(-far(rng));
    std::sort(evs.begin(), evs.end());
    const DenseHermitian A = with_spectrum(evs, seed * 7 + 1);
    const IntervalMap interval(-1.0, 1.0);

    const SubspaceResult rg = subspace_iteration(A, interval, gauss4, 1.5, 1e-13, 40, seed);
    const SubspaceResult rs = subspace_iteration(A, interval, gamma, 1.5, 1e-13, 40, seed);
    max_gauss_iters = std::max(max_gauss_iters, rg.iterations);
    if (!rg.converged || rg.iterations > 6 || !rs.converged) all_ok = false;
    if (rs.iterations <= rg.iterations) ++wins;

    // Recovered pairs against the dense oracle.
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(A.matrix(), Eigen::EigenvaluesOnly);
    std::vector<double> inside;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
      if (es.eigenvalues()(i) >= -1.0 && es.eigenvalues()(i) <= 1.0)
        inside.push_back(es.eigenvalues()(i));
    if (static_cast<size_t>(rg.eigenvalues.size()) != inside.size()) all_ok = false;
    const double scale = A.matrix().norm();
    for (long i = 0; i < rg.eigenvalues.size() && all_ok; ++i)
      if (std::abs(rg.eigenvalues(i) - inside[i]) > 1e-10 * scale) all_ok = false;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool pass = all_ok && wins >= 16;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "gauss converged within %ld iterations everywhere; gamma wins %d/20; "
                "%.1fs",
                max_gauss_iters, wins, secs);
  report(11, pass, "subspace iteration at desk scale", buf);
}

void criterion_12() {
  std::mt19937_64 rng(66);
  std::normal_distribution<double> n1(-1.0, 0.2), n2(0.8, 0.25);
  std::vector<double> evs;
  for (int i = 0; i < 250; ++i) evs.push_back(n1(rng));
  for (int i = 0; i < 250; ++i) evs.push_back(n2(rng));
  const Spectrum s(std::move(evs));
  const auto problems = generate_intervals(s, 45, 0.05, 0.20);
  bool counts_ok = !problems.empty();
  for (const auto& p : problems) {
    const int m = s.count_in(p.a, p.b);
    counts_ok = counts_ok && m == p.m && m >= 0.05 * s.size() && m <= 0.20 * s.size();
  }
  const auto curves = performance_profile({{"f1", {1.0, 2.0}}, {"f2", {2.0, 1.0}}});
  const bool profile_ok = curves[0].points.size() == 2 && curves[0].points[0].x == 1.0 &&
                          curves[0].points[0].phi == 0.5 &&
                          curves[0].points[1].x == 2.0 && curves[0].points[1].phi == 1.0;
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu intervals, counts exact: %s; profile example: %s",
                problems.size(), counts_ok ? "yes" : "no", profile_ok ? "yes" : "no");
  report(12, counts_ok && profile_ok, "benchmark harness", buf);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria failed\n", failures);
  return 1;
}
