// Copyright (c) 2026 the rfopt authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "rfopt/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>

#include "rfopt/benchmark.hpp"
#include "rfopt/io.hpp"
#include "rfopt/objective.hpp"
#include "rfopt/optimizer.hpp"
#include "rfopt/seeds.hpp"
#include "rfopt/subspace.hpp"

namespace rfopt::cli {

namespace {

CPFilter seed_by_name(const std::string& type, int q) {
  if (type == "gauss") return gauss_filter(q);
  if (type == "trapezoid") return trapezoidal_filter(q);
  if (type == "elliptic") return elliptic_filter(q);
  return load_filter(type);  // treat as a filter file path
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out.precision(17);
  return out;
}

int dispatch(int argc, const char* const* argv) {
  CLI::App app{"rational spectral-projection filter design and evaluation"};
  app.require_subcommand(1);

  // seed
  auto* seed = app.add_subcommand("seed", "construct a starting filter");
  std::string seed_type = "gauss";
  int seed_q = 4;
  std::string seed_out;
  seed->add_option("--type", seed_type, "gauss|trapezoid|elliptic")
      ->check(CLI::IsMember({"gauss", "trapezoid", "elliptic"}));
  seed->add_option("--q", seed_q, "poles per quadrant")->check(CLI::PositiveNumber);
  seed->add_option("--out", seed_out, "output filter file")->required();

  // optimize
  auto* opt = app.add_subcommand("optimize", "optimize a filter under a weight");
  std::string opt_start = "elliptic";
  std::string opt_weights;
  std::string opt_method = "lm";
  std::string opt_out;
  std::string opt_trace;
  double opt_penalty = 0.0;
  double opt_box = -1.0;
  int opt_q = 4;
  long opt_max_iters = 0;
  double opt_grad_tol = 1e-10;
  double opt_level_tol = 1e-14;
  opt->add_option("--start", opt_start, "gauss|trapezoid|elliptic or a filter file");
  opt->add_option("--weights", opt_weights, "weight file")->required();
  opt->add_option("--method", opt_method, "gd|lm")->check(CLI::IsMember({"gd", "lm"}));
  opt->add_option("--penalty", opt_penalty, "steepness penalty parameter c");
  opt->add_option("--box", opt_box, "lower bound on pole imaginary parts");
  opt->add_option("--q", opt_q, "poles per quadrant for named starts");
  opt->add_option("--max-iters", opt_max_iters, "iteration limit (0 = method default)");
  opt->add_option("--grad-tol", opt_grad_tol, "gradient norm tolerance");
  opt->add_option("--level-tol", opt_level_tol, "relative level-change tolerance");
  opt->add_option("--out", opt_out, "output filter file")->required();
  opt->add_option("--trace", opt_trace, "per-iteration CSV (iter,level,grad_norm,step)");

  // eval
  auto* ev = app.add_subcommand("eval", "tabulate filter values");
  std::string ev_filter, ev_out;
  double ev_lo = -3.0, ev_hi = 3.0;
  int ev_n = 601;
  ev->add_option("--filter", ev_filter)->required();
  ev->add_option("--lo", ev_lo);
  ev->add_option("--hi", ev_hi);
  ev->add_option("--n", ev_n, "grid points")->check(CLI::Range(2, 100000000));
  ev->add_option("--out", ev_out, "CSV output t,f")->required();

  // residual
  auto* resid = app.add_subcommand("residual", "residual level of a filter");
  std::string rs_filter, rs_weights;
  resid->add_option("--filter", rs_filter)->required();
  resid->add_option("--weights", rs_weights)->required();

  // check
  auto* chk = app.add_subcommand("check", "weight/filter guideline reports");
  std::string ck_filter, ck_weights;
  double ck_eps_max = 0.2;
  double ck_osc = 0.12;
  chk->add_option("--filter", ck_filter)->required();
  chk->add_option("--weights", ck_weights)->required();
  chk->add_option("--eps-max", ck_eps_max, "guideline 2 probe range");
  chk->add_option("--oscillation", ck_osc, "guideline 3 threshold");

  // tau
  auto* tau = app.add_subcommand("tau", "convergence rate on a spectrum");
  std::string tau_filter, tau_spectrum;
  std::vector<double> tau_interval;
  double tau_pfactor = 1.5;
  tau->add_option("--filter", tau_filter)->required();
  tau->add_option("--spectrum", tau_spectrum)->required();
  tau->add_option("--interval", tau_interval, "endpoints a b")->expected(2)->required();
  tau->add_option("--pfactor", tau_pfactor);

  // intervals
  auto* iv = app.add_subcommand("intervals", "benchmark intervals from a spectrum");
  std::string iv_spectrum, iv_out;
  int iv_M = 45;
  double iv_fmin = 0.05, iv_fmax = 0.20, iv_pfactor = 1.5;
  iv->add_option("--spectrum", iv_spectrum)->required();
  iv->add_option("--M", iv_M, "density fit degree");
  iv->add_option("--fmin", iv_fmin);
  iv->add_option("--fmax", iv_fmax);
  iv->add_option("--pfactor", iv_pfactor);
  iv->add_option("--out", iv_out, "CSV output a,b,m,p")->required();

  // profile
  auto* prof = app.add_subcommand("profile", "performance profiles from metrics");
  std::string pf_metrics, pf_out;
  prof->add_option("--metrics", pf_metrics, "CSV input method,problem,metric")->required();
  prof->add_option("--out", pf_out, "CSV output method,x,phi")->required();

  // subspace
  auto* sub = app.add_subcommand("subspace", "filtered subspace iteration");
  std::string sb_matrix, sb_filter;
  std::vector<double> sb_interval;
  double sb_pfactor = 1.5, sb_tol = 1e-13;
  long sb_max_iters = 40;
  std::uint64_t sb_seed = 1;
  sub->add_option("--matrix", sb_matrix)->required();
  sub->add_option("--filter", sb_filter)->required();
  sub->add_option("--interval", sb_interval, "endpoints a b")->expected(2)->required();
  sub->add_option("--pfactor", sb_pfactor);
  sub->add_option("--tol", sb_tol);
  sub->add_option("--max-iters", sb_max_iters);
  sub->add_option("--seed", sb_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::cout.precision(12);
  if (*seed) {
    save_filter(seed_by_name(seed_type, seed_q), seed_out);
    return 0;
  }
  if (*opt) {
    OptimizerConfig cfg;
    cfg.method = opt_method == "gd" ? Method::GradientDescent : Method::LevenbergMarquardt;
    cfg.max_iters = opt_max_iters;
    cfg.grad_tol = opt_grad_tol;
    cfg.level_tol = opt_level_tol;
    cfg.penalty_c = opt_penalty;
    if (opt_box >= 0.0) cfg.box_lb = opt_box;
    const CPFilter start = seed_by_name(opt_start, opt_q);
    const WeightFunction w = load_weight(opt_weights);
    const OptResult res = optimize(start, w, cfg);
    save_filter(res.filter, opt_out);
    if (!opt_trace.empty()) {
      auto out = open_out(opt_trace);
      out << "iter,level,grad_norm,step\n";
      for (size_t i = 0; i < res.trace.size(); ++i)
        out << i << "," << res.trace[i].level << "," << res.trace[i].grad_norm << ","
            << res.trace[i].step << "\n";
    }
    std::cout << "level " << res.level << "\n"
              << "iterations " << res.iterations << "\n"
              << "termination " << to_string(res.reason) << "\n";
    return 0;
  }
  if (*ev) {
    const CPFilter f = load_filter(ev_filter);
    auto out = open_out(ev_out);
    out << "t,f\n";
    for (int i = 0; i < ev_n; ++i) {
      const double t = ev_lo + (ev_hi - ev_lo) * i / (ev_n - 1);
      out << t << "," << eval(f, t) << "\n";
    }
    return 0;
  }
  if (*resid) {
    const double level = residual_level(load_filter(rs_filter), load_weight(rs_weights));
    std::cout << "level " << level << "\n";
    return 0;
  }
  if (*chk) {
    const CPFilter f = load_filter(ck_filter);
    const WeightFunction w = load_weight(ck_weights);
    const GuidelineReport reports[] = {check_guideline1(f, w),
                                       check_guideline2(w, ck_eps_max),
                                       check_guideline3(f, ck_osc)};
    for (const auto& r : reports) {
      std::cout << "guideline " << r.id << ": " << (r.pass ? "PASS" : "FAIL");
      if (r.degenerate) std::cout << " (degenerate)";
      if (!r.note.empty()) std::cout << " - " << r.note;
      std::cout << "\n";
      for (const auto& [t, v] : r.offenders)
        std::cout << "  at " << t << ": " << v << "\n";
    }
    return 0;
  }
  if (*tau) {
    const Spectrum s = load_spectrum(tau_spectrum);
    const int m = s.count_in(tau_interval[0], tau_interval[1]);
    if (m < 1) throw InsufficientSpectrum("interval contains no eigenvalues");
    BenchmarkProblem prob{tau_interval[0], tau_interval[1], m,
                          static_cast<int>(std::ceil(tau_pfactor * m))};
    std::cout << "m " << m << "\np " << prob.p << "\ntau "
              << convergence_rate(load_filter(tau_filter), s, prob) << "\n";
    return 0;
  }
  if (*iv) {
    const Spectrum s = load_spectrum(iv_spectrum);
    const auto problems = generate_intervals(s, iv_M, iv_fmin, iv_fmax, iv_pfactor);
    auto out = open_out(iv_out);
    out << "a,b,m,p\n";
    for (const auto& pr : problems)
      out << pr.a << "," << pr.b << "," << pr.m << "," << pr.p << "\n";
    std::cout << "intervals " << problems.size() << "\n";
    return 0;
  }
  if (*prof) {
    std::ifstream in(pf_metrics);
    if (!in) throw ParseError("cannot open " + pf_metrics);
    std::string line;
    std::getline(in, line);  // header method,problem,metric
    std::vector<std::pair<std::string, std::vector<double>>> data;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto c1 = line.find(',');
      const auto c2 = line.find(',', c1 + 1);
      if (c1 == std::string::npos || c2 == std::string::npos)
        throw ParseError(pf_metrics + ": malformed row: " + line);
      const std::string method = line.substr(0, c1);
      const double value = std::stod(line.substr(c2 + 1));
      auto it = std::find_if(data.begin(), data.end(),
                             [&](const auto& kv) { return kv.first == method; });
      if (it == data.end()) {
        data.push_back({method, {}});
        it = std::prev(data.end());
      }
      it->second.push_back(value);
    }
    const auto curves = performance_profile(data);
    auto out = open_out(pf_out);
    out << "method,x,phi\n";
    for (const auto& c : curves)
      for (const auto& pt : c.points)
        out << c.method << "," << pt.x << "," << pt.phi << "\n";
    return 0;
  }
  if (*sub) {
    const DenseHermitian a = load_matrix(sb_matrix);
    const IntervalMap interval(sb_interval[0], sb_interval[1]);
    const SubspaceResult res =
        subspace_iteration(a, interval, load_filter(sb_filter), sb_pfactor, sb_tol,
                           sb_max_iters, sb_seed);
    std::cout << "iterations " << res.iterations << "\n"
              << "max_residual " << res.max_residual << "\n"
              << "converged " << (res.converged ? "yes" : "no") << "\n";
    for (long i = 0; i < res.eigenvalues.size(); ++i)
      std::cout << "eigenvalue " << res.eigenvalues(i) << "\n";
    if (!res.converged) throw SolveFailure("subspace iteration did not converge");
    return 0;
  }
  return 2;
}

}  // namespace

int run(int argc, const char* const* argv) {
  try {
    return dispatch(argc, argv);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace rfopt::cli
