// Copyright (c) 2026 the rfopt authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "rfopt/optimizer.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace rfopt {

namespace {

constexpr double kMuMax = 1e12;
constexpr double kCondLimit = 1e14;

struct Iterate {
  std::vector<cplx> poles;
  std::vector<cplx> coeffs;
};

Iterate from_filter(const CPFilter& f) { return {f.poles(), f.coeffs()}; }

CPFilter to_filter(const Iterate& x) { return CPFilter(x.poles, x.coeffs); }

void project_box_raw(Iterate& x, const std::optional<double>& lb) {
  if (!lb) return;
  for (cplx& w : x.poles)
    if (w.imag() < *lb) w = cplx(w.real(), *lb);
}

Iterate stepped(const Iterate& x, const VectorXcd& dw, const VectorXcd& dg, double s) {
  Iterate y = x;
  for (size_t k = 0; k < y.poles.size(); ++k) {
    y.poles[k] += s * dw(static_cast<long>(k));
    y.coeffs[k] += s * dg(static_cast<long>(k));
  }
  return y;
}

long default_max_iters(Method m) {
  return m == Method::GradientDescent ? 2000000L : 20000L;
}

// Gram matrices of the CP derivative functions over y = [w; gamma]:
//   C_jk = <df/dy_j, df/dy_k>   (Hermitian; the H2 block matrix)
//   S_jk = int G (df/dy_j)(df/dy_k)  (complex symmetric; the H1 block matrix)
struct GramSystem {
  MatrixXcd C;
  MatrixXcd S;
  VectorXcd rho;  // <df/dy_k, h - f>, equals -1/2 of the packed gradient
};

GramSystem build_gram(const std::vector<cplx>& poles, const std::vector<cplx>& coeffs,
                      const WeightFunction& w, double penalty_c) {
  const int q = static_cast<int>(poles.size());
  const AssembledSystem s = assemble(poles, w);
  const GradientSystem gr = assemble_grad(poles, w);
  const HessianSystem hs = assemble_hess(poles, w);
  const Eigen::Map<const VectorXcd> g(coeffs.data(), q);

  GramSystem out;
  out.C.resize(2 * q, 2 * q);
  out.S.resize(2 * q, 2 * q);

  const MatrixXcd dX = gr.gX - gr.gZ;
  const MatrixXcd dW = gr.gWbar - gr.gYbar;
  out.C.topLeftCorner(q, q) =
      2.0 * g.conjugate().asDiagonal() * (hs.ggX - hs.ggZ) * g.asDiagonal();
  out.C.topRightCorner(q, q) = 2.0 * g.conjugate().asDiagonal() * dX.adjoint();
  out.C.bottomLeftCorner(q, q) = 2.0 * dX * g.asDiagonal();
  out.C.bottomRightCorner(q, q) = 2.0 * (s.X - s.Z);

  out.S.topLeftCorner(q, q) =
      2.0 * g.asDiagonal() * (hs.ggWbar - hs.ggYbar) * g.asDiagonal();
  out.S.topRightCorner(q, q) = 2.0 * g.asDiagonal() * dW.transpose();
  out.S.bottomLeftCorner(q, q) = 2.0 * dW * g.asDiagonal();
  out.S.bottomRightCorner(q, q) = 2.0 * (s.W.conjugate() - s.Y.conjugate());

  const ObjectiveValue obj = detail::gradient_raw(poles, coeffs, w, penalty_c);
  out.rho.resize(2 * q);
  out.rho.head(q) = -0.5 * obj.grad_w;
  out.rho.tail(q) = -0.5 * obj.grad_gamma;
  return out;
}

double cond_estimate(const MatrixXcd& m) {
  Eigen::JacobiSVD<MatrixXcd> svd(m);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  if (smin <= 0.0 || !std::isfinite(smax)) return std::numeric_limits<double>::infinity();
  return smax / smin;
}

ReducedSystem reduce_gram(const GramSystem& gs, double mu, Damping damping) {
  const long n = gs.C.rows();
  MatrixXcd damp = MatrixXcd::Zero(n, n);
  if (damping == Damping::DiagH) {
    damp.diagonal() = gs.C.diagonal().real().cast<cplx>() * mu;
  } else {
    damp.diagonal().setConstant(mu);
  }
  const MatrixXcd A = 2.0 * gs.C + damp;          // coefficient of dy
  const MatrixXcd B = A.conjugate();              // coefficient of conj(dy)
  if (cond_estimate(B) > kCondLimit)
    throw SingularReduced("dampened Gauss-Newton system is numerically singular");
  const MatrixXcd Binv = B.inverse();
  ReducedSystem out;
  out.M = A - 4.0 * gs.S.conjugate() * Binv * gs.S;
  out.rhs = gs.rho - 2.0 * gs.S.conjugate() * Binv * gs.rho.conjugate();
  if (cond_estimate(out.M) > kCondLimit)
    throw SingularReduced("reduced system is numerically singular");
  return out;
}

}  // namespace

const char* to_string(Termination t) {
  switch (t) {
    case Termination::GradientTol: return "gradient tolerance reached";
    case Termination::LevelTol: return "level change below tolerance";
    case Termination::MaxIterations: return "iteration limit reached";
    case Termination::StepRejected: return "line search failed to find a descent step";
    case Termination::MuOverflow: return "dampening parameter overflow";
  }
  return "unknown";
}

ReducedSystem lm_reduced_matrix(const std::vector<cplx>& poles,
                                const std::vector<cplx>& coeffs, const WeightFunction& w,
                                double mu, Damping damping, double penalty_c) {
  detail::check_domain(poles);
  return reduce_gram(build_gram(poles, coeffs, w, penalty_c), mu, damping);
}

double backtracking_step(const CPFilter& f, const VectorXcd& dir_w,
                         const VectorXcd& dir_gamma, const WeightFunction& w,
                         const OptimizerConfig& cfg) {
  const Iterate x = from_filter(f);
  const ObjectiveValue obj = detail::gradient_raw(x.poles, x.coeffs, w, cfg.penalty_c);
  // Real inner product of gradient and direction over the 4q coordinates.
  const double slope = (obj.grad_w.conjugate().cwiseProduct(dir_w).sum() +
                        obj.grad_gamma.conjugate().cwiseProduct(dir_gamma).sum())
                           .real();
  double s = 1.0;
  while (true) {
    bool ok = false;
    try {
      const Iterate y = stepped(x, dir_w, dir_gamma, s);
      const double fy = detail::residual_level_raw(y.poles, y.coeffs, w, cfg.penalty_c);
      ok = fy < obj.value + 0.5 * s * slope;
    } catch (const DomainEscape&) {
      ok = false;
    }
    if (ok) return s;
    s *= 0.5;
    if (s < 1e-12) throw StepRejected("backtracking line search underflow");
  }
}

OptResult gradient_descent(const CPFilter& start, const WeightFunction& w,
                           const OptimizerConfig& cfg) {
  const long max_iters = cfg.max_iters > 0 ? cfg.max_iters : default_max_iters(Method::GradientDescent);
  Iterate x = from_filter(start);
  project_box_raw(x, cfg.box_lb);
  ObjectiveValue obj = detail::gradient_raw(x.poles, x.coeffs, w, cfg.penalty_c);

  OptResult res{to_filter(x), obj.value, 0, {}, Termination::MaxIterations};
  res.trace.push_back({obj.value, obj.grad_norm(), 0.0});

  for (long it = 1; it <= max_iters; ++it) {
    if (obj.grad_norm() < cfg.grad_tol) {
      res.reason = Termination::GradientTol;
      break;
    }
    const VectorXcd dw = -obj.grad_w;
    const VectorXcd dg = -obj.grad_gamma;
    const double slope = -(obj.grad_w.squaredNorm() + obj.grad_gamma.squaredNorm());
    double s = 1.0;
    bool accepted = false;
    double fy = obj.value;
    Iterate y;
    while (s >= 1e-12) {
      try {
        y = stepped(x, dw, dg, s);
        project_box_raw(y, cfg.box_lb);
        fy = detail::residual_level_raw(y.poles, y.coeffs, w, cfg.penalty_c);
        const bool armijo = fy < obj.value + 0.5 * s * slope;
        const bool decrease = fy < obj.value;
        if (cfg.box_lb ? decrease : armijo) {
          accepted = true;
          break;
        }
      } catch (const DomainEscape&) {
        // step left the admissible region; shrink
      }
      s *= 0.5;
    }
    if (!accepted) {
      res.reason = Termination::StepRejected;
      break;
    }
    const double prev = obj.value;
    x = y;
    obj = detail::gradient_raw(x.poles, x.coeffs, w, cfg.penalty_c);
    res.iterations = it;
    res.trace.push_back({obj.value, obj.grad_norm(), s});
    if (std::abs(prev - obj.value) < cfg.level_tol * std::max(1.0, std::abs(prev))) {
      res.reason = Termination::LevelTol;
      break;
    }
  }
  res.filter = to_filter(x);
  res.level = obj.value;
  return res;
}

OptResult levenberg_marquardt(const CPFilter& start, const WeightFunction& w,
                              const OptimizerConfig& cfg) {
  const long max_iters =
      cfg.max_iters > 0 ? cfg.max_iters : default_max_iters(Method::LevenbergMarquardt);
  Iterate x = from_filter(start);
  project_box_raw(x, cfg.box_lb);
  ObjectiveValue obj = detail::gradient_raw(x.poles, x.coeffs, w, cfg.penalty_c);

  OptResult res{to_filter(x), obj.value, 0, {}, Termination::MaxIterations};
  res.trace.push_back({obj.value, obj.grad_norm(), cfg.mu0});

  double mu = cfg.mu0;
  long it = 0;
  bool have_gram = false;
  GramSystem gram;
  while (it < max_iters) {
    if (obj.grad_norm() < cfg.grad_tol) {
      res.reason = Termination::GradientTol;
      break;
    }
    if (!have_gram) {
      gram = build_gram(x.poles, x.coeffs, w, cfg.penalty_c);
      have_gram = true;
    }
    ++it;
    bool accepted = false;
    Iterate y;
    double fy = obj.value;
    try {
      const ReducedSystem sys = reduce_gram(gram, mu, cfg.damping);
      const VectorXcd dy = sys.M.partialPivLu().solve(sys.rhs);
      const int q = static_cast<int>(x.poles.size());
      y = stepped(x, dy.head(q), dy.tail(q), 1.0);
      project_box_raw(y, cfg.box_lb);
      fy = detail::residual_level_raw(y.poles, y.coeffs, w, cfg.penalty_c);
      accepted = fy < obj.value;
    } catch (const SingularReduced&) {
      accepted = false;
    } catch (const DomainEscape&) {
      accepted = false;
    }
    if (accepted) {
      const double prev = obj.value;
      x = y;
      obj = detail::gradient_raw(x.poles, x.coeffs, w, cfg.penalty_c);
      have_gram = false;
      mu *= cfg.mu_down;
      res.iterations = it;
      res.trace.push_back({obj.value, obj.grad_norm(), mu});
      if (std::abs(prev - obj.value) < cfg.level_tol * std::max(1.0, std::abs(prev))) {
        res.reason = Termination::LevelTol;
        break;
      }
    } else {
      mu *= cfg.mu_up;
      if (mu > kMuMax) {
        res.reason = Termination::MuOverflow;
        break;
      }
    }
  }
  res.filter = to_filter(x);
  res.level = obj.value;
  return res;
}

OptResult optimize(const CPFilter& start, const WeightFunction& w,
                   const OptimizerConfig& cfg) {
  return cfg.method == Method::GradientDescent ? gradient_descent(start, w, cfg)
                                               : levenberg_marquardt(start, w, cfg);
}

CPFilter project_box(const CPFilter& f, double lb) {
  if (lb < 0.0) throw InvalidFilter("box lower bound must be non-negative");
  Iterate x = from_filter(f);
  std::optional<double> b = lb;
  project_box_raw(x, b);
  return to_filter(x);
}

}  // namespace rfopt
