// Copyright (c) 2026 the rfopt authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "rfopt/subspace.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <random>

namespace rfopt {

DenseHermitian::DenseHermitian(MatrixXcd a) : a_(std::move(a)) {
  if (a_.rows() != a_.cols()) throw ParseError("matrix must be square");
  const double scale = std::max(1.0, a_.cwiseAbs().maxCoeff());
  const double asym = (a_ - a_.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * scale)
    throw ParseError("matrix is not Hermitian within tolerance");
  a_ = 0.5 * (a_ + a_.adjoint().eval());
}

MatrixXcd apply_filter(const DenseHermitian& a, const MatrixXcd& y, const FullFilter& f) {
  const int n = a.order();
  MatrixXcd acc = MatrixXcd::Zero(n, y.cols());
  for (int i = 0; i < f.n(); ++i) {
    if (f.poles[i].imag() == 0.0) throw RealPole("filter pole on the real axis");
    MatrixXcd shifted = a.matrix();
    shifted.diagonal().array() -= f.poles[i];
    const MatrixXcd sol = shifted.partialPivLu().solve(y);
    if (!sol.allFinite()) throw SolveFailure("shifted solve produced non-finite values");
    acc += f.coeffs[i] * sol;
  }
  return acc;
}

RitzPairs rayleigh_ritz(const DenseHermitian& a, const MatrixXcd& x, int min_rank) {
  Eigen::ColPivHouseholderQR<MatrixXcd> qr(x);
  qr.setThreshold(1e-12);
  const int rank = static_cast<int>(qr.rank());
  if (rank < min_rank) throw RankCollapse("iterate block lost rank");
  MatrixXcd qfull = qr.householderQ();
  const MatrixXcd q = qfull.leftCols(rank);
  const MatrixXcd b = q.adjoint() * a.matrix() * q;
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(b);
  if (es.info() != Eigen::Success) throw SolveFailure("projected eigensolve failed");
  return {es.eigenvalues(), q * es.eigenvectors()};
}

SubspaceResult subspace_iteration(const DenseHermitian& a, const IntervalMap& interval,
                                  const CPFilter& f, double p_factor, double tol,
                                  long max_iters, std::uint64_t seed, int m) {
  const int n = a.order();
  if (m <= 0) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(a.matrix(), Eigen::EigenvaluesOnly);
    m = 0;
    for (int i = 0; i < n; ++i)
      if (es.eigenvalues()(i) >= interval.a && es.eigenvalues()(i) <= interval.b) ++m;
  }
  if (m < 1) throw InsufficientSpectrum("interval contains no eigenvalues");
  const int p = std::min(n, static_cast<int>(std::ceil(p_factor * m)));

  const FullFilter mapped = map_interval(expand_cp(f), interval);
  const double a_norm = a.matrix().norm();

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  MatrixXcd y(n, p);
  for (int j = 0; j < p; ++j)
    for (int i = 0; i < n; ++i) y(i, j) = normal(rng);

  SubspaceResult res;
  res.seed = seed;
  for (long it = 1; it <= max_iters; ++it) {
    const MatrixXcd x = apply_filter(a, y, mapped);
    const RitzPairs ritz = rayleigh_ritz(a, x, m);
    std::vector<std::pair<double, int>> inside;  // (residual, index)
    for (int i = 0; i < ritz.values.size(); ++i) {
      if (ritz.values(i) < interval.a || ritz.values(i) > interval.b) continue;
      const VectorXcd v = ritz.vectors.col(i);
      inside.emplace_back((a.matrix() * v - ritz.values(i) * v).norm() / a_norm, i);
    }
    res.iterations = it;
    // Spurious Ritz values (mixtures of exterior eigenvectors) can linger
    // inside the interval; convergence is judged on the m wanted pairs,
    // identified as the inside pairs of smallest residual.
    if (static_cast<int>(inside.size()) >= m) {
      std::sort(inside.begin(), inside.end());
      inside.resize(m);
      res.max_residual = inside.back().first;
      if (res.max_residual <= tol) {
        std::sort(inside.begin(), inside.end(), [&](const auto& l, const auto& r) {
          return ritz.values(l.second) < ritz.values(r.second);
        });
        res.converged = true;
        res.eigenvalues.resize(m);
        res.eigenvectors.resize(n, m);
        for (int k = 0; k < m; ++k) {
          res.eigenvalues(k) = ritz.values(inside[k].second);
          res.eigenvectors.col(k) = ritz.vectors.col(inside[k].second);
        }
        return res;
      }
    } else if (!inside.empty()) {
      res.max_residual = std::max_element(inside.begin(), inside.end())->first;
    }
    y = ritz.vectors;
  }
  res.converged = false;  // partial result, flagged
  return res;
}

}  // namespace rfopt
