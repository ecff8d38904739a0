// Copyright (c) 2026 the rfopt authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

#include "rfopt/filter.hpp"
#include "rfopt/integrals.hpp"

namespace rfopt {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Dense Hermitian matrix; symmetrized on construction after a hermiticity
// check at 1e-12 relative.
class DenseHermitian {
 public:
  explicit DenseHermitian(MatrixXcd a);
  const MatrixXcd& matrix() const { return a_; }
  int order() const { return static_cast<int>(a_.rows()); }

 private:
  MatrixXcd a_;
};

// X = sum_i a_i (A - z_i I)^{-1} Y, one factorization and solve per pole.
MatrixXcd apply_filter(const DenseHermitian& a, const MatrixXcd& y, const FullFilter& f);

struct RitzPairs {
  VectorXd values;    // ascending
  MatrixXcd vectors;  // orthonormal columns
};

// Orthonormalizes X (rank-revealing) and solves the projected Hermitian
// problem; throws RankCollapse when the block loses rank below min_rank.
RitzPairs rayleigh_ritz(const DenseHermitian& a, const MatrixXcd& x, int min_rank = 1);

struct SubspaceResult {
  VectorXd eigenvalues;  // inside [a,b], ascending
  MatrixXcd eigenvectors;
  long iterations = 0;
  double max_residual = 0.0;
  bool converged = false;
  std::uint64_t seed = 0;
};

// Filtered subspace iteration with Rayleigh-Ritz projection. `m` is the
// number of eigenvalues inside the interval; pass 0 to have it computed
// from a dense eigensolve (desk-scale convenience).
SubspaceResult subspace_iteration(const DenseHermitian& a, const IntervalMap& interval,
                                  const CPFilter& f, double p_factor = 1.5,
                                  double tol = 1e-13, long max_iters = 40,
                                  std::uint64_t seed = 1, int m = 0);

}  // namespace rfopt
