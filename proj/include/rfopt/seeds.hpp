// Copyright (c) 2026 the rfopt authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "rfopt/filter.hpp"

namespace rfopt {

// Contour filter from 2q-node Gauss-Legendre quadrature of the Cauchy
// integral on the upper half of the unit circle (circle circumscribing
// [-1,1], center 0, radius 1), CP-reduced to its q first-quadrant poles.
CPFilter gauss_filter(int q);

// Same contour with equispaced midpoint nodes (no nodes on the real axis).
CPFilter trapezoidal_filter(int q);

// Zolotarev-type best uniform rational approximation of the indicator:
// the elliptic sign-function approximant composed with the Moebius
// transport x = (1 - t^2)/(1 + t^2), which fixes f(+-1) = 1/2 exactly.
// The transition-band modulus per degree is calibrated so the q = 4 filter
// has its smallest pole imaginary part at 0.0022.
CPFilter elliptic_filter(int q);

namespace detail {

// Complete elliptic integral K(k) and Jacobi sn/cn via the descending
// Landen (AGM) transformation, 1e-15 termination.
double elliptic_K(double k);
void jacobi_sn_cn(double u, double k, double& sn, double& cn);

// Gauss-Legendre nodes and weights on [-1,1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace detail

}  // namespace rfopt
