// Copyright (c) 2026 the rfopt authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rfopt/seeds.hpp"
#include "support.hpp"

using namespace rfopt;

TEST_CASE("complete elliptic integral against golden values") {
  // Golden values produced by:
  //   scipy.special.ellipk(k**2) for k in (0.1, 0.5, 0.9, 0.99, 0.9999)
  const double ks[] = {0.1, 0.5, 0.9, 0.99, 0.9999};
  const double golden[] = {1.574745561517356, 1.685750354812596, 2.280549138422770,
                           3.356600523361192, 5.645148216829873};
  for (int i = 0; i < 5; ++i)
    CHECK(detail::elliptic_K(ks[i]) == doctest::Approx(golden[i]).epsilon(1e-13));
}

TEST_CASE("jacobi sn/cn against golden values") {
  // Golden values produced by:
  //   scipy.special.ellipj(u, k**2)
  struct Row {
    double u, k, sn, cn;
  };
  const Row rows[] = {
      {0.3, 0.5, 0.294465551549556, 0.955662094545251},
      {1.2, 0.9, 0.855256569102854, 0.518204786745949},
      {0.8, 0.99, 0.665115023399976, 0.746740922708572},
      {2.0, 0.999, 0.964437548031693, 0.264310832064475},
      {0.5, 0.1, 0.479251643602810, 0.877677538794292},
      {1.7, 0.7, 0.994573344513199, 0.104037793055362},
  };
  for (const Row& r : rows) {
    double sn, cn;
    detail::jacobi_sn_cn(r.u, r.k, sn, cn);
    CHECK(sn == doctest::Approx(r.sn).epsilon(1e-12));
    CHECK(cn == doctest::Approx(r.cn).epsilon(1e-12));
  }
  // sn(K, k) = 1, cn(K, k) = 0.
  double sn, cn;
  detail::jacobi_sn_cn(detail::elliptic_K(0.8), 0.8, sn, cn);
  CHECK(sn == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(cn) < 1e-10);
}

TEST_CASE("gauss-legendre nodes and weights") {
  std::vector<double> x, w;
  detail::gauss_legendre(16, x, w);
  double sum = 0.0, integral_x2 = 0.0;
  for (int i = 0; i < 16; ++i) {
    sum += w[i];
    integral_x2 += w[i] * x[i] * x[i];
    if (i > 0) CHECK(x[i] > x[i - 1]);
  }
  CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(integral_x2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  // Exactness up to degree 31: int x^30 = 2/31.
  double hi = 0.0;
  for (int i = 0; i < 16; ++i) hi += w[i] * std::pow(x[i], 30);
  CHECK(hi == doctest::Approx(2.0 / 31.0).epsilon(1e-12));
}

TEST_CASE("gauss filter realizes the contour integral") {
  const CPFilter g = gauss_filter(4);
  CHECK(g.q() == 4);
  CHECK(std::abs(eval(g, 0.0) - 1.0) < 1e-6);
  CHECK(std::abs(eval(g, 1.0) - 0.5) < 1e-2);
  CHECK(std::abs(eval(g, -1.0) - 0.5) < 1e-2);
  CHECK(eval(g, 0.4) == doctest::Approx(eval(g, -0.4)).epsilon(1e-15));
  // Interior points map close to one, far exterior close to zero.
  CHECK(std::abs(eval(g, 0.5) - 1.0) < 1e-2);
  CHECK(std::abs(eval(g, 3.0)) < 1e-2);
  CHECK_NOTHROW(reduce_to_cp(expand_cp(g)));
}

TEST_CASE("trapezoidal filter hits the interior value") {
  const CPFilter t8 = trapezoidal_filter(8);
  CHECK(std::abs(eval(t8, 0.0) - 1.0) < 1e-6);
  CHECK(eval(t8, 0.7) == doctest::Approx(eval(t8, -0.7)).epsilon(1e-15));
  CHECK_NOTHROW(reduce_to_cp(expand_cp(t8)));
  const CPFilter t2 = trapezoidal_filter(2);
  CHECK(t2.q() == 2);
  for (cplx w : t2.poles()) CHECK(std::abs(std::abs(w) - 1.0) < 1e-14);
}

TEST_CASE("elliptic filter meets its contract at q = 4") {
  const CPFilter e = elliptic_filter(4);
  CHECK(e.q() == 4);
  double min_im = 1e300;
  for (cplx w : e.poles()) min_im = std::min(min_im, w.imag());
  CHECK(min_im == doctest::Approx(0.0022).epsilon(0.10));
  CHECK(std::abs(eval(e, 1.0) - 0.5) < 1e-2);
  CHECK(std::abs(eval(e, -1.0) - 0.5) < 1e-2);
  CHECK(eval(e, 0.3) == doctest::Approx(eval(e, -0.3)).epsilon(1e-15));

  // Equioscillation: exterior extremum magnitudes agree pairwise.
  const auto ext = local_extrema(e, 1.001, 10.0);
  REQUIRE(ext.size() >= 3);
  for (size_t i = 0; i + 1 < ext.size(); ++i) {
    const double a = std::abs(ext[i].second);
    const double b = std::abs(ext[i + 1].second);
    CHECK(std::abs(a - b) <= 0.05 * std::max(a, b));
  }
}

TEST_CASE("all three constructions yield valid CP filters across degrees") {
  for (int q : {1, 2, 3, 5, 6}) {
    CAPTURE(q);
    for (const CPFilter& f :
         {gauss_filter(q), trapezoidal_filter(q), elliptic_filter(q)}) {
      CHECK(f.q() == q);
      for (cplx w : f.poles()) {
        CHECK(w.real() > 0.0);
        CHECK(w.imag() > 0.0);
      }
    }
  }
}
