#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "bzeta/heat_trace.hpp"

using namespace bzeta;

TEST_CASE("leading coefficients, displayed closed forms") {
  for (double nu : {0.0, 0.25, 0.5, 1.0, 2.5}) {
    for (double q : {0.0, 1.0, 5.0}) {
      for (double l : {0.5, 1.0, kPi}) {
        OperatorParams p{nu, q, l};
        CHECK(heat_coefficient(0, p) == doctest::Approx(l / (2.0 * kSqrtPi)).epsilon(1e-14));
        CHECK(heat_coefficient(1, p) == doctest::Approx(-0.5 * (nu + 0.5)).epsilon(1e-14));
        CHECK(heat_coefficient(2, p) ==
              doctest::Approx((nu * nu - 0.25 - l * l * q * q) / (2.0 * l * kSqrtPi))
                  .epsilon(1e-13));
        // the generator route must reproduce the same three
        const std::vector<double> gen = heat_coefficients(p, 2);
        for (int i = 0; i <= 2; ++i)
          CHECK(gen[i] == doctest::Approx(heat_coefficient(i, p)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("nu = 1/2 coefficients collapse to the exponential prefactor") {
  // spectrum is n^2 pi^2 / l^2 + q^2, so the trace is e^{-q^2 t} times the
  // free theta sum and a_i = (-q^2)^j/j! times {l/(2 sqrt(pi)), -1/2}.
  OperatorParams p{0.5, 2.0, 1.3};
  const std::vector<double> a = heat_coefficients(p, 7);
  const double q2 = p.q * p.q;
  double fj = 1.0;
  for (int j = 0; 2 * j + 1 <= 7; ++j) {
    const double w = std::pow(-q2, j) / fj;
    CHECK(a[2 * j] == doctest::Approx(w * p.l / (2.0 * kSqrtPi)).epsilon(1e-12));
    CHECK(a[2 * j + 1] == doctest::Approx(-0.5 * w).epsilon(1e-12));
    fj *= j + 1.0;
  }
}

TEST_CASE("generator value pinned at nu=1, q=1, l=1") {
  // verified independently against brute-force trace fits
  OperatorParams p{1.0, 1.0, 1.0};
  CHECK(heat_coefficient(3, p) == doctest::Approx(0.9375).epsilon(1e-12));
}

TEST_CASE("double-sum coefficient formula: agreement and failure modes") {
  // at nu = 1/2 every ratio factor vanishes and the double sums match
  OperatorParams ph{0.5, 1.5, 2.0};
  for (int i = 0; i <= 5; ++i)
    CHECK(heat_coefficient_lemma_sum(i, ph) ==
          doctest::Approx(heat_coefficient(i, ph)).epsilon(1e-11));

  // away from nu = 1/2 the sums disagree with the verified generator from
  // i = 3 on, under either choice of the odd leading constant; kept as a
  // pinned record of the discrepancy
  OperatorParams p{1.0, 1.0, 1.0};
  CHECK(heat_coefficient_lemma_sum(2, p) == doctest::Approx(heat_coefficient(2, p)).epsilon(1e-12));
  CHECK(std::fabs(heat_coefficient_lemma_sum(3, p, true) - heat_coefficient(3, p)) > 0.01);
  CHECK(std::fabs(heat_coefficient_lemma_sum(3, p, false) - heat_coefficient(3, p)) > 0.01);
  // while the displayed a_1 matches only the (nu+1/2) variant
  CHECK(heat_coefficient_lemma_sum(1, p, true) == doctest::Approx(-0.75).epsilon(1e-13));
  CHECK(heat_coefficient_lemma_sum(1, p, false) == doctest::Approx(-0.25).epsilon(1e-13));
}

TEST_CASE("trace value pinned against an independent evaluation") {
  CHECK(heat_trace(0.01, {0.0, 1.0, 1.0}) ==
        doctest::Approx(2.5376809060989662028).epsilon(1e-13));
}

TEST_CASE("nu = 1/2 trace equals the explicit theta sum") {
  OperatorParams p{0.5, 0.7, kPi};
  for (double t : {0.001, 0.05, 1.0}) {
    double want = 0.0;
    for (int n = 400; n >= 1; --n)
      want += std::exp(-t * (n * n + p.q * p.q));
    CHECK(heat_trace(t, p) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("exact q-shift factorization of the trace") {
  for (double nu : {0.0, 1.0, 2.5}) {
    OperatorParams p0{nu, 0.0, 1.0};
    OperatorParams pq{nu, 3.0, 1.0};
    for (double t : {0.01, 0.3}) {
      CHECK(heat_trace(t, pq, 1e-14) ==
            doctest::Approx(std::exp(-t * 9.0) * heat_trace(t, p0, 1e-14)).epsilon(1e-12));
    }
  }
}

TEST_CASE("small-t behavior follows the expansion") {
  OperatorParams p{0.25, 1.0, 1.0};
  const std::vector<double> a = heat_coefficients(p, 4);

  // Weyl term dominates
  const double t0 = 1e-4;
  CHECK(heat_trace(t0, p) == doctest::Approx(a[0] / std::sqrt(t0)).epsilon(0.02));

  // remainder after subtracting through i = 4 scales like t^2
  auto rem = [&](double t) {
    double s = heat_trace(t, p, 1e-14);
    for (int i = 0; i <= 4; ++i) s -= a[i] * std::pow(t, 0.5 * (i - 1));
    return s;
  };
  const double r1 = rem(4e-3), r2 = rem(1e-3);
  CHECK(std::fabs(r1 / r2) > 8.0);   // exact t^2 scaling would give 16
  CHECK(std::fabs(r1 / r2) < 32.0);
}

TEST_CASE("trace is decreasing in t") {
  OperatorParams p{1.0, 0.5, 2.0};
  double prev = heat_trace(1e-3, p);
  for (double t : {1e-2, 1e-1, 1.0, 5.0}) {
    const double cur = heat_trace(t, p);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("fitted coefficients recover the generator values") {
  std::vector<double> grid;
  for (int k = 0; k < 40; ++k)
    grid.push_back(1e-4 * std::pow(1000.0, k / 39.0));
  for (double nu : {0.0, 0.5, 2.5}) {
    OperatorParams p{nu, 1.0, kPi};
    const HeatExpansion fit = fit_heat_coefficients(p, grid, 4);
    for (int i = 0; i <= 2; ++i) {
      const double want = heat_coefficient(i, p);
      CHECK(std::fabs(fit.coeffs[i] - want) <= 3.0 * fit.std_err[i] + 1e-12);
      CHECK(fit.coeffs[i] == doctest::Approx(want).epsilon(0.01));
    }
  }
}

TEST_CASE("fit input validation") {
  OperatorParams p{0.0, 1.0, 1.0};
  std::vector<double> tiny{0.01, 0.02, 0.03};
  CHECK_THROWS_AS(fit_heat_coefficients(p, tiny, 4), std::domain_error);
  std::vector<double> bad{0.01, 0.02, 0.6, 0.04, 0.05, 0.07, 0.08, 0.09, 0.1, 0.2};
  CHECK_THROWS_AS(fit_heat_coefficients(p, bad, 4), std::domain_error);
  CHECK_THROWS_AS(heat_trace(-1.0, p), std::domain_error);
  CHECK_THROWS_AS(heat_trace(0.01, {-1.0, 0.0, 1.0}), std::domain_error);
}
