#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bzeta/specfun.hpp"

using namespace bzeta;

TEST_CASE("first Bessel zeros against reference values") {
  CHECK(bessel_zero(0.0, 1) == doctest::Approx(2.404825557695773).epsilon(1e-13));
  CHECK(bessel_zero(0.0, 2) == doctest::Approx(5.520078110286311).epsilon(1e-13));
  CHECK(bessel_zero(1.0, 1) == doctest::Approx(3.831705970207512).epsilon(1e-13));
  CHECK(bessel_zero(2.0, 1) == doctest::Approx(5.135622301840683).epsilon(1e-13));
  CHECK(bessel_zero(0.5, 3) == doctest::Approx(3.0 * kPi).epsilon(1e-13));
}

TEST_CASE("half-integer order zeros are n pi") {
  const ZeroTable& tab = shared_zeros(0.5, 1000);
  for (int n = 1; n <= 1000; ++n)
    CHECK(std::fabs(tab[n] - n * kPi) < 1e-12 * n * kPi);
}

TEST_CASE("zeros of adjacent orders interlace") {
  for (double nu : {0.0, 0.3, 0.5, 1.0, 2.7}) {
    const ZeroTable& a = shared_zeros(nu, 501);
    const ZeroTable& b = shared_zeros(nu + 1.0, 500);
    for (int n = 1; n <= 500; ++n) {
      CHECK(a[n] < b[n]);
      CHECK(b[n] < a[n + 1]);
    }
  }
}

TEST_CASE("zero residuals stay inside the certificate") {
  for (double nu : {0.0, 0.25, 1.0, 3.7}) {
    const ZeroTable& tab = shared_zeros(nu, 300);
    for (int n = 1; n <= 300; n += 7) {
      const BesselJPair jp = bessel_j_pair(nu, tab[n]);
      CHECK(std::fabs(jp.value) <= 1e-10 * std::max(1.0, tab[n]) * std::fabs(jp.deriv));
    }
  }
}

TEST_CASE("series and large-x evaluations agree on overlap") {
  // series region ends at x = 7; force both paths via order shifts around it
  for (double nu : {0.6, 1.0, 1.5, 3.2}) {
    for (double x = 6.0; x <= 12.0; x += 0.37) {
      // recurrence J_{nu+2} = (2(nu+1)/x) J_{nu+1} - J_nu mixes the branches
      const double lhs = bessel_j(nu + 2.0, x);
      const double rhs = (2.0 * (nu + 1.0) / x) * bessel_j(nu + 1.0, x) - bessel_j(nu, x);
      CHECK(lhs == doctest::Approx(rhs).epsilon(5e-12));
    }
  }
}

TEST_CASE("J_1/2 is the explicit sine form") {
  for (double x : {0.5, 2.0, 7.3, 40.0, 250.0}) {
    const double want = std::sqrt(2.0 / (kPi * x)) * std::sin(x);
    CHECK(bessel_j(0.5, x) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("log I_nu reference values") {
  // ln I_0(50), high-precision reference
  CHECK(log_bessel_i(0.0, 50.0) ==
        doctest::Approx(47.127575501871804584).epsilon(1e-14));
  // I_{1/2}(x) = sqrt(2/(pi x)) sinh x, on the log scale for large x
  for (double x : {0.3, 1.0, 10.0, 300.0}) {
    const double want = 0.5 * std::log(2.0 / (kPi * x)) + x - std::log(2.0) +
                        std::log1p(-std::exp(-2.0 * x));
    CHECK(log_bessel_i(0.5, x) == doctest::Approx(want).epsilon(1e-13));
  }
}

TEST_CASE("log I_nu survives huge arguments") {
  // asymptotic x - ln(2 pi x)/2 dominates; sanity only
  const double v = log_bessel_i(1.0, 1e4);
  CHECK(v == doctest::Approx(1e4 - 0.5 * std::log(2.0 * kPi * 1e4)).epsilon(1e-4));
}

TEST_CASE("I ratio matches the log-derivative identity") {
  // d/dx ln I_nu = nu/x + I_{nu+1}/I_nu, checked by central differences
  for (double nu : {0.0, 0.5, 2.5}) {
    for (double x : {0.7, 3.0, 25.0}) {
      const double h = 1e-5 * x;
      const double fd = (log_bessel_i(nu, x + h) - log_bessel_i(nu, x - h)) / (2.0 * h);
      const double cf = nu / x + bessel_i_ratio(nu, x);
      CHECK(fd == doctest::Approx(cf).epsilon(1e-6));
    }
  }
}

TEST_CASE("Hurwitz zeta special values") {
  CHECK(hurwitz_zeta(2.0, 1.0) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-14));
  CHECK(hurwitz_zeta(-1.0, 1.0) == doctest::Approx(-1.0 / 12.0).epsilon(1e-12));
  for (double a : {0.25, 1.0, 2.5, 17.0})
    CHECK(hurwitz_zeta(0.0, a) == doctest::Approx(0.5 - a).epsilon(1e-13));
  // shift identity zeta_H(s, a) = a^-s + zeta_H(s, a+1)
  for (double s : {-0.5, 0.75, 2.0, 6.0})
    for (double a : {0.3, 1.2, 4.0})
      CHECK(hurwitz_zeta(s, a) ==
            doctest::Approx(std::pow(a, -s) + hurwitz_zeta(s, a + 1.0)).epsilon(1e-13));
}

TEST_CASE("Hurwitz zeta derivative at zero") {
  CHECK(hurwitz_zeta_deriv0(1.0) == doctest::Approx(-0.5 * kLn2Pi).epsilon(1e-14));
  // finite difference cross-check
  for (double a : {0.5, 1.0, 3.0}) {
    const double h = 1e-5;
    const double fd = (hurwitz_zeta(h, a) - hurwitz_zeta(-h, a)) / (2.0 * h);
    CHECK(fd == doctest::Approx(hurwitz_zeta_deriv0(a)).epsilon(1e-7));
  }
}

TEST_CASE("gamma_ratio agrees with the gamma function away from poles") {
  for (double nu : {0.0, 0.25, 1.0, 2.2}) {
    for (int k : {0, 1, 2, 3}) {
      const double den = nu - k + 0.5;
      if (den <= 0.0) continue;
      const double want = std::exp(log_gamma(nu + k + 0.5) - log_gamma(den));
      CHECK(gamma_ratio(nu, k) == doctest::Approx(want).epsilon(1e-12));
    }
  }
  // finite at the half-integer orders where Gamma(nu - k + 1/2) has a pole
  CHECK(gamma_ratio(0.5, 1) == doctest::Approx(0.0));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(bessel_zero(-1.0, 1), std::domain_error);
  CHECK_THROWS_AS(bessel_zero(0.0, 0), std::domain_error);
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, -1.0), std::domain_error);
  CHECK_THROWS_AS(log_bessel_i(0.0, -2.0), std::domain_error);
}
