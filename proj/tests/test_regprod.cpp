#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bzeta/regprod.hpp"

using namespace bzeta;

TEST_CASE("product constant reduces to sinh at nu = 1/2, l = pi") {
  // prod_n (1 + q^2/n^2) = sinh(pi q)/(pi q)
  for (double q : {0.3, 1.0, 5.0}) {
    OperatorParams p{0.5, q, kPi};
    const ProductConstant c = product_constant(make_comparison(p));
    const double want = std::log(std::sinh(kPi * q) / (kPi * q));
    CHECK(c.log_value == doctest::Approx(want).epsilon(1e-11));
    CHECK(std::fabs(c.log_value - want) <= 10.0 * c.err + 1e-13);
  }
}

TEST_CASE("accelerated product matches its closed form on a grid") {
  for (double nu : {0.0, 0.25, 1.0, 2.5}) {
    for (double q : {0.1, 1.0, 5.0}) {
      for (double l : {0.5, kPi}) {
        OperatorParams p{nu, q, l};
        const ProductConstant c = product_constant(make_comparison(p));
        CHECK(std::fabs(c.log_value - log_product_constant_closed_form(p)) < 1e-9);
      }
    }
  }
}

TEST_CASE("generic engine: shifted quadratic sequence, pinned reference") {
  // a_n = (n + 1/3)^2 + 1, b_n = (n + 1/3)^2;
  // zeta_a'(0) = -ln 2 pi + 2 ln |Gamma(4/3 + i)|, high-precision reference
  ComparisonData d;
  d.a_seq = [](int n) { return (n + 1.0 / 3.0) * (n + 1.0 / 3.0) + 1.0; };
  d.scale = 1.0;
  d.u = 1.0 / 3.0;
  d.kummer2 = 1.0;
  d.kummer4 = -0.5;
  const BaseInvariants base = base_zeta_invariants(d.scale, d.u);
  const ProductConstant c = product_constant(d);
  CHECK(base.deriv0 - c.log_value ==
        doctest::Approx(-3.021979810388710005).epsilon(1e-12));
}

TEST_CASE("base zeta invariants against Hurwitz facts") {
  const BaseInvariants b = base_zeta_invariants(4.0, 0.5);
  CHECK(b.value0 == doctest::Approx(-1.0).epsilon(1e-14));
  // zeta_b'(0) = -ln(scale) zeta_H(0, 1+u) + 2 zeta_H'(0, 1+u)
  const double want = std::log(4.0) + 2.0 * (std::lgamma(1.5) - 0.5 * kLn2Pi);
  CHECK(b.deriv0 == doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("comparison route equals the closed form, minus sign convention") {
  for (double nu : {0.0, 0.5, 2.5}) {
    OperatorParams p{nu, 1.0, 1.0};
    const ZetaInvariants cf = closed_form_invariants(p);
    const ZetaInvariants cm = invariants_via_comparison(p);
    CHECK(cm.value0 == doctest::Approx(cf.value0).epsilon(1e-13));
    CHECK(cm.deriv0 == doctest::Approx(cf.deriv0).epsilon(1e-10));

    // the opposite convention deriv0 = base + log C misses by exactly 2 log C
    const ComparisonData d = make_comparison(p);
    const double base = base_zeta_invariants(d.scale, d.u).deriv0;
    const double logc = product_constant(d).log_value;
    CHECK(std::fabs((base + logc) - cf.deriv0) ==
          doctest::Approx(2.0 * std::fabs(logc)).epsilon(1e-7));
  }
}

TEST_CASE("plus-log-C convention contradicts the closed form"
          * doctest::should_fail(true)) {
  OperatorParams p{1.0, 1.0, 1.0};
  const ComparisonData d = make_comparison(p);
  const double plus = base_zeta_invariants(d.scale, d.u).deriv0 +
                      product_constant(d).log_value;
  CHECK(plus == doctest::Approx(closed_form_invariants(p).deriv0).epsilon(1e-8));
}

TEST_CASE("q = 0 closed form is the analytic limit") {
  OperatorParams p{1.2, 0.0, 2.0};
  const double at0 = log_product_constant_closed_form(p);
  p.q = 1e-7;
  CHECK(log_product_constant_closed_form(p) == doctest::Approx(at0).epsilon(1e-9));
}

TEST_CASE("non-convergent comparison data is rejected") {
  ComparisonData d;
  d.a_seq = [](int n) { return 2.0 * (n + 0.5) * (n + 0.5); };  // ratio -> 2
  d.scale = 1.0;
  d.u = 0.5;
  CHECK_THROWS_AS(product_constant(d), numeric_error);
}
