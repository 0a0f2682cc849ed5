#include "bzeta/regprod.hpp"

#include <cmath>
#include <limits>

namespace bzeta {

double comparison_sequence(const ComparisonData& data, int n) {
  if (n < 1) throw std::domain_error("comparison_sequence: requires n >= 1");
  const double x = n + data.u;
  return std::log(data.a_seq(n) / (data.scale * x * x));
}

BaseInvariants base_zeta_invariants(double scale, double u) {
  if (!(scale > 0.0) || !(u > -1.0))
    throw std::domain_error("base_zeta_invariants: requires scale > 0, u > -1");
  BaseInvariants b;
  b.value0 = -0.5 - u;
  b.deriv0 = -std::log(scale) * b.value0 + 2.0 * hurwitz_zeta_deriv0(1.0 + u);
  return b;
}

ProductConstant product_constant(const ComparisonData& data, double abs_tol) {
  if (!(data.scale > 0.0) || !(data.u > -1.0))
    throw std::domain_error("product_constant: requires scale > 0, u > -1");

  const double accel = data.kummer2 * hurwitz_zeta(2.0, 1.0 + data.u) +
                       data.kummer4 * hurwitz_zeta(4.0, 1.0 + data.u);

  auto partial = [&](int N) {
    double sum = 0.0, comp = 0.0;
    for (int n = 1; n <= N; ++n) {
      const double x = n + data.u;
      const double x2 = x * x;
      const double r =
          comparison_sequence(data, n) - data.kummer2 / x2 - data.kummer4 / (x2 * x2);
      const double y = r - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    return sum;
  };

  int N = 1000;
  double prev = partial(N);
  for (int it = 0; it < 7; ++it) {
    N *= 2;
    const double cur = partial(N);
    const double err = std::fabs(cur - prev);
    if (err <= abs_tol) {
      if (std::fabs(comparison_sequence(data, N)) > 1e-3)
        throw numeric_error("product_constant: c_n does not decay; "
                            "comparison hypotheses violated");
      return {cur + accel, err + 1e-15 * std::fabs(cur + accel), N};
    }
    prev = cur;
  }
  throw numeric_error("product_constant: accuracy target not reached");
}

ComparisonData make_comparison(const OperatorParams& params) {
  params.validate();
  const double nu = params.nu, l = params.l;
  const double q2 = params.q * params.q;
  const double mu = 4.0 * nu * nu;
  const double kap = (mu - 1.0) / 8.0;
  const double kap2 = 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * 512.0);
  const double w = l * l * q2 - 2.0 * kap;  // l^2 q^2 + 1/4 - nu^2
  const double e = kap * kap - 2.0 * kap2;

  ComparisonData d;
  d.a_seq = [nu, l, q2](int n) {
    const double lam = shared_zeros(nu, n)[n] / l;
    return lam * lam + q2;
  };
  d.scale = (kPi / l) * (kPi / l);
  d.u = 0.5 * (nu - 0.5);
  d.kummer2 = w / (kPi * kPi);
  d.kummer4 = (e - 0.5 * w * w) / (kPi * kPi * kPi * kPi);
  return d;
}

double log_product_constant_closed_form(const OperatorParams& params) {
  params.validate();
  const double nu = params.nu;
  const double lq = params.l * params.q;
  const double common = 2.0 * log_gamma(0.5 * (nu + 1.5)) + nu * std::log(kPi) -
                        0.5 * std::log(2.0);
  if (lq == 0.0)
    return -nu * std::log(2.0) - log_gamma(nu + 1.0) + common;
  return log_bessel_i(nu, lq) - nu * std::log(lq) + common;
}

ZetaInvariants invariants_via_comparison(const OperatorParams& params) {
  params.validate();
  const ComparisonData cmp = make_comparison(params);
  const BaseInvariants base = base_zeta_invariants(cmp.scale, cmp.u);
  const ProductConstant c = product_constant(cmp);

  ZetaInvariants inv;
  inv.value0 = base.value0;
  inv.deriv0 = base.deriv0 - c.log_value;
  inv.log_det = -inv.deriv0;
  inv.route = Route::comparison;
  inv.err = c.err + 1e-13 * (1.0 + std::fabs(inv.deriv0));
  if (inv.log_det > 709.0) {
    inv.det = std::numeric_limits<double>::infinity();
    inv.det_overflow = true;
  } else {
    inv.det = std::exp(inv.log_det);
  }
  return inv;
}

}  // namespace bzeta
