#include "bzeta/mellin_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "bzeta/quadrature.hpp"

namespace bzeta {

namespace {

double subtracted_sum(const MellinSplit& sp, double t) {
  const double rt = std::sqrt(t);
  double p = 1.0 / rt;  // t^{(i-1)/2}, starting at i = 0
  double sum = 0.0;
  for (int i = 0; i <= sp.order; ++i) {
    sum += sp.coeffs[i] * p;
    p *= rt;
  }
  return sum;
}

double small_t_remainder(const MellinSplit& sp, double t) {
  return heat_trace(t, sp.params, 1e-13) - subtracted_sum(sp, t);
}

double spectral_gap(const MellinSplit& sp) {
  const double lam1 = shared_zeros(sp.params.nu, 1)[1] / sp.params.l;
  return lam1 * lam1 + sp.params.q * sp.params.q;
}

/// M(s) = Gamma(s) z(s) with the truncation at t_floor and the upper cutoff
/// folded into err.
ValueWithError mellin_value(const MellinSplit& sp, double s) {
  double value = 0.0, err = 0.0;

  for (int i = 0; i <= sp.order; ++i) {
    const double ex = s + 0.5 * (i - 1);
    if (std::fabs(ex) < 1e-12)
      throw numeric_error("mellin_value: exponent too close to a pole term");
    value += sp.coeffs[i] * std::pow(sp.t_split, ex) / ex;
    // part of the continuation lost below t_floor when coeffs[i] is off
    err += sp.coeff_se[i] * std::pow(sp.t_floor, ex) / std::fabs(ex);
  }

  const double tau0 = std::sqrt(sp.t_floor), tau1 = std::sqrt(sp.t_split);
  // g is a difference of two ~a_0 t^{-1/2} sized quantities, so it carries
  // relative-rounding noise that t^{s-1} amplifies for s < 1/2; don't ask
  // the quadrature for more than that floor allows.
  const double f_floor = heat_trace(sp.t_floor, sp.params, 1e-13);
  const double noise = 1e-13 * f_floor * std::pow(sp.t_floor, std::min(s, 0.5));
  const QuadResult low = integrate(
      [&](double tau) {
        return 2.0 * std::pow(tau, 2.0 * s - 1.0) * small_t_remainder(sp, tau * tau);
      },
      tau0, tau1, std::max(sp.quad_tol, noise), 1e-13);
  value += low.value;
  err += low.err + noise;

  const double mu = spectral_gap(sp);
  const double T = (42.0 + 8.0 * std::max(s, 1.0)) / mu;
  const QuadResult high = integrate(
      [&](double t) {
        return std::pow(t, s - 1.0) * heat_trace(t, sp.params, 1e-14);
      },
      sp.t_split, T, sp.quad_tol, 1e-13);
  value += high.value;
  err += high.err;
  err += heat_trace(T, sp.params, 1e-14) * std::pow(T, s - 1.0) / mu;

  // below t_floor the remainder behaves like t^{order/2}
  err += std::fabs(small_t_remainder(sp, sp.t_floor) *
                   std::pow(sp.t_floor, s) / (s + 0.5 * sp.order));
  return {value, err};
}

}  // namespace

MellinSplit make_split(const OperatorParams& params, int order, bool fit_high) {
  params.validate();
  if (order < 2) throw std::domain_error("make_split: requires order >= 2");
  MellinSplit sp;
  sp.params = params;
  sp.order = order;
  sp.t_split = 1.0;
  sp.quad_tol = 1e-11;
  sp.fitted = false;

  const double c = 0.5 * params.nu - 0.25;
  const double lam_max = kPi * (8000.0 + c) / params.l;
  sp.t_floor = 36.0 / (lam_max * lam_max + params.q * params.q);

  sp.coeffs = heat_coefficients(params, order);
  sp.coeff_se.assign(order + 1, 0.0);
  if (fit_high && order >= 3) {
    constexpr int kPts = 40;
    std::vector<double> grid(kPts);
    for (int k = 0; k < kPts; ++k)
      grid[k] = 1e-4 * std::pow(1000.0, k / (kPts - 1.0));
    const HeatExpansion fit = fit_heat_coefficients(params, grid, order);
    for (int i = 3; i <= order; ++i) {
      sp.coeffs[i] = fit.coeffs[i];
      sp.coeff_se[i] = fit.std_err[i];
    }
    sp.fitted = true;
  }
  for (int i = 0; i <= 2; ++i) sp.coeffs[i] = heat_coefficient(i, params);
  return sp;
}

namespace detail {

ValueWithError continue_zeta_raw(const MellinSplit& split, double s) {
  const ValueWithError m = mellin_value(split, s);
  const double g = std::tgamma(s);
  return {m.value / g, m.err / std::fabs(g)};
}

}  // namespace detail

ValueWithError continue_zeta(const MellinSplit& split, double s) {
  if (!(s > 0.5 * (1.0 - split.order)))
    throw std::domain_error("continue_zeta: s outside the continuation strip");
  for (int k = 0; 0.5 - k > 0.5 * (1.0 - split.order); ++k)
    if (std::fabs(s - (0.5 - k)) < 1e-3)
      throw numeric_error("continue_zeta: s within the guard of the pole at " +
                          std::to_string(0.5 - k));

  if (std::fabs(s) < 1e-9) {
    // removable 0/0 against Gamma(s); symmetric Richardson step in s
    const double h = 1e-3;
    auto sym = [&](double hh) {
      const ValueWithError p = detail::continue_zeta_raw(split, hh);
      const ValueWithError m = detail::continue_zeta_raw(split, -hh);
      return ValueWithError{0.5 * (p.value + m.value), 0.5 * (p.err + m.err)};
    };
    const ValueWithError s1 = sym(h);
    const ValueWithError s2 = sym(0.5 * h);
    return {(4.0 * s2.value - s1.value) / 3.0,
            std::fabs(s2.value - s1.value) / 3.0 + s2.err};
  }
  return detail::continue_zeta_raw(split, s);
}

ValueWithError continue_deriv0(const MellinSplit& split) {
  const MellinSplit& sp = split;
  double q = 0.0, err = 0.0;
  for (int i = 0; i <= sp.order; ++i) {
    const double ex = 0.5 * (i - 1);
    if (i == 1) {
      q += sp.coeffs[1] * std::log(sp.t_split);
    } else {
      q += sp.coeffs[i] * std::pow(sp.t_split, ex) / ex;
      err += sp.coeff_se[i] * std::pow(sp.t_floor, ex) / std::fabs(ex);
    }
  }

  const double tau0 = std::sqrt(sp.t_floor), tau1 = std::sqrt(sp.t_split);
  const double noise = 1e-13 * heat_trace(sp.t_floor, sp.params, 1e-13);
  const QuadResult low = integrate(
      [&](double tau) { return 2.0 * small_t_remainder(sp, tau * tau) / tau; },
      tau0, tau1, std::max(sp.quad_tol, noise), 1e-13);
  q += low.value;
  err += low.err + noise;

  const double mu = spectral_gap(sp);
  const double T = 50.0 / mu;
  const QuadResult high = integrate(
      [&](double t) { return heat_trace(t, sp.params, 1e-14) / t; },
      sp.t_split, T, sp.quad_tol, 1e-13);
  q += high.value;
  err += high.err;
  err += heat_trace(T, sp.params, 1e-14) / (mu * T);
  err += std::fabs(small_t_remainder(sp, sp.t_floor)) / (0.5 * sp.order);

  const double a1 = heat_coefficient(1, sp.params);
  return {q + kEulerGamma * a1, err};
}

ValueWithError numeric_residue(const MellinSplit& split, double s0) {
  static const double hs[] = {0.1, 0.05, 0.025, 0.0125, 0.00625, 0.003125};
  constexpr int n = 6;
  if (!(s0 + hs[n - 1] > 0.5 * (1.0 - split.order)))
    throw std::domain_error("numeric_residue: s0 outside the continuation strip");

  double y[n];
  double raw_err = 0.0;
  for (int i = 0; i < n; ++i) {
    const ValueWithError z = detail::continue_zeta_raw(split, s0 + hs[i]);
    y[i] = hs[i] * z.value;
    raw_err = std::max(raw_err, hs[i] * z.err);
  }

  // Neville extrapolation of (h, h z(s0+h)) to h = 0
  double p[n];
  std::copy(y, y + n, p);
  double prev_diag = p[0];
  for (int j = 1; j < n; ++j) {
    prev_diag = p[n - 1];
    for (int i = n - 1; i >= j; --i)
      p[i] = (hs[i] * p[i - 1] - hs[i - j] * p[i]) / (hs[i] - hs[i - j]);
  }
  return {p[n - 1], std::fabs(p[n - 1] - prev_diag) + raw_err};
}

}  // namespace bzeta
