#include "bzeta/zeta_core.hpp"

#include <cmath>
#include <limits>

namespace bzeta {

double eigenvalue(const OperatorParams& params, int n) {
  params.validate();
  if (n < 1) throw std::domain_error("eigenvalue: requires n >= 1");
  const double j = shared_zeros(params.nu, n)[n];
  const double lam = j / params.l;
  return lam * lam + params.q * params.q;
}

namespace detail {

double spectral_tail(double s, double nu, double l, double shift2, int N) {
  // McMahon: j_n = beta - kap/beta - kap2/beta^3 + O(beta^-5),
  // beta = pi (n + c), c = nu/2 - 1/4, so
  //   l^2 lambda_n^2 = beta^2 - 2 kap + (kap^2 - 2 kap2)/beta^2 + ...
  const double mu = 4.0 * nu * nu;
  const double c = 0.5 * nu - 0.25;
  const double kap = (mu - 1.0) / 8.0;
  const double kap2 = 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * 512.0);
  const double w = l * l * shift2 - 2.0 * kap;
  const double e = kap * kap - 2.0 * kap2;
  const double A = N + 1.0 + c;
  const double rho = w / (kPi * kPi);

  double sum = 0.0, binom = 1.0, rp = 1.0;
  for (int m = 0; m < 12; ++m) {
    const double term = binom * rp * hurwitz_zeta(2.0 * s + 2.0 * m, A);
    sum += term;
    if (std::fabs(term) < 1e-17 * std::fabs(sum) + 1e-305) break;
    binom *= (-s - m) / (m + 1.0);
    rp *= rho;
  }
  double tail = std::pow(l / kPi, 2.0 * s) * sum;
  tail -= s * e * std::pow(l, 2.0 * s) * std::pow(kPi, -2.0 * s - 4.0) *
          hurwitz_zeta(2.0 * s + 4.0, A);
  return tail;
}

}  // namespace detail

double zeta_direct(double s, const OperatorParams& params, double abs_tol) {
  params.validate();
  if (!(s > 0.5))
    throw std::domain_error("zeta_direct: series diverges for s <= 1/2");

  const double q2 = params.q * params.q;
  auto eval = [&](int N) {
    const ZeroTable& tab = shared_zeros(params.nu, N);
    double sum = 0.0, comp = 0.0;
    for (int n = 1; n <= N; ++n) {
      const double lam = tab[n] / params.l;
      const double y = std::pow(lam * lam + q2, -s) - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    return sum + detail::spectral_tail(s, params.nu, params.l, q2, N);
  };

  int N = 400;
  double prev = eval(N);
  for (int it = 0; it < 7; ++it) {
    N *= 2;
    const double cur = eval(N);
    const double err = std::fabs(cur - prev);
    if (err <= abs_tol) return cur;
    prev = cur;
  }
  throw numeric_error("zeta_direct: accuracy target not reached at s=" +
                      std::to_string(s) + "; achievable ~" +
                      std::to_string(std::fabs(prev)));
}

double resolvent_trace(double lambda, const OperatorParams& params) {
  params.validate();
  const double q2 = params.q * params.q;
  if (!(lambda < q2))
    throw std::domain_error("resolvent_trace: requires lambda < q^2 (below the spectrum)");
  const double z = std::sqrt(q2 - lambda);
  return -(params.l / (2.0 * z)) * bessel_i_ratio(params.nu, params.l * z);
}

double t_function(double lambda, const OperatorParams& params) {
  params.validate();
  const double q2 = params.q * params.q;
  if (!(lambda <= q2))
    throw std::domain_error("t_function: requires lambda <= q^2");
  const double z = std::sqrt(q2 - lambda);
  if (z == 0.0) return 0.0;  // continuous limit as z -> 0
  const double lz = params.l * z;
  return params.nu * std::log(lz) - log_bessel_i(params.nu, lz) -
         params.nu * std::log(2.0) - log_gamma(params.nu + 1.0);
}

TFunctionData t_function_data(const OperatorParams& params) {
  params.validate();
  const double nu = params.nu;
  TFunctionData d;
  d.A = 0.5 * (nu + 0.5);
  d.B = 0.5 * kLn2Pi + (nu + 0.5) * std::log(params.l) - nu * std::log(2.0) -
        log_gamma(nu + 1.0);
  d.T0 = (params.q == 0.0) ? 0.0 : t_function(0.0, params);
  return d;
}

PoleResidue pole_data(int k, const OperatorParams& params) {
  params.validate();
  if (k < 0) throw std::domain_error("pole_data: requires k >= 0");
  // Gamma(1/2 - k) = sqrt(pi) (-4)^k k! / (2k)!, evaluated as a product.
  double g = kSqrtPi;
  for (int m = 1; m <= k; ++m) g /= 0.5 - m;
  return {0.5 - k, heat_coefficient(2 * k, params) / g, k};
}

double zeta_at_zero(const OperatorParams& params) {
  params.validate();
  return -0.5 * (params.nu + 0.5);
}

double zeta_deriv_at_zero(const OperatorParams& params) {
  params.validate();
  const double nu = params.nu, q = params.q, l = params.l;
  if (q == 0.0) {
    // lim q->0 of ln I_nu(lq) - nu ln q = nu ln(l/2) - ln Gamma(nu+1).
    return -(0.5 * std::log(2.0 * kPi * l) + nu * std::log(0.5 * l) -
             log_gamma(nu + 1.0));
  }
  return -(0.5 * std::log(2.0 * kPi * l) + log_bessel_i(nu, l * q) -
           nu * std::log(q));
}

ZetaInvariants closed_form_invariants(const OperatorParams& params) {
  ZetaInvariants inv;
  inv.value0 = zeta_at_zero(params);
  inv.deriv0 = zeta_deriv_at_zero(params);
  inv.log_det = -inv.deriv0;
  inv.route = Route::closed_form;
  inv.err = 1e-13 * (1.0 + std::fabs(inv.deriv0));
  if (inv.log_det > 709.0) {
    inv.det = std::numeric_limits<double>::infinity();
    inv.det_overflow = true;
  } else {
    inv.det = std::exp(inv.log_det);
  }
  return inv;
}

ZetaInvariants regularized_determinant(const OperatorParams& params) {
  return closed_form_invariants(params);
}

RbInvariants rb_invariants(double nu, double a, int kmax) {
  if (!(a >= 0.0)) throw std::domain_error("rb_invariants: requires a >= 0");
  const OperatorParams p{nu, a, kPi};
  RbInvariants rb;
  rb.value0 = zeta_at_zero(p);
  rb.deriv0 = 0.5 * zeta_deriv_at_zero(p);
  for (int k = 0; k <= kmax; ++k) {
    const PoleResidue z = pole_data(k, p);
    rb.poles.push_back({2.0 * z.location, 2.0 * z.residue, k});
  }
  return rb;
}

}  // namespace bzeta
