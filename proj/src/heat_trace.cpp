#include "bzeta/heat_trace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bzeta {

void OperatorParams::validate() const {
  if (!(nu >= 0.0)) throw std::domain_error("OperatorParams: requires nu >= 0");
  if (!(q >= 0.0)) throw std::domain_error("OperatorParams: requires q >= 0");
  if (!(l > 0.0)) throw std::domain_error("OperatorParams: requires l > 0");
}

namespace {

// Coefficients of the q = 0 trace expansion via the resolvent route:
//   ln I_nu(u) ~ u - ln(2 pi u)/2 + ln C(u),   C(u) = sum_k (-1)^k c_k u^-k,
//   c_k = prod_{m=1}^k (4 nu^2 - (2m-1)^2) / (k! 8^k),
//   R(lambda) = -l/(2z) + (nu+1/2)/(2 z^2) + sum_n (n/2) [lnC]_n l^-n z^-(n+2),
// and each z^-p maps to -t^{p/2-1}/Gamma(p/2) in the heat trace, with the
// q^2 shift restored by the exact factor e^{-q^2 t}.
std::vector<double> base_coefficients(double nu, double l, int order) {
  const int K = order + 2;
  std::vector<double> c(K + 1);
  c[0] = 1.0;
  for (int k = 1; k <= K; ++k)
    c[k] = c[k - 1] * (4.0 * nu * nu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k);

  std::vector<double> cs(K + 1), lnc(K + 1, 0.0);
  for (int k = 0; k <= K; ++k) cs[k] = ((k % 2) ? -c[k] : c[k]);
  for (int n = 1; n <= K; ++n) {
    double s = cs[n];
    for (int k = 1; k < n; ++k) s -= (static_cast<double>(k) / n) * lnc[k] * cs[n - k];
    lnc[n] = s;
  }

  // s_p = -r_p / Gamma(p/2): contribution of z^-p.
  std::vector<double> sp(order + 2, 0.0);  // index p
  auto add_sp = [&](int p, double r) {
    if (p < static_cast<int>(sp.size())) sp[p] += -r / std::tgamma(0.5 * p);
  };
  add_sp(1, -0.5 * l);
  add_sp(2, 0.5 * (nu + 0.5));
  for (int n = 1; n <= K; ++n)
    add_sp(n + 2, 0.5 * n * lnc[n] * std::pow(l, -n));

  // a_i (q = 0) = s_{i+1}.
  std::vector<double> a(order + 1, 0.0);
  for (int i = 0; i <= order; ++i) a[i] = sp[i + 1];
  return a;
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// ---- small dense weighted least squares (Householder QR) ----

struct LsqFit {
  std::vector<double> coef;
  std::vector<double> se;  // statistical standard errors
};

LsqFit weighted_lsq(std::vector<std::vector<double>> A,  // m rows of n entries
                    std::vector<double> b) {
  const int m = static_cast<int>(A.size());
  const int n = static_cast<int>(A[0].size());
  // Householder QR in place.
  for (int k = 0; k < n; ++k) {
    double norm = 0.0;
    for (int i = k; i < m; ++i) norm += A[i][k] * A[i][k];
    norm = std::sqrt(norm);
    if (norm == 0.0) throw numeric_error("least squares: rank-deficient design matrix");
    if (A[k][k] > 0.0) norm = -norm;
    for (int i = k; i < m; ++i) A[i][k] /= norm;
    A[k][k] -= 1.0;
    for (int j = k + 1; j < n; ++j) {
      double s = 0.0;
      for (int i = k; i < m; ++i) s += A[i][k] * A[i][j];
      s /= A[k][k];
      for (int i = k; i < m; ++i) A[i][j] += s * A[i][k];
    }
    double s = 0.0;
    for (int i = k; i < m; ++i) s += A[i][k] * b[i];
    s /= A[k][k];
    for (int i = k; i < m; ++i) b[i] += s * A[i][k];
    A[k][k] = norm;  // store R diagonal
  }
  // Conditioning check on R.
  double dmin = std::numeric_limits<double>::infinity(), dmax = 0.0;
  for (int k = 0; k < n; ++k) {
    dmin = std::min(dmin, std::fabs(A[k][k]));
    dmax = std::max(dmax, std::fabs(A[k][k]));
  }
  if (dmin < 1e-13 * dmax)
    throw numeric_error("least squares: ill-conditioned design matrix; reduce the fit order");

  LsqFit out;
  out.coef.assign(n, 0.0);
  for (int k = n - 1; k >= 0; --k) {
    double s = b[k];
    for (int j = k + 1; j < n; ++j) s -= A[k][j] * out.coef[j];
    out.coef[k] = s / A[k][k];
  }
  // Residual sum of squares from the tail of Q^T b.
  double rss = 0.0;
  for (int i = n; i < m; ++i) rss += b[i] * b[i];
  const double sigma2 = (m > n) ? rss / (m - n) : 0.0;

  // R^{-1} (upper triangular), then cov = sigma2 * Rinv Rinv^T.
  std::vector<std::vector<double>> rinv(n, std::vector<double>(n, 0.0));
  for (int k = n - 1; k >= 0; --k) {
    rinv[k][k] = 1.0 / A[k][k];
    for (int j = k + 1; j < n; ++j) {
      double s = 0.0;
      for (int i = k + 1; i <= j; ++i) s += A[k][i] * rinv[i][j];
      rinv[k][j] = -s / A[k][k];
    }
  }
  out.se.assign(n, 0.0);
  for (int k = 0; k < n; ++k) {
    double s = 0.0;
    for (int j = k; j < n; ++j) s += rinv[k][j] * rinv[k][j];
    out.se[k] = std::sqrt(sigma2 * s);
  }
  return out;
}

// Fit the q-divided trace against t^{(i-1)/2} and recombine with the exact
// exp(-q^2 t) series; returns coefficients a_0..a_order plus statistical se.
LsqFit fit_once(const OperatorParams& p, std::span<const double> grid, int order,
                const std::vector<double>& fvals) {
  const int m = static_cast<int>(grid.size());
  const int n = order + 1;
  std::vector<std::vector<double>> A(m, std::vector<double>(n));
  std::vector<double> b(m);
  for (int r = 0; r < m; ++r) {
    const double t = grid[r];
    const double w = std::sqrt(t);
    for (int i = 0; i < n; ++i) A[r][i] = w * std::pow(t, 0.5 * (i - 1));
    b[r] = w * fvals[r] * std::exp(p.q * p.q * t);
  }
  LsqFit base = weighted_lsq(std::move(A), std::move(b));

  // a_i = sum_j (-q^2)^j / j! * atilde_{i-2j}; propagate errors through the
  // same linear map (covariances between atilde's are ignored, which keeps
  // the estimate conservative only up to correlation effects; the refinement
  // term added by the caller dominates in practice).
  LsqFit out;
  out.coef.assign(n, 0.0);
  out.se.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double v = 0.0, var = 0.0;
    for (int j = 0; 2 * j <= i; ++j) {
      const double w = std::pow(-p.q * p.q, j) / factorial(j);
      v += w * base.coef[i - 2 * j];
      var += w * w * base.se[i - 2 * j] * base.se[i - 2 * j];
    }
    out.coef[i] = v;
    out.se[i] = std::sqrt(var);
  }
  return out;
}

}  // namespace

std::vector<double> heat_coefficients(const OperatorParams& params, int order) {
  params.validate();
  if (order < 0) throw std::domain_error("heat_coefficients: requires order >= 0");
  const std::vector<double> base = base_coefficients(params.nu, params.l, order);
  const double q2 = params.q * params.q;
  std::vector<double> a(order + 1, 0.0);
  for (int i = 0; i <= order; ++i) {
    double v = 0.0;
    for (int j = 0; 2 * j <= i; ++j)
      v += std::pow(-q2, j) / factorial(j) * base[i - 2 * j];
    a[i] = v;
  }
  return a;
}

double heat_coefficient(int i, const OperatorParams& params) {
  if (i < 0) throw std::domain_error("heat_coefficient: requires i >= 0");
  // The first three are hardcoded to the displayed closed forms.
  const double nu = params.nu, q = params.q, l = params.l;
  switch (i) {
    case 0:
      return l / (2.0 * kSqrtPi);
    case 1:
      return -0.5 * (nu + 0.5);
    case 2:
      return (nu * nu - 0.25 - l * l * q * q) / (2.0 * l * kSqrtPi);
    default:
      return heat_coefficients(params, i)[i];
  }
}

double heat_coefficient_lemma_sum(int i, const OperatorParams& params,
                                  bool displayed_odd_lead) {
  if (i < 0) throw std::domain_error("heat_coefficient_lemma_sum: requires i >= 0");
  params.validate();
  const double nu = params.nu, q = params.q, l = params.l;
  double val;
  if (i % 2 == 0) {
    const int m = i / 2;
    val = (m % 2 ? -1.0 : 1.0) / factorial(m) * l * std::pow(q, 2 * m) / (2.0 * kSqrtPi);
    for (int j = 0; j < m; ++j) {
      const int k = 2 * m - 1 - 2 * j;
      const double sgn = ((j + k) % 2 ? -1.0 : 1.0);
      val -= sgn / (std::pow(2.0, k) * factorial(j) * factorial(k)) *
             std::pow(q, 2 * j) / (std::pow(l, k) * std::tgamma(0.5 * k)) *
             gamma_ratio(nu, k);
    }
  } else {
    const int m = (i - 1) / 2;
    const double lead_c = displayed_odd_lead ? (nu + 0.5) : (nu - 0.5);
    val = ((m + 1) % 2 ? -1.0 : 1.0) * lead_c * std::pow(q, 2 * m) /
          (2.0 * factorial(m));
    for (int j = 0; j < m; ++j) {
      const int k = 2 * m - 2 * j;
      const double sgn = ((j + k) % 2 ? -1.0 : 1.0);
      val -= sgn / (std::pow(2.0, k) * factorial(j) * factorial(k)) *
             std::pow(q, 2 * j) / (std::pow(l, k) * std::tgamma(0.5 * k)) *
             gamma_ratio(nu, k);
    }
  }
  return val;
}

double heat_trace(double t, const OperatorParams& params, double abs_tol) {
  params.validate();
  if (!(t > 0.0)) throw std::domain_error("heat_trace: requires t > 0");
  const double nu = params.nu, q = params.q, l = params.l;
  constexpr int kMaxZeros = 200000;

  const double eqt = std::exp(-t * q * q);
  auto tail_bound = [&](int n) {
    // sum_{m>n} e^{-t lam_m^2} <= integral comparison with
    // lam_m >= pi (m + nu/2 - 3/4)/l.
    const double lam = kPi * (n + 0.5 * nu - 0.75) / l;
    return eqt * (l / (kPi * std::sqrt(t))) * (0.5 * kSqrtPi) *
           std::erfc(std::sqrt(t) * lam);
  };

  double sum = 0.0, comp = 0.0;
  int n = 0;
  while (true) {
    if (tail_bound(n) <= abs_tol) break;
    if (n >= kMaxZeros) {
      throw numeric_error(
          "heat_trace: certified accuracy budget infeasible at t=" + std::to_string(t) +
          "; achievable abs error ~" + std::to_string(tail_bound(n)));
    }
    const int chunk_end = std::min(n + 256, kMaxZeros);
    const ZeroTable& tab = shared_zeros(nu, chunk_end);
    for (int k = n + 1; k <= chunk_end; ++k) {
      const double lam = tab[k] / l;
      const double y = std::exp(-t * (lam * lam + q * q)) - comp;
      const double s2 = sum + y;
      comp = (s2 - sum) - y;
      sum = s2;
    }
    n = chunk_end;
  }
  return sum;
}

HeatExpansion fit_heat_coefficients(const OperatorParams& params,
                                    std::span<const double> grid, int order) {
  params.validate();
  if (order < 0) throw std::domain_error("fit_heat_coefficients: requires order >= 0");
  const int m = static_cast<int>(grid.size());
  if (m < std::max(2 * order, order + 2))
    throw std::domain_error("fit_heat_coefficients: need at least 2*order sample points");
  for (double t : grid)
    if (!(t > 0.0 && t <= 0.5))
      throw std::domain_error("fit_heat_coefficients: grid must lie in (0, 0.5]");

  std::vector<double> fvals(m);
  for (int r = 0; r < m; ++r) fvals[r] = heat_trace(grid[r], params, 1e-13);

  LsqFit fit = fit_once(params, grid, order, fvals);

  // Refinement fit two orders higher gauges the truncation bias.
  std::vector<double> refined(order + 1, 0.0);
  bool have_ref = (m >= std::max(2 * (order + 2), order + 4));
  if (have_ref) {
    try {
      LsqFit hi = fit_once(params, grid, order + 2, fvals);
      for (int i = 0; i <= order; ++i) refined[i] = hi.coef[i];
    } catch (const numeric_error&) {
      have_ref = false;
    }
  }

  HeatExpansion out;
  out.params = params;
  out.coeffs = fit.coef;
  out.std_err.assign(order + 1, 0.0);
  for (int i = 0; i <= order; ++i) {
    const double bias = have_ref ? std::fabs(fit.coef[i] - refined[i]) : 0.0;
    out.std_err[i] = std::hypot(fit.se[i], bias);
  }
  return out;
}

}  // namespace bzeta
