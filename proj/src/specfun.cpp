#include "bzeta/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <memory>
#include <mutex>

namespace bzeta {

namespace {

// Crossover between the ascending series and the Steed continued-fraction
// scheme for J_nu.  Chosen by an accuracy sweep (see the overlap-consistency
// test in test_specfun): at x = 7 the alternating series loses ~3 digits to
// cancellation, still inside the 1e-12 budget, while CF2 already converges
// in a few dozen iterations.
constexpr double kJSeriesMax = 7.0;

constexpr double kFpMin = 1e-300;
constexpr double kCfEps = 1e-16;

// Ascending series J_nu(x) = (x/2)^nu / Gamma(nu+1) * sum_k (-x^2/4)^k / (k! (nu+1)_k).
double bessel_j_series(double nu, double x) {
  const double x2 = 0.25 * x * x;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= -x2 / (k * (nu + k));
    sum += term;
    if (std::fabs(term) < 1e-18 * std::fabs(sum) + 1e-305) break;
  }
  return std::exp(nu * std::log(0.5 * x) - log_gamma(nu + 1.0)) * sum;
}

BesselJPair bessel_j_pair_series(double nu, double x) {
  const double jn = bessel_j_series(nu, x);
  const double jn1 = bessel_j_series(nu + 1.0, x);
  return {jn, (nu / x) * jn - jn1};
}

// Steed's method: CF1 for J'/J (with the sign of J), CF2 for
// (J' + iY')/(J + iY), combined through the Wronskian J Y' - Y J' = 2/(pi x).
BesselJPair bessel_j_pair_cf(double nu, double x) {
  const double xi = 1.0 / x, xi2 = 2.0 * xi;
  // CF1 (modified Lentz).
  double h = nu * xi;
  if (std::fabs(h) < kFpMin) h = kFpMin;
  double b = xi2 * nu, c = h, d = 0.0;
  int isign = 1;
  bool ok = false;
  const int maxit = static_cast<int>(2.0 * x + 20000.0);
  for (int i = 1; i <= maxit; ++i) {
    b += xi2;
    d = b - d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = b - 1.0 / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = c * d;
    h *= del;
    if (d < 0.0) isign = -isign;
    if (std::fabs(del - 1.0) < kCfEps) {
      ok = true;
      break;
    }
  }
  if (!ok) throw numeric_error("bessel_j: continued fraction CF1 did not converge");

  // CF2:  p + iq = -1/(2x) + i + (i/x) * K_{k>=1} a_k / b_k,
  //        a_1 = 1/4 - nu^2, a_k = (k-1/2)^2 - nu^2, b_k = 2(x + ik).
  using cplx = std::complex<double>;
  const cplx b0(-0.5 * xi, 1.0);
  cplx f2 = b0;
  if (std::abs(f2) < kFpMin) f2 = cplx(kFpMin, 0.0);
  cplx C2 = f2, D2(0.0, 0.0);
  ok = false;
  for (int k = 1; k <= 10000; ++k) {
    cplx ak = (k == 1) ? cplx(0.0, xi) * (0.25 - nu * nu)
                       : cplx((k - 0.5) * (k - 0.5) - nu * nu, 0.0);
    const cplx bk(2.0 * x, 2.0 * k);
    D2 = bk + ak * D2;
    if (std::abs(D2) < kFpMin) D2 = cplx(kFpMin, 0.0);
    C2 = bk + ak / C2;
    if (std::abs(C2) < kFpMin) C2 = cplx(kFpMin, 0.0);
    D2 = 1.0 / D2;
    const cplx del = C2 * D2;
    f2 *= del;
    if (std::abs(del - 1.0) < kCfEps) {
      ok = true;
      break;
    }
  }
  if (!ok) throw numeric_error("bessel_j: continued fraction CF2 did not converge");

  const double p = f2.real(), q = f2.imag();
  const double w = xi2 / kPi;  // Wronskian
  const double pmf = p - h;
  double jmag = std::sqrt(w * q / (pmf * pmf + q * q));
  const double jval = (isign > 0) ? jmag : -jmag;
  return {jval, h * jval};
}

// Large-argument Hankel asymptotics:
//   J_nu(x) = sqrt(2/(pi x)) [P cos w - Q sin w],  w = x - (nu/2 + 1/4) pi,
//   P ~ sum_k (-1)^k c_{2k} x^{-2k},  Q ~ sum_k (-1)^k c_{2k+1} x^{-2k-1},
//   c_m = prod_{j<=m} (4 nu^2 - (2j-1)^2) / (m! 8^m).
// Used when the series converges well past double precision; the CF path
// above remains for intermediate x, where it needs only O(x) iterations.
double bessel_j_hankel(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  double p = 1.0, q = 0.0;
  double c = 1.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int m = 1; m <= 40; ++m) {
    c *= (mu - (2.0 * m - 1.0) * (2.0 * m - 1.0)) / (m * 8.0 * x);
    if (std::fabs(c) >= prev) break;
    prev = std::fabs(c);
    const int r = m % 4;
    if (r == 0) p += c;
    else if (r == 1) q += c;
    else if (r == 2) p -= c;
    else q -= c;
    if (std::fabs(c) < 1e-18) break;
  }
  const double w = x - (0.5 * nu + 0.25) * kPi;
  return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(w) - q * std::sin(w));
}

BesselJPair bessel_j_pair_hankel(double nu, double x) {
  const double jn = bessel_j_hankel(nu, x);
  const double jn1 = bessel_j_hankel(nu + 1.0, x);
  return {jn, (nu / x) * jn - jn1};
}

// McMahon expansion seed for j_{nu,n}.
double mcmahon_guess(double nu, int n) {
  const double mu = 4.0 * nu * nu;
  const double beta = (n + 0.5 * nu - 0.25) * kPi;
  const double b8 = 8.0 * beta;
  double j = beta - (mu - 1.0) / b8;
  j -= 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 * b8 * b8);
  j -= 32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) /
       (15.0 * b8 * b8 * b8 * b8 * b8);
  return j;
}

double newton_refine(double nu, double x0, double lo, double hi) {
  double x = x0;
  for (int it = 0; it < 60; ++it) {
    const BesselJPair jp = bessel_j_pair(nu, x);
    if (jp.deriv == 0.0) break;
    const double step = jp.value / jp.deriv;
    x -= step;
    if (x <= lo || x >= hi) return std::nan("");  // escaped bracket
    if (std::fabs(step) < 1e-14 * x) {
      const BesselJPair jc = bessel_j_pair(nu, x);
      x -= jc.value / jc.deriv;
      return x;
    }
  }
  return std::nan("");
}

// Scan [a, b] for the first sign change of J_nu and bisect it down.
double bisect_scan(double nu, double a, double b) {
  const int coarse = 64;
  double prev_x = a;
  double prev_v = bessel_j(nu, a);
  for (int i = 1; i <= coarse; ++i) {
    const double x = a + (b - a) * i / coarse;
    const double v = bessel_j(nu, x);
    if ((prev_v < 0.0) != (v < 0.0)) {
      double xl = prev_x, xr = x, vl = prev_v;
      for (int it = 0; it < 100; ++it) {
        const double xm = 0.5 * (xl + xr);
        const double vm = bessel_j(nu, xm);
        if ((vl < 0.0) != (vm < 0.0)) {
          xr = xm;
        } else {
          xl = xm;
          vl = vm;
        }
        if (xr - xl < 1e-13 * xm) break;
      }
      // Newton polish inside the shrunken bracket.
      const double x0 = 0.5 * (xl + xr);
      const double p = newton_refine(nu, x0, xl - 1e-9, xr + 1e-9);
      return std::isnan(p) ? x0 : p;
    }
    prev_x = x;
    prev_v = v;
  }
  throw numeric_error("bessel_zero: no sign change found in scan interval");
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
  return std::lgamma(x);
}

double gamma_ratio(double nu, int k) {
  if (k < 0) throw std::domain_error("gamma_ratio: requires k >= 0");
  double p = 1.0;
  for (int m = 1; m <= 2 * k; ++m) p *= nu + k + 0.5 - m;
  return p;
}

double bessel_j(double nu, double x) { return bessel_j_pair(nu, x).value; }

BesselJPair bessel_j_pair(double nu, double x) {
  if (!(nu >= 0.0)) throw std::domain_error("bessel_j: requires nu >= 0");
  if (!(x > 0.0)) throw std::domain_error("bessel_j: requires x > 0");
  if (x < kJSeriesMax || x < nu + 2.0) return bessel_j_pair_series(nu, x);
  // Hankel needs the series for order nu+1 to converge too.
  const double nup = nu + 1.0;
  if (x >= 60.0 && x >= 4.0 * nup * nup) return bessel_j_pair_hankel(nu, x);
  return bessel_j_pair_cf(nu, x);
}

double bessel_zero(double nu, int n) {
  if (!(nu >= 0.0)) throw std::domain_error("bessel_zero: requires nu >= 0");
  if (n < 1) throw std::domain_error("bessel_zero: requires n >= 1");

  // McMahon bracket; valid once n is not small relative to nu.
  const double lo = (n + 0.5 * nu - 0.75) * kPi;
  const double hi = (n + 0.5 * nu + 0.25) * kPi;
  const bool bracket_ok = (n >= nu);

  if (bracket_ok) {
    const double guess = std::min(std::max(mcmahon_guess(nu, n), lo), hi);
    const double x = newton_refine(nu, guess, lo, hi);
    if (!std::isnan(x)) {
      const BesselJPair jp = bessel_j_pair(nu, x);
      if (std::fabs(jp.value) <= 1e-11 * std::fabs(jp.deriv)) return x;
    }
    return bisect_scan(nu, lo, hi);
  }

  // Small n, larger nu: walk up from the previous zero (or from just past the
  // turning point x = nu, below which J_nu has no zeros).
  const double anchor = (n == 1) ? std::max(nu, 1e-3) : bessel_zero(nu, n - 1) + 1e-6;
  double a = anchor, width = kPi * 1.25;
  for (int tries = 0; tries < 8; ++tries) {
    try {
      return bisect_scan(nu, a, a + width);
    } catch (const numeric_error&) {
      width *= 2.0;
    }
  }
  throw numeric_error("bessel_zero: scan failed for nu=" + std::to_string(nu) +
                      ", n=" + std::to_string(n));
}

double log_bessel_i(double nu, double x) {
  if (!(nu >= 0.0)) throw std::domain_error("log_bessel_i: requires nu >= 0");
  if (!(x > 0.0)) throw std::domain_error("log_bessel_i: requires x > 0");
  // All-positive ascending series with on-the-fly rescaling; no cancellation,
  // so this is uniformly accurate and overflow-safe for any x.
  const double x2 = 0.25 * x * x;
  double term = 1.0, sum = 1.0, offset = 0.0;
  for (int k = 1; k < 100000; ++k) {
    term *= x2 / (k * (nu + k));
    sum += term;
    if (sum > 1e250) {
      sum *= 1e-250;
      term *= 1e-250;
      offset += 250.0 * std::log(10.0);
    }
    if (term < 1e-18 * sum) break;
  }
  return offset + std::log(sum) + nu * std::log(0.5 * x) - log_gamma(nu + 1.0);
}

double bessel_i_ratio(double nu, double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel_i_ratio: requires x > 0");
  // I_{nu+1}/I_nu = 1/(b_1 + 1/(b_2 + ...)), b_k = 2(nu+k)/x  (modified Lentz).
  double f = kFpMin, c = f, d = 0.0;
  const int maxit = static_cast<int>(2.0 * x + 20000.0);
  for (int k = 1; k <= maxit; ++k) {
    const double bk = 2.0 * (nu + k) / x;
    d = bk + d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = bk + 1.0 / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = c * d;
    f *= del;
    if (std::fabs(del - 1.0) < kCfEps) return f;
  }
  throw numeric_error("bessel_i_ratio: continued fraction did not converge");
}

namespace {
// B_{2j} / (2j)! for j = 1..16.
constexpr double kBernOverFact[] = {
    8.3333333333333333333e-02,  // B2/2!
    -1.3888888888888888889e-03, // B4/4!
    3.3068783068783068783e-05,
    -8.2671957671957671958e-07,
    2.0876756987868098979e-08,
    -5.2841901386874931848e-10,
    1.3382536530684678833e-11,
    -3.3896802963225828668e-13,
    8.5860620562778445641e-15,
    -2.1748686985580618730e-16,
    5.5090028283602295152e-18,
    -1.3954464685812523340e-19,
    3.5347070396294674716e-21,
    -8.9535174270375468504e-23,
    2.2679524523376830603e-24,
    -5.7447906688722024452e-26,
};
}  // namespace

double hurwitz_zeta(double s, double a) {
  if (!(a > 0.0)) throw std::domain_error("hurwitz_zeta: requires a > 0");
  if (s == 1.0) throw std::domain_error("hurwitz_zeta: pole at s = 1");

  const double qmin = 18.0 + 0.5 * std::fabs(s);
  const long N = (a >= qmin) ? 0 : static_cast<long>(std::ceil(qmin - a));

  double sum = 0.0, comp = 0.0;  // Kahan
  for (long k = 0; k < N; ++k) {
    const double y = std::pow(k + a, -s) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  const double Q = N + a;
  double res = sum + std::pow(Q, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(Q, -s);

  double poch = s;  // s(s+1)...(s+2j-2)
  double qpow = std::pow(Q, -s - 1.0);
  double prev = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= 16; ++j) {
    const double term = kBernOverFact[j - 1] * poch * qpow;
    if (std::fabs(term) >= prev) break;  // asymptotic tail started diverging
    res += term;
    if (std::fabs(term) < 1e-17 * std::fabs(res) + 1e-305) break;
    prev = std::fabs(term);
    poch *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
    qpow /= Q * Q;
  }
  return res;
}

double hurwitz_zeta_deriv0(double a) {
  if (!(a > 0.0)) throw std::domain_error("hurwitz_zeta_deriv0: requires a > 0");
  return log_gamma(a) - 0.5 * kLn2Pi;
}

ZeroTable::ZeroTable(double nu, double tol) : nu_(nu), tol_(tol) {
  if (!(nu >= 0.0)) throw std::domain_error("ZeroTable: requires nu >= 0");
}

void ZeroTable::ensure(int n) {
  while (size() < n) {
    const int k = size() + 1;
    double z = bessel_zero(nu_, k);
    if (k > 1 && z <= zeros_.back() + 1.0) {
      // A skipped or doubled zero would silently corrupt every spectral sum;
      // re-derive this one from a bracketed scan off the previous zero.
      z = bisect_scan(nu_, zeros_.back() + 1e-6, zeros_.back() + 1.5 * kPi);
      if (z <= zeros_.back() + 1.0)
        throw numeric_error("ZeroTable: zero ordering violated at n=" + std::to_string(k));
    }
    const BesselJPair jp = bessel_j_pair(nu_, z);
    // evaluation noise near a zero grows ~ linearly with z, so the
    // certificate bounds the relative position error by tol
    if (std::fabs(jp.value) > tol_ * std::max(1.0, z) * std::fabs(jp.deriv))
      throw numeric_error("ZeroTable: residual certificate failed at n=" + std::to_string(k));
    zeros_.push_back(z);
  }
}

const ZeroTable& shared_zeros(double nu, int min_count) {
  static std::mutex mu;
  static std::map<double, std::unique_ptr<ZeroTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(nu);
  if (it == cache.end())
    it = cache.emplace(nu, std::make_unique<ZeroTable>(nu)).first;
  it->second->ensure(min_count);
  return *it->second;
}

}  // namespace bzeta
