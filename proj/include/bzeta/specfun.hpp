#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bzeta {

/// Thrown when an iteration fails to converge or an accuracy budget cannot
/// be met; carries a human-readable diagnostic.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kSqrtPi = 1.77245385090551602729816748334114518;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kLn2Pi = 1.83787706640934548356065947281123527;

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Gamma(nu+k+1/2) / Gamma(nu-k+1/2) evaluated as the finite product
/// prod_{m=1}^{2k} (nu + k + 1/2 - m).  Finite for every nu >= 0, including
/// the half-integer orders where the denominator gamma has a pole.
double gamma_ratio(double nu, int k);

struct BesselJPair {
  double value;  // J_nu(x)
  double deriv;  // J_nu'(x)
};

/// Bessel function of the first kind, real order nu >= 0, x > 0.
double bessel_j(double nu, double x);
BesselJPair bessel_j_pair(double nu, double x);

/// n-th positive zero j_{nu,n} of J_nu, relative accuracy ~1e-12.
/// McMahon seed + Newton, with a bracketed scan fallback.
double bessel_zero(double nu, int n);

/// ln I_nu(x), computed on the log scale (safe up to x ~ 1e4 and beyond).
double log_bessel_i(double nu, double x);

/// I_{nu+1}(x) / I_nu(x) by continued fraction.
double bessel_i_ratio(double nu, double x);

/// Hurwitz zeta zeta_H(s, a), s != 1, a > 0 (Euler-Maclaurin).
double hurwitz_zeta(double s, double a);

/// d/ds zeta_H(s, a) at s = 0, via the Lerch formula ln Gamma(a) - ln(2 pi)/2.
double hurwitz_zeta_deriv0(double a);

/// Table of positive zeros of J_nu with per-zero Newton residual certificates.
/// Single writer during construction/growth; immutable reads afterwards.
class ZeroTable {
 public:
  explicit ZeroTable(double nu, double tol = 1e-12);

  /// Grow the table to hold at least n zeros.
  void ensure(int n);

  /// 1-based access; n must not exceed size().
  double operator[](int n) const { return zeros_[static_cast<size_t>(n) - 1]; }

  int size() const { return static_cast<int>(zeros_.size()); }
  double nu() const { return nu_; }
  double tol() const { return tol_; }

 private:
  double nu_;
  double tol_;
  std::vector<double> zeros_;
};

/// Process-wide cache of zero tables keyed by order; grows on demand.
/// The returned reference stays valid for the lifetime of the process.
const ZeroTable& shared_zeros(double nu, int min_count);

}  // namespace bzeta
