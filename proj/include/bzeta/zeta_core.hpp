#pragma once

#include <vector>

#include "bzeta/heat_trace.hpp"

namespace bzeta {

/// Quantities of the T-method: z(0) = -A, z'(0) = -B + T(0).
struct TFunctionData {
  double A;
  double B;
  double T0;
};

struct PoleResidue {
  double location;  // s-value of the simple pole
  double residue;
  int k;  // location = 1/2 - k (operator scale) or 1 - 2k (rb scale)
};

enum class Route { closed_form, comparison, mellin_oracle };

struct ZetaInvariants {
  double value0;   // z(0)
  double deriv0;   // z'(0)
  double det;      // exp(-z'(0)); +inf with det_overflow set if too large
  double log_det;  // -z'(0), always finite
  Route route;
  double err;  // estimated absolute error on deriv0
  bool det_overflow = false;
};

/// n-th eigenvalue  j_{nu,n}^2 / l^2 + q^2.
double eigenvalue(const OperatorParams& params, int n);

/// z(s) = sum_n (lambda_n^2 + q^2)^{-s} for s > 1/2: partial sum over exact
/// zeros plus a Hurwitz-zeta tail built on the McMahon asymptotics of the
/// zeros.  Certified absolute error <= abs_tol.
double zeta_direct(double s, const OperatorParams& params, double abs_tol = 1e-10);

/// Trace of the resolvent, R(lambda) = sum_n 1/(lambda - lambda_n^2 - q^2),
/// via the closed Bessel form  -(l/(2z)) I_{nu+1}(l z)/I_nu(l z),
/// z = sqrt(q^2 - lambda).  Requires lambda < q^2.
double resolvent_trace(double lambda, const OperatorParams& params);

/// T(lambda) = nu ln(l z) - ln I_nu(l z) - ln(2^nu Gamma(nu+1)), a primitive
/// of -R.  Requires lambda <= q^2 (T -> 0 as lambda -> q^2).
double t_function(double lambda, const OperatorParams& params);

TFunctionData t_function_data(const OperatorParams& params);

/// Pole location 1/2 - k with residue a_{2k} / Gamma(1/2 - k).
PoleResidue pole_data(int k, const OperatorParams& params);

/// z(0) = -(nu + 1/2)/2, independent of q and l.
double zeta_at_zero(const OperatorParams& params);

/// z'(0) = -[ ln(2 pi l)/2 + ln I_nu(l q) - nu ln q ], assembled from logs.
/// The q -> 0 limit is taken analytically.
double zeta_deriv_at_zero(const OperatorParams& params);

/// Closed-form route invariants, including det = exp(-z'(0)).
ZetaInvariants closed_form_invariants(const OperatorParams& params);

/// det(L_nu + q^2) = sqrt(2 pi l) I_nu(l q) / q^nu with overflow handling.
ZetaInvariants regularized_determinant(const OperatorParams& params);

struct RbInvariants {
  std::vector<PoleResidue> poles;  // locations 1, -1, -3, ...
  double value0;
  double deriv0;
};

/// zeta_RB(s, nu, a) wrapper: zeta_RB(2s, nu, a) = z(s, nu, a, pi).
/// Pole locations double, residues double, value0 is unchanged and deriv0
/// halves.  s = 0 is regular and excluded from the pole list.
RbInvariants rb_invariants(double nu, double a, int kmax = 5);

namespace detail {
/// sum_{n>N} (lambda_n^2 + shift2)^{-s} from the McMahon asymptotics,
/// expressed through Hurwitz zetas.  Used by zeta_direct; exposed for tests.
double spectral_tail(double s, double nu, double l, double shift2, int N);
}  // namespace detail

}  // namespace bzeta
