#pragma once

#include <functional>

#include "bzeta/zeta_core.hpp"

namespace bzeta {

/// Comparison data for the regularized-product route.  The base sequence is
/// b_n = scale * (n + u)^2, whose zeta function is Hurwitz-expressible; the
/// target sequence a_n must satisfy a_n / b_n -> 1 fast enough that
/// sum_n log(a_n / b_n) converges absolutely.
struct ComparisonData {
  std::function<double(int)> a_seq;  // n >= 1
  double scale;
  double u;
  /// Leading asymptotics  log(a_n/b_n) = kummer2/(n+u)^2 + kummer4/(n+u)^4
  /// + O((n+u)^-6), used to accelerate the product.
  double kummer2 = 0.0;
  double kummer4 = 0.0;
};

/// c_n = log(a_n / b_n).
double comparison_sequence(const ComparisonData& data, int n);

struct BaseInvariants {
  double value0;  // zeta_b(0) = -1/2 - u
  double deriv0;  // zeta_b'(0)
};

/// zeta_b(s) = scale^{-s} zeta_H(2s, 1+u) evaluated at s = 0.
BaseInvariants base_zeta_invariants(double scale, double u);

struct ProductConstant {
  double log_value;  // log prod_n a_n / b_n
  double err;        // estimated absolute error
  int terms;         // terms summed explicitly
};

/// Accelerated evaluation of log C = sum_n c_n: the two leading inverse-power
/// terms are summed in closed form through Hurwitz zetas and the remainder,
/// O(n^-6), is summed directly with doubling until the increment certifies
/// abs_tol.  Throws numeric_error if c_n fails to decay (hypothesis check) or
/// the tolerance is unreachable.
ProductConstant product_constant(const ComparisonData& data, double abs_tol = 1e-10);

/// The comparison data for L_nu + q^2: a_n = eigenvalues, b_n from the
/// leading McMahon term, scale = (pi/l)^2, u = (nu - 1/2)/2.
ComparisonData make_comparison(const OperatorParams& params);

/// log C = ln I_nu(l q) + 2 ln Gamma((nu+3/2)/2) + nu ln pi - nu ln(l q)
/// - ln(2)/2, with the analytic q -> 0 limit.
double log_product_constant_closed_form(const OperatorParams& params);

/// Comparison-route invariants: value0 from the base zeta, deriv0 =
/// zeta_b'(0) - log C with C evaluated by the accelerated product.
ZetaInvariants invariants_via_comparison(const OperatorParams& params);

}  // namespace bzeta
