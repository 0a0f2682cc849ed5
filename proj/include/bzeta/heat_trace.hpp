#pragma once

#include <span>
#include <vector>

#include "bzeta/specfun.hpp"

namespace bzeta {

/// The operator  L_nu + q^2 = -d^2/dx^2 + (4 nu^2 - 1)/(4 x^2) + q^2  on (0, l].
/// q = 0 is supported as the documented limit (all formulas are polynomial
/// in q^2).
struct OperatorParams {
  double nu;
  double q;
  double l;

  void validate() const;
};

/// Small-t expansion  Tr e^{-t(L_nu+q^2)} = sum_i coeffs[i] t^{(i-1)/2} + ...
struct HeatExpansion {
  OperatorParams params;
  std::vector<double> coeffs;   // a_0 .. a_order
  std::vector<double> std_err;  // per-coefficient error estimates (fit only)
  int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Closed-form expansion coefficient a_i(nu, q, l).
///
/// a_0, a_1, a_2 are the standard displayed values l/(2 sqrt(pi)),
/// -(nu+1/2)/2, (nu^2 - 1/4 - l^2 q^2)/(2 l sqrt(pi)).  Higher coefficients
/// are generated from the large-argument expansion of d/dz log I_nu(l z)
/// through the resolvent-to-heat-trace correspondence; this route reproduces
/// a_0..a_2 exactly and is validated against brute-force trace fits in the
/// tests.
double heat_coefficient(int i, const OperatorParams& params);

/// All coefficients a_0..a_order at once (cheaper than repeated calls).
std::vector<double> heat_coefficients(const OperatorParams& params, int order);

/// The literal double-sum closed form for a_i, kept for side-by-side
/// comparison: for i >= 3 it disagrees with
/// the numerically verified coefficients at general nu (it coincides for
/// nu = 1/2, where the ratio factors vanish).  `displayed_odd_lead` selects
/// the (nu+1/2) leading constant for odd i, consistent with the displayed a_1;
/// false selects the (nu-1/2) variant of the general formula.
double heat_coefficient_lemma_sum(int i, const OperatorParams& params,
                                  bool displayed_odd_lead = true);

/// Tr e^{-t(L_nu+q^2)} by direct spectral summation, truncated where the
/// Gaussian tail bound certifies absolute error <= abs_tol.
double heat_trace(double t, const OperatorParams& params, double abs_tol = 1e-12);

/// Weighted least-squares fit of heat_trace samples against the basis
/// t^{(i-1)/2}, i = 0..order, with weights sqrt(t).  The exp(-q^2 t) factor
/// is divided out before fitting and recombined exactly afterwards.  The
/// reported std_err combines the statistical estimate with an order-(I+2)
/// refinement difference, so it also covers truncation bias.
HeatExpansion fit_heat_coefficients(const OperatorParams& params,
                                    std::span<const double> grid, int order);

}  // namespace bzeta
