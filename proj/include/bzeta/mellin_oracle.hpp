#pragma once

#include <vector>

#include "bzeta/zeta_core.hpp"

namespace bzeta {

/// State for the split-Mellin continuation
///   Gamma(s) z(s) = sum_{i<=order} coeffs[i] t_split^{s+(i-1)/2} / (s+(i-1)/2)
///                 + int_{t_floor}^{t_split} t^{s-1} g(t) dt
///                 + int_{t_split}^{inf} t^{s-1} f(t) dt,
/// f = heat trace, g = f minus the subtracted expansion.  Valid on the strip
/// s > (1 - order)/2.  t_floor is where direct evaluation of f stops; below
/// it only the (tiny) subtracted remainder is dropped, and that truncation is
/// folded into the reported error.
struct MellinSplit {
  OperatorParams params;
  int order;
  std::vector<double> coeffs;    // a_0 .. a_order used for subtraction
  std::vector<double> coeff_se;  // 0 for exact entries, fit errors otherwise
  bool fitted;                   // true if coeffs[3..] came from a trace fit
  double t_split;
  double t_floor;
  double quad_tol;
};

struct ValueWithError {
  double value;
  double err;
};

/// Build the split state.  coeffs[0..2] are always the exact closed forms;
/// with fit_high (default) the higher ones come from a weighted fit of heat
/// trace samples, keeping this route independent of the coefficient
/// generator.
MellinSplit make_split(const OperatorParams& params, int order = 4,
                       bool fit_high = true);

/// z(s) on the strip s > (1 - order)/2.  Throws near the poles s = 1/2 - k
/// (guard half-width 1e-3).  Near s = 0 the removable 0/0 against Gamma(s)
/// is resolved by symmetric Richardson extrapolation.
ValueWithError continue_zeta(const MellinSplit& split, double s);

/// z'(0) from the constant term of the Laurent expansion of Gamma(s) z(s).
ValueWithError continue_deriv0(const MellinSplit& split);

/// Residue of z at s0 by Neville extrapolation of h z(s0 + h) to h = 0,
/// h in {0.1, ..., 0.003125}.
ValueWithError numeric_residue(const MellinSplit& split, double s0);

namespace detail {
/// z(s) = M(s) / Gamma(s) with no pole guard and no special s ~ 0 handling.
ValueWithError continue_zeta_raw(const MellinSplit& split, double s);
}  // namespace detail

}  // namespace bzeta
