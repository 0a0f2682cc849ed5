#pragma once

#include <functional>

namespace bzeta {

struct QuadResult {
  double value;
  double err;  // estimated absolute error
  int evaluations;
};

/// Adaptive Gauss-Kronrod (7-15) quadrature on [a, b] with bisection of the
/// worst interval until the summed error estimate drops below
/// max(abs_tol, rel_tol * |value|).  Throws numeric_error if the tolerance
/// cannot be met within the subdivision budget.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-12, double rel_tol = 1e-12);

}  // namespace bzeta
