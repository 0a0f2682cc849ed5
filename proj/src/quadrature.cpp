#include "bzeta/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "bzeta/specfun.hpp"

namespace bzeta {

namespace {

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule
// (QUADPACK dqk15 constants).
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value, err;
  bool operator<(const Panel& o) const { return err < o.err; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double fc = f(c);
  double resg = fc * wg[3];
  double resk = fc * wgk[7];
  double resabs = std::fabs(resk);
  for (int j = 0; j < 7; ++j) {
    const double x = h * xgk[j];
    const double f1 = f(c - x), f2 = f(c + x);
    const double fsum = f1 + f2;
    if (j % 2 == 1) resg += wg[j / 2] * fsum;
    resk += wgk[j] * fsum;
    resabs += wgk[j] * (std::fabs(f1) + std::fabs(f2));
  }
  const double mean = 0.5 * resk;
  double resasc = wgk[7] * std::fabs(fc - mean);
  // cheap resasc: reuse |f - mean| at the Kronrod points via a second pass is
  // avoided; the |K - G| scaling below is the driver in practice.
  double err = std::fabs((resk - resg) * h);
  resabs *= std::fabs(h);
  resasc *= std::fabs(h);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
  err = std::max(err, eps);
  return {a, b, resk * h, err};
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, double rel_tol) {
  if (a == b) return {0.0, 0.0, 0};
  std::priority_queue<Panel> heap;
  Panel root = gk15(f, a, b);
  heap.push(root);
  double total = root.value, toterr = root.err;
  int evals = 15;
  constexpr int kMaxPanels = 4000;
  for (int it = 0; it < kMaxPanels; ++it) {
    if (toterr <= std::max(abs_tol, rel_tol * std::fabs(total)))
      return {total, toterr, evals};
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b)
      throw numeric_error("integrate: interval too small to subdivide");
    Panel left = gk15(f, worst.a, mid), right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    toterr += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
    evals += 30;
  }
  throw numeric_error("integrate: panel budget exhausted");
}

}  // namespace bzeta
