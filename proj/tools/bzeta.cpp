// Command line front end.  Exit codes: 0 success, 1 numeric failure or a
// failed verification check, 2 usage/domain errors.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <string>
#include <vector>

#include "bzeta/mellin_oracle.hpp"
#include "bzeta/regprod.hpp"

using json = nlohmann::ordered_json;
using namespace bzeta;

namespace {

struct Options {
  double nu = 0.0;
  double q = 1.0;
  double l = 1.0;
  double a = 1.0;
  bool rb = false;
  std::string route = "closed_form";
  std::string output = "text";
  int kmax = 5;
  int count = 10;
  double accuracy = 1e-10;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

OperatorParams params_of(const Options& o) {
  if (o.rb) return {o.nu, o.a, kPi};
  return {o.nu, o.q, o.l};
}

json inputs_of(const Options& o) {
  json in;
  in["nu"] = o.nu;
  if (o.rb) {
    in["a"] = o.a;
  } else {
    in["q"] = o.q;
    in["l"] = o.l;
  }
  in["rb"] = o.rb;
  return in;
}

Route route_of(const std::string& name) {
  if (name == "closed_form") return Route::closed_form;
  if (name == "comparison") return Route::comparison;
  if (name == "mellin_oracle") return Route::mellin_oracle;
  throw CLI::ValidationError("--route must be closed_form, comparison or mellin_oracle");
}

ZetaInvariants invariants_by_route(const OperatorParams& p, Route r) {
  switch (r) {
    case Route::closed_form:
      return closed_form_invariants(p);
    case Route::comparison:
      return invariants_via_comparison(p);
    case Route::mellin_oracle: {
      const MellinSplit sp = make_split(p);
      const ValueWithError d0 = continue_deriv0(sp);
      ZetaInvariants inv;
      inv.value0 = continue_zeta(sp, 0.0).value;
      inv.deriv0 = d0.value;
      inv.log_det = -d0.value;
      inv.err = d0.err;
      inv.route = Route::mellin_oracle;
      inv.det_overflow = inv.log_det > 709.0;
      inv.det = inv.det_overflow ? INFINITY : std::exp(inv.log_det);
      return inv;
    }
  }
  throw std::logic_error("unreachable");
}

std::string scalar(const json& v) {
  return v.is_number_float() ? fmt(v.get<double>()) : v.dump();
}

void flatten(const std::string& prefix, const json& v,
             std::vector<std::pair<std::string, std::string>>* rows) {
  if (v.is_object()) {
    for (auto& [k, e] : v.items())
      flatten(prefix.empty() ? k : prefix + "." + k, e, rows);
  } else if (v.is_array()) {
    int i = 0;
    for (auto& e : v) flatten(prefix + "." + std::to_string(i++), e, rows);
  } else {
    rows->emplace_back(prefix, scalar(v));
  }
}

void emit(const Options& o, json out) {
  if (o.output == "json") {
    std::printf("%s\n", out.dump(2).c_str());
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten("", out, &rows);
  for (const auto& [k, v] : rows)
    std::printf(o.output == "csv" ? "%s,%s\n" : "%s = %s\n", k.c_str(), v.c_str());
}

json run_zeros(const Options& o) {
  const ZeroTable& tab = shared_zeros(o.nu, o.count);
  json out;
  out["inputs"] = {{"nu", o.nu}, {"count", o.count}};
  json arr = json::array();
  for (int n = 1; n <= o.count; ++n) arr.push_back(tab[n]);
  out["value"] = arr;
  out["err_estimate"] = 1e-12 * tab[o.count];
  return out;
}

json run_heat(const Options& o, double t, int order) {
  const OperatorParams p = params_of(o);
  json out;
  out["inputs"] = inputs_of(o);
  out["inputs"]["t"] = t;
  out["value"] = heat_trace(t, p, o.accuracy);
  out["err_estimate"] = o.accuracy;
  json coeffs = json::array();
  for (double c : heat_coefficients(p, order)) coeffs.push_back(c);
  out["coefficients"] = coeffs;
  return out;
}

json run_zeta(const Options& o, double s) {
  const OperatorParams p = params_of(o);
  const double sop = o.rb ? 0.5 * s : s;  // doubled-argument scale
  json out;
  out["inputs"] = inputs_of(o);
  out["inputs"]["s"] = s;
  if (sop > 0.5) {
    out["route"] = "direct_sum";
    out["value"] = zeta_direct(sop, p, o.accuracy);
    out["err_estimate"] = o.accuracy;
  } else {
    const ValueWithError z = continue_zeta(make_split(p), sop);
    out["route"] = "mellin_oracle";
    out["value"] = z.value;
    out["err_estimate"] = z.err;
  }
  return out;
}

json run_poles(const Options& o) {
  const OperatorParams p = params_of(o);
  json out;
  out["inputs"] = inputs_of(o);
  json arr = json::array();
  if (o.rb) {
    const RbInvariants rb = rb_invariants(o.nu, o.a, o.kmax);
    for (const PoleResidue& z : rb.poles)
      arr.push_back({{"location", z.location}, {"residue", z.residue}, {"k", z.k}});
  } else {
    for (int k = 0; k <= o.kmax; ++k) {
      const PoleResidue z = pole_data(k, p);
      arr.push_back({{"location", z.location}, {"residue", z.residue}, {"k", z.k}});
    }
  }
  out["value"] = arr;
  out["err_estimate"] = 1e-12;
  return out;
}

json run_invariants(const Options& o) {
  const OperatorParams p = params_of(o);
  const ZetaInvariants inv = invariants_by_route(p, route_of(o.route));
  json out;
  out["inputs"] = inputs_of(o);
  out["route"] = o.route;
  json v;
  v["value0"] = inv.value0;  // unchanged by the argument doubling
  v["deriv0"] = o.rb ? 0.5 * inv.deriv0 : inv.deriv0;
  v["log_det"] = o.rb ? -0.5 * inv.deriv0 : inv.log_det;
  v["det"] = o.rb ? std::exp(-0.5 * inv.deriv0) : inv.det;
  v["det_overflow"] = inv.det_overflow;
  out["value"] = v;
  out["err_estimate"] = inv.err;
  return out;
}

json run_det(const Options& o) {
  const OperatorParams p = params_of(o);
  const ZetaInvariants inv = regularized_determinant(p);
  json out;
  out["inputs"] = inputs_of(o);
  out["route"] = "closed_form";
  out["value"] = inv.det;
  out["log_det"] = inv.log_det;
  out["det_overflow"] = inv.det_overflow;
  out["err_estimate"] = inv.err;
  return out;
}

json run_verify(const Options& o, int* failures) {
  const OperatorParams p = params_of(o);
  json checks = json::array();
  auto push = [&](const char* name, double got, double want, double tol) {
    const double diff = std::fabs(got - want);
    const bool ok = diff <= tol;
    if (!ok) ++*failures;
    checks.push_back({{"name", name},
                      {"got", got},
                      {"want", want},
                      {"abs_diff", diff},
                      {"tol", tol},
                      {"pass", ok}});
  };

  const ZetaInvariants cf = closed_form_invariants(p);
  push("deriv0: comparison vs closed form", invariants_via_comparison(p).deriv0,
       cf.deriv0, 1e-8);
  const MellinSplit sp = make_split(p);
  push("deriv0: mellin vs closed form", continue_deriv0(sp).value, cf.deriv0, 1e-4);
  push("value0: mellin vs -(nu+1/2)/2", continue_zeta(sp, 0.0).value,
       zeta_at_zero(p), 1e-6);
  push("product constant: accelerated vs closed form",
       product_constant(make_comparison(p)).log_value,
       log_product_constant_closed_form(p), 1e-9);
  push("residue at s=1/2 vs l/(2 pi)", numeric_residue(sp, 0.5).value,
       pole_data(0, p).residue, 1e-5);
  {
    const int N = 4000;
    const ZeroTable& tab = shared_zeros(p.nu, N);
    double sum = 0.0;
    for (int n = N; n >= 1; --n) {
      const double l2 = (tab[n] / p.l) * (tab[n] / p.l);
      sum += 1.0 / (-1.0 - l2 - p.q * p.q);
    }
    sum -= detail::spectral_tail(1.0, p.nu, p.l, p.q * p.q + 1.0, N);
    push("resolvent at lambda=-1: closed vs pole sum", resolvent_trace(-1.0, p),
         sum, 1e-8);
  }

  json out;
  out["inputs"] = inputs_of(o);
  out["checks"] = checks;
  out["value"] = (*failures == 0);
  out["err_estimate"] = 0.0;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral zeta toolkit for the singular Bessel operator"};
  app.require_subcommand(1);

  Options o;
  double s_arg = 1.0, t_arg = 0.01;
  int order_arg = 4;

  auto add_common = [&](CLI::App* cmd, bool needs_q = true) {
    cmd->add_option("--nu", o.nu, "Bessel order nu >= 0");
    if (needs_q) {
      cmd->add_option("--q", o.q, "mass parameter q >= 0");
      cmd->add_option("--l", o.l, "interval length l > 0");
      cmd->add_option("--a", o.a, "parameter a for the doubled-argument scale");
      cmd->add_flag("--rb", o.rb, "doubled-argument scale: uses --a and fixes l = pi");
    }
    cmd->add_option("--output", o.output, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--accuracy", o.accuracy, "absolute accuracy target");
  };

  CLI::App* zeros = app.add_subcommand("zeros", "positive zeros of J_nu");
  add_common(zeros, false);
  zeros->add_option("--count", o.count, "number of zeros");

  CLI::App* heat = app.add_subcommand("heat", "heat trace and its expansion");
  add_common(heat);
  heat->add_option("--t", t_arg, "time argument t > 0");
  heat->add_option("--order", order_arg, "highest expansion coefficient");

  CLI::App* zeta = app.add_subcommand("zeta", "zeta function value");
  add_common(zeta);
  zeta->add_option("--s", s_arg, "argument s");

  CLI::App* poles = app.add_subcommand("poles", "pole locations and residues");
  add_common(poles);
  poles->add_option("--kmax", o.kmax, "highest pole index");

  CLI::App* invariants =
      app.add_subcommand("invariants", "z(0), z'(0) and the determinant");
  add_common(invariants);
  invariants->add_option("--route", o.route,
                         "closed_form, comparison or mellin_oracle");

  CLI::App* det = app.add_subcommand("det", "regularized determinant");
  add_common(det);

  CLI::App* verify =
      app.add_subcommand("verify", "deterministic cross-route checks");
  add_common(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    int failures = 0;
    json out;
    if (zeros->parsed()) out = run_zeros(o);
    else if (heat->parsed()) out = run_heat(o, t_arg, order_arg);
    else if (zeta->parsed()) out = run_zeta(o, s_arg);
    else if (poles->parsed()) out = run_poles(o);
    else if (invariants->parsed()) out = run_invariants(o);
    else if (det->parsed()) out = run_det(o);
    else out = run_verify(o, &failures);
    emit(o, out);
    return failures ? 1 : 0;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const numeric_error& e) {
    std::fprintf(stderr, "numeric error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
