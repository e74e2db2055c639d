#pragma once

// Plot-ready two-column CSV curves.

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genmom/cli/config.hpp"
#include "genmom/cli/report.hpp"
#include "genmom/cli/suites.hpp"
#include "genmom/commutator.hpp"
#include "genmom/eigenfunctions.hpp"
#include "genmom/fourier.hpp"
#include "genmom/squarewell.hpp"

namespace genmom::cli {

enum class Quantity { density_a, density_b, psi_n_real, psi_n_imag, eta, sigma, residual_R };

inline Quantity parse_quantity(std::string_view s) {
  static const std::pair<std::string_view, Quantity> names[] = {
      {"density_a", Quantity::density_a},   {"density_b", Quantity::density_b}, {"psi_n_real", Quantity::psi_n_real},
      {"psi_n_imag", Quantity::psi_n_imag}, {"eta", Quantity::eta},             {"sigma", Quantity::sigma},
      {"residual_R", Quantity::residual_R}};
  for (const auto& [name, q] : names) {
    if (name == s) return q;
  }
  throw ConfigError("unknown quantity '" + std::string(s) + "'");
}

/// Abscissa for the curve. Unset ends fall back to a per-quantity default.
struct CurveAxis {
  std::optional<double> from, to;
  std::size_t points = 1001;
  int level = 1;  // well quantum number for psi_n_*
};

struct CurveRequest {
  Quantity quantity = Quantity::density_a;
  Params params;
  CurveAxis axis;
  std::string output_path;
};

/// Routes axis keys (from, to, points, level) to the axis and the rest to params.
inline void apply_curve_assignment(CurveRequest& req, const std::string& kv) {
  const auto eq = kv.find('=');
  const std::string key = eq == std::string::npos ? kv : kv.substr(0, eq);
  if (key != "from" && key != "to" && key != "points" && key != "level") {
    req.params.set_assignment(kv);
    return;
  }
  std::size_t used = 0;
  const std::string text = kv.substr(eq + 1);
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(v)) {
    throw ConfigError("parameter '" + key + "': '" + text + "' is not a finite number");
  }
  if (key == "from") req.axis.from = v;
  if (key == "to") req.axis.to = v;
  if (key == "points" || key == "level") {
    if (v < 1 || std::floor(v) != v) throw ConfigError(key + " must be a positive integer");
    if (key == "points") req.axis.points = static_cast<std::size_t>(v);
    else req.axis.level = static_cast<int>(v);
  }
}

namespace detail {

struct Axis {
  double from, to;
};

inline Axis resolve_axis(const CurveRequest& r) {
  Axis d{0.0, 2.0 * pi};
  switch (r.quantity) {
    case Quantity::psi_n_real:
    case Quantity::psi_n_imag: d = {0.0, r.params["L"]}; break;
    case Quantity::eta:
    case Quantity::sigma:
    case Quantity::residual_R: d = {-5.0, 5.0}; break;
    default: break;
  }
  const Axis a{r.axis.from.value_or(d.from), r.axis.to.value_or(d.to)};
  if (!(a.to > a.from)) throw ConfigError("curve axis: 'to' must exceed 'from'");
  if (r.axis.points < 2) throw ConfigError("curve axis: points must be at least 2");
  return a;
}

}  // namespace detail

/// Renders the CSV. eta and sigma are the transforms of the unit Gaussian's
/// densities (real valued); residual_R is R(k, x) for that state along x.
inline std::string emit_curve(const CurveRequest& req) {
  const Params& p = req.params;
  validate(p);
  const auto ax = detail::resolve_axis(req);
  const std::size_t n = req.axis.points;

  std::function<double(double)> f;
  std::optional<WellConfig> well;
  std::optional<CommutatorScenario> scenario;
  const bool needs_state =
      req.quantity == Quantity::eta || req.quantity == Quantity::sigma || req.quantity == Quantity::residual_R;
  if (needs_state) {
    const Grid xg(-p["state_x"], p["state_x"], p.count("state_n"));
    const Grid kg(-p["state_k"], p["state_k"], p.count("state_n"));
    scenario.emplace(DeformParamsP(p["a"], p["b"], p["k"]), DeformParamsX(p["c"], p["d"], p["x"]),
                     sample(detail::unit_gaussian, xg), kg);
  }
  switch (req.quantity) {
    case Quantity::density_a: f = [&](double x) { return density_case_a(p["a"], p["k"], x); }; break;
    case Quantity::density_b: f = [&](double x) { return density_case_b(p["b"], p["k"], x); }; break;
    case Quantity::psi_n_real:
    case Quantity::psi_n_imag: {
      well.emplace(p["L"], p["m"], p["a"], static_cast<int>(p["n_max"]));
      if (req.axis.level > well->n_max()) throw ConfigError("level exceeds n_max");
      const double k0 = req.axis.level * pi / p["L"];
      const bool re = req.quantity == Quantity::psi_n_real;
      f = [&, k0, re](double x) {
        const cplx v = well_prefactor(*well) * (genmom::detail::well_plus(p["a"], k0, x) -
                                                genmom::detail::well_minus(p["a"], k0, x));
        return re ? v.real() : v.imag();
      };
      break;
    }
    case Quantity::eta: f = [&](double x) { return eta_at(scenario->phi(), x).real(); }; break;
    case Quantity::sigma: f = [&](double k) { return sigma_at(scenario->psi(), k).real(); }; break;
    case Quantity::residual_R:
      f = [&](double x) { return independence_residual(*scenario, p["k"], x); };
      break;
  }

  std::string out = req.quantity == Quantity::sigma ? "k,value\n" : "x,value\n";
  for (std::size_t i = 0; i < n; ++i) {
    const double t =
        i + 1 == n ? ax.to : ax.from + (ax.to - ax.from) * static_cast<double>(i) / static_cast<double>(n - 1);
    out += format_double(t) + "," + format_double(f(t) + 0.0) + "\n";  // + 0.0 folds -0 into 0
  }
  return out;
}

}  // namespace genmom::cli
