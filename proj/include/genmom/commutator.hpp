#pragma once

// Expectation of the deformed canonical commutator in position and momentum
// representation, and the points where the two representations agree.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "genmom/fourier.hpp"
#include "genmom/grid.hpp"
#include "genmom/operators.hpp"

namespace genmom {

/// One state |lambda> in both representations plus the operator parameters.
/// phi is always the inverse transform of psi.
class CommutatorScenario {
 public:
  /// Derives phi = inverse_ft(psi) on k_grid.
  CommutatorScenario(DeformParamsP dp, DeformParamsX dx, GridFunction psi, const Grid& k_grid)
      : dp_(dp), dx_(dx), psi_(std::move(psi)), phi_(inverse_ft(psi_, k_grid).values) {
    check_normalized();
  }

  /// Accepts an independently supplied phi; rejected if it differs from inverse_ft(psi).
  CommutatorScenario(DeformParamsP dp, DeformParamsX dx, GridFunction psi, GridFunction phi)
      : dp_(dp), dx_(dx), psi_(std::move(psi)), phi_(std::move(phi)) {
    const auto derived = inverse_ft(psi_, phi_.grid()).values;
    if (max_abs_diff(derived, phi_) > same_state_tolerance) {
      throw std::invalid_argument("scenario: phi is not the transform of psi");
    }
    check_normalized();
  }

  const DeformParamsP& momentum_params() const { return dp_; }
  const DeformParamsX& position_params() const { return dx_; }
  const GridFunction& psi() const { return psi_; }
  const GridFunction& phi() const { return phi_; }

  static constexpr double same_state_tolerance = 1e-8;

 private:
  void check_normalized() const {
    detail::require_normalized(psi_, "scenario psi");
    detail::require_normalized(phi_, "scenario phi");
  }

  DeformParamsP dp_;
  DeformParamsX dx_;
  GridFunction psi_;
  GridFunction phi_;
};

/// [x, p_H] psi = i (1 - a sin kx - b cos kx) psi.
inline GridFunction commutator_action_x(const GridFunction& psi, const DeformParamsP& dp) {
  const double a = dp.a(), b = dp.b(), k = dp.k();
  return map_points(psi, [=](double x, cplx v) {
    return cplx(0.0, 1.0 - a * std::sin(k * x) - b * std::cos(k * x)) * v;
  });
}

/// [x, p_H] phi = i (1 - c sin kx + d cos kx) phi.
inline GridFunction commutator_action_k(const GridFunction& phi, const DeformParamsX& dx) {
  const double c = dx.c(), d = dx.d(), x = dx.x();
  return map_points(phi, [=](double k, cplx v) {
    return cplx(0.0, 1.0 - c * std::sin(k * x) + d * std::cos(k * x)) * v;
  });
}

inline cplx expectation_x_basis(const CommutatorScenario& s) {
  return inner_product(s.psi(), commutator_action_x(s.psi(), s.momentum_params()));
}

inline cplx expectation_k_basis(const CommutatorScenario& s) {
  return inner_product(s.phi(), commutator_action_k(s.phi(), s.position_params()));
}

/// i [1 + sqrt(2pi) Im((a - ib) sigma(k))]
inline cplx closed_form_x(const CommutatorScenario& s) {
  const auto& dp = s.momentum_params();
  const cplx sig = sigma_at(s.psi(), dp.k());
  return {0.0, 1.0 + sqrt_2pi * (cplx(dp.a(), -dp.b()) * sig).imag()};
}

/// i [1 - sqrt(2pi) Im((c - id) eta(x))]
inline cplx closed_form_k(const CommutatorScenario& s) {
  const auto& dx = s.position_params();
  const cplx et = eta_at(s.phi(), dx.x());
  return {0.0, 1.0 - sqrt_2pi * (cplx(dx.c(), -dx.d()) * et).imag()};
}

/// R(k, x) = Im((a - ib) sigma(k)) + Im((c - id) eta(x)); zero iff both bases agree.
inline double independence_residual(const CommutatorScenario& s, double k, double x) {
  const auto& dp = s.momentum_params();
  const auto& dx = s.position_params();
  return (cplx(dp.a(), -dp.b()) * sigma_at(s.psi(), k)).imag() +
         (cplx(dx.c(), -dx.d()) * eta_at(s.phi(), x)).imag();
}

inline double basis_independence_residual(const CommutatorScenario& s) {
  return independence_residual(s, s.momentum_params().k(), s.position_params().x());
}

struct RootScan {
  /// Every deformation parameter is zero, so R vanishes everywhere.
  bool identically_zero = false;
  std::vector<double> roots;
};

namespace detail {

inline RootScan scan_roots(const std::function<double(double)>& R, double lo, double hi,
                           std::size_t seeds, double tol = 1e-10, double bracket_width = 1e-12) {
  if (!(hi > lo) || seeds < 2) throw std::invalid_argument("root scan: bad range or seed count");
  RootScan out;
  std::vector<double> xs(seeds);
  std::vector<double> rs(seeds);
  for (std::size_t i = 0; i < seeds; ++i) {
    xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(seeds - 1);
    rs[i] = R(xs[i]);
  }
  for (std::size_t i = 0; i < seeds; ++i) {
    if (rs[i] == 0.0) out.roots.push_back(xs[i]);
  }
  for (std::size_t i = 0; i + 1 < seeds; ++i) {
    if (rs[i] == 0.0 || rs[i + 1] == 0.0 || (rs[i] < 0.0) == (rs[i + 1] < 0.0)) continue;
    double a = xs[i], b = xs[i + 1], ra = rs[i];
    double m = 0.5 * (a + b);
    for (int it = 0; it < 200; ++it) {
      m = 0.5 * (a + b);
      const double rm = R(m);
      if (rm == 0.0) break;
      if ((rm < 0.0) == (ra < 0.0)) {
        a = m;
        ra = rm;
      } else {
        b = m;
      }
      if (b - a <= bracket_width && std::abs(rm) < tol) break;
    }
    out.roots.push_back(m);
  }
  std::sort(out.roots.begin(), out.roots.end());
  std::vector<double> dedup;
  for (double r : out.roots) {
    if (dedup.empty() || r - dedup.back() > 1e-8) dedup.push_back(r);
  }
  out.roots = std::move(dedup);
  return out;
}

}  // namespace detail

/// Roots in x of R(k_fixed, x) with k taken from the scenario.
inline RootScan find_independence_roots(const CommutatorScenario& s, double x_lo, double x_hi,
                                        std::size_t seeds) {
  if (s.momentum_params().is_standard() && s.position_params().is_standard()) {
    return {true, {}};
  }
  const double k = s.momentum_params().k();
  const double sigma_part =
      (cplx(s.momentum_params().a(), -s.momentum_params().b()) * sigma_at(s.psi(), k)).imag();
  const cplx Dc(s.position_params().c(), -s.position_params().d());
  return detail::scan_roots([&](double x) { return sigma_part + (Dc * eta_at(s.phi(), x)).imag(); },
                            x_lo, x_hi, seeds);
}

/// Roots in k of R(k, x_fixed) with x taken from the scenario.
inline RootScan find_independence_roots_in_k(const CommutatorScenario& s, double k_lo, double k_hi,
                                             std::size_t seeds) {
  if (s.momentum_params().is_standard() && s.position_params().is_standard()) {
    return {true, {}};
  }
  const double x = s.position_params().x();
  const double eta_part =
      (cplx(s.position_params().c(), -s.position_params().d()) * eta_at(s.phi(), x)).imag();
  const cplx Cc(s.momentum_params().a(), -s.momentum_params().b());
  return detail::scan_roots([&](double k) { return (Cc * sigma_at(s.psi(), k)).imag() + eta_part; },
                            k_lo, k_hi, seeds);
}

}  // namespace genmom
