#pragma once

// Infinite square well on [0, L] with the Hermitian generalized momentum
// operator at b = 0. States are built from the +k0 and -k0 eigenfunctions,
//   psi_n = P (e^{i theta1}/sqrt(1 - a sin k0 x) - e^{-i theta2}/sqrt(1 + a sin k0 x)),
// with P = -i/sqrt(2L) fixed by the a -> 0 limit.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "genmom/eigenfunctions.hpp"
#include "genmom/grid.hpp"
#include "genmom/operators.hpp"
#include "genmom/phase.hpp"

namespace genmom {

class WellConfig {
 public:
  WellConfig(double L, double m, double a, int n_max) : L_(L), m_(m), a_(a), n_max_(n_max) {
    if (!(L > 0.0)) throw std::invalid_argument("well width L must be positive");
    if (!(m > 0.0)) throw std::invalid_argument("mass m must be positive");
    if (!(std::abs(a) < 1.0)) throw std::invalid_argument("a out of domain |a| < 1");
    if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  }
  double L() const { return L_; }
  double m() const { return m_; }
  double a() const { return a_; }
  int n_max() const { return n_max_; }

 private:
  double L_, m_, a_;
  int n_max_;
};

struct ThetaPhases {
  double theta1;
  double theta2;
};

/// theta1,2(x) = k0 x/2 + atan((tan(k0 x/2) -+ a)/s)/s on the continuous branch.
inline ThetaPhases theta_phases(double a, double k0, double x) {
  if (!(std::abs(a) < 1.0)) throw std::invalid_argument("a out of domain |a| < 1");
  const double s = std::sqrt(1.0 - a * a);
  const double u = 0.5 * k0 * x;
  return {u + phase::atan_tan_shift(u, a) / s, u + phase::atan_tan_shift(u, -a) / s};
}

/// |e^{i theta1(L)}/sqrt(1 - a sin kL) - e^{-i theta2(L)}/sqrt(1 + a sin kL)|;
/// vanishes exactly when psi(L) = 0 for trial wavenumber k.
inline double boundary_residual(double a, double L, double k) {
  const auto [t1, t2] = theta_phases(a, k, L);
  const double sn = std::sin(k * L);
  return std::abs(std::polar(1.0 / std::sqrt(1.0 - a * sn), t1) -
                  std::polar(1.0 / std::sqrt(1.0 + a * sn), -t2));
}

inline constexpr double well_root_tolerance = 1e-8;

struct WellLevel {
  int n;
  double k0;
  double E;  // k0^2 / (2m), hbar = 1
  double residual;
  bool confirmed;
};

/// Levels k0 = n pi / L, each checked against the boundary residual.
inline std::vector<WellLevel> spectrum(const WellConfig& cfg) {
  std::vector<WellLevel> out;
  for (int n = 1; n <= cfg.n_max(); ++n) {
    const double k0 = n * pi / cfg.L();
    const double r = boundary_residual(cfg.a(), cfg.L(), k0);
    out.push_back({n, k0, k0 * k0 / (2.0 * cfg.m()), r, r < well_root_tolerance});
  }
  return out;
}

/// Zeros of the boundary residual on (0, k_max]: local minima of a uniform scan
/// refined by golden-section search, kept when the minimum is below tolerance.
/// The trivial zero at k = 0 (psi identically zero) is skipped.
inline std::vector<double> scan_boundary_roots(double a, double L, double k_max, std::size_t points,
                                               double tolerance = well_root_tolerance) {
  if (points < 3) throw std::invalid_argument("scan needs at least 3 points");
  const double h = k_max / static_cast<double>(points);
  auto F = [&](double k) { return boundary_residual(a, L, k); };
  std::vector<double> ks(points + 2), fs(points + 2);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    ks[i] = h * static_cast<double>(i);
    fs[i] = F(std::min(ks[i], k_max + h));
  }
  std::vector<double> roots;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  for (std::size_t i = 1; i + 1 < ks.size(); ++i) {
    if (!(fs[i] <= fs[i - 1] && fs[i] <= fs[i + 1])) continue;
    double lo = ks[i - 1], hi = ks[i + 1];
    double c = hi - g * (hi - lo), d = lo + g * (hi - lo);
    double fc = F(c), fd = F(d);
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
      if (fc < fd) {
        hi = d;
        d = c;
        fd = fc;
        c = hi - g * (hi - lo);
        fc = F(c);
      } else {
        lo = c;
        c = d;
        fc = fd;
        d = lo + g * (hi - lo);
        fd = F(d);
      }
    }
    const double kmin = 0.5 * (lo + hi);
    if (kmin > h && kmin <= k_max && F(kmin) < tolerance) {
      if (roots.empty() || kmin - roots.back() > 1e-8) roots.push_back(kmin);
    }
  }
  return roots;
}

namespace detail {

// The two branch functions e^{i theta1}/sqrt(1 - a sin) and e^{-i theta2}/sqrt(1 + a sin).
inline cplx well_plus(double a, double k0, double x) {
  const auto th = theta_phases(a, k0, x);
  return std::polar(1.0 / std::sqrt(1.0 - a * std::sin(k0 * x)), th.theta1);
}
inline cplx well_minus(double a, double k0, double x) {
  const auto th = theta_phases(a, k0, x);
  return std::polar(1.0 / std::sqrt(1.0 + a * std::sin(k0 * x)), -th.theta2);
}

}  // namespace detail

inline cplx well_prefactor(const WellConfig& cfg) { return {0.0, -1.0 / std::sqrt(2.0 * cfg.L())}; }

inline GridFunction psi_n(const WellConfig& cfg, int n, const Grid& g, std::optional<cplx> P = {}) {
  if (n < 1 || n > cfg.n_max()) {
    throw std::invalid_argument("quantum number out of range 1.." + std::to_string(cfg.n_max()));
  }
  const cplx pref = P.value_or(well_prefactor(cfg));
  const double k0 = n * pi / cfg.L();
  const double a = cfg.a();
  return sample([&](double x) { return pref * (detail::well_plus(a, k0, x) - detail::well_minus(a, k0, x)); },
                g);
}

struct WellSolution {
  int n;
  double k0;
  double E;
  GridFunction psi;
  cplx psi_at_0;
  cplx psi_at_L;
};

inline WellSolution solve_level(const WellConfig& cfg, int n, const Grid& g) {
  auto psi = psi_n(cfg, n, g);
  const double k0 = n * pi / cfg.L();
  const cplx pref = well_prefactor(cfg);
  const cplx at0 = pref * (detail::well_plus(cfg.a(), k0, 0.0) - detail::well_minus(cfg.a(), k0, 0.0));
  const cplx atL =
      pref * (detail::well_plus(cfg.a(), k0, cfg.L()) - detail::well_minus(cfg.a(), k0, cfg.L()));
  return {n, k0, k0 * k0 / (2.0 * cfg.m()), std::move(psi), at0, atL};
}

/// ||p_H^2 psi_n - k0^2 psi_n|| / ||psi_n|| where each branch is acted on by the
/// operator whose internal wavenumber equals its eigenvalue label (+k0 / -k0).
inline double hamiltonian_residual(const WellConfig& cfg, int n, const Grid& g) {
  const double a = cfg.a();
  const double k0 = n * pi / cfg.L();
  const cplx pref = well_prefactor(cfg);
  const auto plus = sample([&](double x) { return detail::well_plus(a, k0, x); }, g);
  const auto minus = sample([&](double x) { return detail::well_minus(a, k0, x); }, g);
  const DeformParamsP up(a, 0.0, k0), down(a, 0.0, -k0);
  GridFunction r = apply_pH(apply_pH(plus, up), up) - (k0 * k0) * plus;
  r -= apply_pH(apply_pH(minus, down), down) - (k0 * k0) * minus;
  r *= pref;
  const GridFunction psi = pref * (plus - minus);
  return interior_l2(r, 4) / interior_l2(psi, 4);
}

/// Same residual with a single operator p_H(a, 0, k0) applied to the whole state.
inline double hamiltonian_residual_fixed_k(const WellConfig& cfg, int n, const Grid& g) {
  const double k0 = n * pi / cfg.L();
  const auto psi = psi_n(cfg, n, g);
  const DeformParamsP dp(cfg.a(), 0.0, k0);
  const GridFunction r = apply_pH(apply_pH(psi, dp), dp) - (k0 * k0) * psi;
  return interior_l2(r, 4) / interior_l2(psi, 4);
}

/// Int_0^L |psi_n|^2 dx; not forced to one for a != 0.
inline double norm_report(const GridFunction& psi) { return inner_product(psi, psi).real(); }

}  // namespace genmom
