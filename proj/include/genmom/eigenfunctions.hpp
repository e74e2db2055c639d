#pragma once

// Eigenfunctions of the Hermitian generalized momentum operator p_H.
//
// Closed forms exist for b = 0 (case A) and a = 0 (case B); for general (a, b)
// the first-order eigenvalue ODE is integrated with RK4. The quadratures of the
// exponent integrands I1/I2 serve as independent references for the closed forms.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "genmom/grid.hpp"
#include "genmom/operators.hpp"
#include "genmom/phase.hpp"

namespace genmom {

inline const double default_normalization = 1.0 / sqrt_2pi;

enum class EigenCase { CaseA, CaseB, General };

class EigenfunctionSpec {
 public:
  EigenfunctionSpec(EigenCase which, double a, double b, double k, cplx normalization = default_normalization)
      : case_(which), a_(a), b_(b), k_(k), norm_(normalization) {
    switch (which) {
      case EigenCase::CaseA:
        if (b != 0.0) throw std::invalid_argument("case A requires b = 0");
        if (!(std::abs(a) < 1.0)) throw std::invalid_argument("a out of domain |a| < 1");
        break;
      case EigenCase::CaseB:
        if (a != 0.0) throw std::invalid_argument("case B requires a = 0");
        if (!(std::abs(b) < 1.0)) throw std::invalid_argument("b out of domain |b| < 1");
        break;
      case EigenCase::General:
        if (!(a * a + b * b < 1.0)) throw std::invalid_argument("(a, b) out of domain a^2 + b^2 < 1");
        break;
    }
  }
  EigenCase which() const { return case_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double k() const { return k_; }
  cplx normalization() const { return norm_; }
  DeformParamsP operator_params() const { return {a_, b_, k_}; }

 private:
  EigenCase case_;
  double a_, b_, k_;
  cplx norm_;
};

namespace detail {

inline void require_unit_disk(double v, const char* name) {
  if (!(std::abs(v) < 1.0)) {
    throw std::invalid_argument(std::string(name) + " out of domain |" + name + "| < 1");
  }
}

}  // namespace detail

// ---- case A (b = 0) -------------------------------------------------------

/// Continuous phase kx/2 + atan((tan(kx/2) - a)/s)/s, s = sqrt(1 - a^2).
inline double phase_case_a(double a, double k, double x) {
  detail::require_unit_disk(a, "a");
  const double s = std::sqrt(1.0 - a * a);
  const double u = 0.5 * k * x;
  return u + phase::atan_tan_shift(u, a) / s;
}

inline cplx psi_case_a(double a, double k, double x, cplx A = default_normalization) {
  detail::require_unit_disk(a, "a");
  if (k == 0.0) return A;  // degenerate: p_H psi = 0 is solved by a constant
  const double amp = 1.0 / std::sqrt(std::abs(1.0 - a * std::sin(k * x)));
  return A * amp * std::polar(1.0, phase_case_a(a, k, x));
}

inline double density_case_a(double a, double k, double x, cplx A = default_normalization) {
  detail::require_unit_disk(a, "a");
  return std::norm(A) / std::abs(1.0 - a * std::sin(k * x));
}

// ---- case B (a = 0) -------------------------------------------------------

/// Continuous phase kx/2 + atan(sqrt((1+b)/(1-b)) tan(kx/2))/s, s = sqrt(1 - b^2).
inline double phase_case_b(double b, double k, double x) {
  detail::require_unit_disk(b, "b");
  const double s = std::sqrt(1.0 - b * b);
  const double u = 0.5 * k * x;
  return u + phase::atan_tan_scale(u, std::sqrt((1.0 + b) / (1.0 - b))) / s;
}

inline cplx psi_case_b(double b, double k, double x, cplx B = default_normalization) {
  detail::require_unit_disk(b, "b");
  if (k == 0.0) return B;
  const double amp = 1.0 / std::sqrt(std::abs(1.0 - b * std::cos(k * x)));
  return B * amp * std::polar(1.0, phase_case_b(b, k, x));
}

inline double density_case_b(double b, double k, double x, cplx B = default_normalization) {
  detail::require_unit_disk(b, "b");
  return std::norm(B) / std::abs(1.0 - b * std::cos(k * x));
}

inline cplx evaluate(const EigenfunctionSpec& spec, double x) {
  switch (spec.which()) {
    case EigenCase::CaseA: return psi_case_a(spec.a(), spec.k(), x, spec.normalization());
    case EigenCase::CaseB: return psi_case_b(spec.b(), spec.k(), x, spec.normalization());
    case EigenCase::General: break;
  }
  throw std::invalid_argument("no closed form for the general case; use psi_general_numeric");
}

inline GridFunction sample_eigenfunction(const EigenfunctionSpec& spec, const Grid& g) {
  return sample([&](double x) { return evaluate(spec, x); }, g);
}

// ---- exponent integrals ---------------------------------------------------

/// Int_0^x (1 - (ia/2) e^{-iks}) / (1 - a sin ks) ds by adaptive Simpson.
inline cplx I1_quadrature(double a, double k, double x) {
  detail::require_unit_disk(a, "a");
  auto integrand = [a, k](double s) {
    return (1.0 - cplx(0.0, 0.5 * a) * std::polar(1.0, -k * s)) / (1.0 - a * std::sin(k * s));
  };
  const double panel = k == 0.0 ? 1.0 : std::min(1.0, pi / (4.0 * std::abs(k)));
  return adaptive_simpson_panels(integrand, 0.0, x, panel, 1e-13);
}

/// Int_0^x (1 - (b/2) e^{-iks}) / (1 - b cos ks) ds by adaptive Simpson.
inline cplx I2_quadrature(double b, double k, double x) {
  detail::require_unit_disk(b, "b");
  auto integrand = [b, k](double s) {
    return (1.0 - 0.5 * b * std::polar(1.0, -k * s)) / (1.0 - b * std::cos(k * s));
  };
  const double panel = k == 0.0 ? 1.0 : std::min(1.0, pi / (4.0 * std::abs(k)));
  return adaptive_simpson_panels(integrand, 0.0, x, panel, 1e-13);
}

// ---- residual and numerical eigenfunction ----------------------------------

/// ||p_H psi - k psi|| / ||psi|| over samples away from the one-sided stencils.
inline double eigen_residual(const GridFunction& psi, const DeformParamsP& dp) {
  GridFunction r = apply_pH(psi, dp);
  r -= dp.k() * psi;
  const double den = interior_l2(psi, 2);
  if (den == 0.0) throw std::invalid_argument("eigen_residual: zero state");
  return interior_l2(r, 2) / den;
}

struct NumericEigenfunction {
  GridFunction psi;
  double residual;          // eigen_residual under p_H
  double richardson_error;  // max |psi_h - psi_{h/2}| / max |psi|
  int substeps;             // RK4 steps per grid interval
  bool converged;
};

namespace detail {

// psi' = rate(x) psi for the eigenvalue equation p_H psi = k psi.
inline cplx eigen_rate(double a, double b, double k, double x) {
  const cplx num = cplx(0.0, k) * (1.0 - cplx(0.0, 0.5) * cplx(a, -b) * std::polar(1.0, -k * x));
  return num / (1.0 - a * std::sin(k * x) - b * std::cos(k * x));
}

inline GridFunction rk4_eigen(double a, double b, double k, const Grid& g, int substeps, cplx start) {
  GridFunction out(g);
  out[0] = start;
  const double h = g.spacing() / substeps;
  cplx y = start;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    double x = g[i];
    for (int s = 0; s < substeps; ++s) {
      const cplx k1 = eigen_rate(a, b, k, x) * y;
      const cplx mid = eigen_rate(a, b, k, x + 0.5 * h);
      const cplx k2 = mid * (y + 0.5 * h * k1);
      const cplx k3 = mid * (y + 0.5 * h * k2);
      const cplx k4 = eigen_rate(a, b, k, x + h) * (y + h * k3);
      y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      x = g[i] + (s + 1) * h;
    }
    out[i + 1] = y;
  }
  return out;
}

}  // namespace detail

/// Integrates p_H psi = k psi from x_min with psi(x_min) = 1/sqrt(2pi). The step
/// is refined (1, 2, 4, ... substeps per interval) until consecutive solutions
/// agree to `tolerance` relative to max |psi|.
inline NumericEigenfunction psi_general_numeric(double a, double b, double k, const Grid& g,
                                                double tolerance = 1e-10, int max_substeps = 64) {
  const DeformParamsP dp(a, b, k);
  int s = 1;
  GridFunction coarse = detail::rk4_eigen(a, b, k, g, s, default_normalization);
  for (;;) {
    GridFunction fine = detail::rk4_eigen(a, b, k, g, 2 * s, default_normalization);
    const double err = max_abs_diff(coarse, fine) / max_abs(fine);
    if (err <= tolerance || 2 * s >= max_substeps) {
      const double res = eigen_residual(fine, dp);
      return {std::move(fine), res, err, 2 * s, err <= tolerance};
    }
    coarse = std::move(fine);
    s *= 2;
  }
}

// ---- overlap analysis (b = 0) ----------------------------------------------

namespace detail {

// v = sin(dx/2) / (cos(dx/2) - a sin(sx/2)) with d = k - kp, s = k + kp; this is the
// tangent-ratio expression multiplied through by cos(kx/2) cos(kp x/2).
struct VParts {
  double num;
  double den;
};

inline VParts v_parts(double a, double k, double kp, double x) {
  return {std::sin(0.5 * (k - kp) * x), std::cos(0.5 * (k - kp) * x) - a * std::sin(0.5 * (k + kp) * x)};
}

}  // namespace detail

/// (tan(kx/2) - tan(kp x/2)) / (1 - a(tan(kx/2) + tan(kp x/2)) + tan(kx/2) tan(kp x/2)),
/// continued through the tangent poles.
inline double v_of_x(double a, double k, double kp, double x) {
  const auto [num, den] = detail::v_parts(a, k, kp, x);
  if (std::abs(den) <= 1e-14 * std::max(1.0, std::abs(num))) {
    throw std::domain_error("v(x): pole without finite limit at x = " + std::to_string(x));
  }
  return num / den;
}

/// (k - kp) x / 2 + atan(s v(x)) / s on the branch continuous with the eigenfunction
/// phase difference.
inline double Phi_of_x(double a, double k, double kp, double x) {
  detail::require_unit_disk(a, "a");
  const double s = std::sqrt(1.0 - a * a);
  const auto [num, den] = detail::v_parts(a, k, kp, x);
  const double principal = 0.5 * (k - kp) * x + std::atan2(s * num, den) / s;
  const double reference = phase_case_a(a, k, x) - phase_case_a(a, kp, x);
  return phase::nearest_branch(principal, reference, pi / s);
}

namespace detail {

inline double w_integrand(double a, double k, double kp, double x) {
  return 1.0 / std::sqrt((1.0 - a * std::sin(kp * x)) * (1.0 - a * std::sin(k * x)));
}

}  // namespace detail

/// Int_0^x ds / sqrt((1 - a sin kp s)(1 - a sin k s)) by composite Simpson.
inline double W_of_x(double a, double k, double kp, double x) {
  detail::require_unit_disk(a, "a");
  if (x == 0.0) return 0.0;
  const double rate = std::max({1.0, std::abs(k), std::abs(kp)});
  auto intervals = static_cast<std::size_t>(std::ceil(std::abs(x) * rate * 200.0));
  intervals = std::max<std::size_t>(64, intervals + intervals % 2);
  const double h = x / static_cast<double>(intervals);
  double acc = 0.0;
  for (std::size_t i = 0; i <= intervals; ++i) {
    acc += simpson_weight(i, intervals + 1) * detail::w_integrand(a, k, kp, h * static_cast<double>(i));
  }
  return acc * h / 3.0;
}

struct OrthonormalityReport {
  cplx overlap;                  // <psi_kp, psi_k> over [-X, X]
  double diagonal;               // <psi_k, psi_k> over [-X, X]
  double phase_identity_defect;  // max |Phi(x) - (k - kp) W(x)|
};

inline OrthonormalityReport orthonormality_report(double a, double k, double kp, double X,
                                                  std::size_t n = 8001) {
  detail::require_unit_disk(a, "a");
  if (!(X > 0.0)) throw std::invalid_argument("orthonormality: window half-width must be positive");
  const Grid g(-X, X, n);
  const auto psi_k = sample([&](double x) { return psi_case_a(a, k, x); }, g);
  const auto psi_kp = sample([&](double x) { return psi_case_a(a, kp, x); }, g);

  const auto integrand = sample([&](double x) { return detail::w_integrand(a, k, kp, x); }, g);
  const auto running = cumulative_integral(integrand);
  const std::size_t origin = g.nearest_index(0.0);
  const double offset = W_of_x(a, k, kp, g[origin]) - running[origin].real();

  double defect = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double W = running[i].real() + offset;
    defect = std::max(defect, std::abs(Phi_of_x(a, k, kp, g[i]) - (k - kp) * W));
  }
  return {inner_product(psi_kp, psi_k), inner_product(psi_k, psi_k).real(), defect};
}

}  // namespace genmom
