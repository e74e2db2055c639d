#pragma once

// Direct-quadrature Fourier pair between independently chosen x- and k-windows,
// plus the transforms of probability densities used by the commutator analysis.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "genmom/grid.hpp"
#include "genmom/parallel.hpp"

namespace genmom {

struct Transform {
  GridFunction values;
  /// Set when the source does not decay below edge_tolerance at its window edges.
  bool edge_warning = false;
  double edge_magnitude = 0.0;
};

inline constexpr double edge_tolerance = 1e-12;
inline constexpr double normalization_tolerance = 1e-8;

namespace detail {

// (1/sqrt(2pi)) * sum_i w_i f_i exp(i * sign * s_i * t). The phase factor is
// advanced by recurrence and reseeded from std::polar every 32 samples.
inline cplx weighted_exp_sum(std::span<const cplx> f, std::span<const double> w, const Grid& src,
                             double t, double sign) {
  constexpr std::size_t reseed = 32;
  const double h = src.spacing();
  const cplx step = std::polar(1.0, sign * h * t);
  cplx acc{};
  cplx phase;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i % reseed == 0) {
      phase = std::polar(1.0, sign * src[i] * t);
    } else {
      phase *= step;
    }
    acc += w[i] * f[i] * phase;
  }
  return acc / sqrt_2pi;
}

inline double edge_magnitude(const GridFunction& f) {
  return std::max(std::abs(f[0]), std::abs(f[f.size() - 1]));
}

inline Transform transform(const GridFunction& src, const Grid& target, double sign) {
  const auto w = simpson_weights(src.grid());
  GridFunction out(target);
  parallel_for(target.size(), [&](std::size_t j) {
    out[j] = weighted_exp_sum(src.values(), w, src.grid(), target[j], sign);
  });
  const double edge = edge_magnitude(src);
  return Transform{std::move(out), edge >= edge_tolerance, edge};
}

inline GridFunction modulus_squared(const GridFunction& f) {
  return map_points(f, [](double, cplx v) { return cplx(std::norm(v), 0.0); });
}

inline void require_normalized(const GridFunction& f, const char* what) {
  const double n2 = integrate(modulus_squared(f)).real();
  if (std::abs(n2 - 1.0) > normalization_tolerance) {
    throw std::invalid_argument(std::string(what) + ": state is not normalized (norm^2 = " +
                                std::to_string(n2) + ")");
  }
}

}  // namespace detail

/// alpha(x) = (1/sqrt(2pi)) Int beta(k) e^{ikx} dk, evaluated on x_grid.
inline Transform forward_ft(const GridFunction& beta, const Grid& x_grid) {
  return detail::transform(beta, x_grid, +1.0);
}

/// beta(k) = (1/sqrt(2pi)) Int alpha(x) e^{-ikx} dx, evaluated on k_grid.
inline Transform inverse_ft(const GridFunction& alpha, const Grid& k_grid) {
  return detail::transform(alpha, k_grid, -1.0);
}

/// max_k |k beta(k) - FT^{-1}[-i alpha'](k)|; vanishes when boundary terms do.
inline double verify_momentum_correspondence(const GridFunction& alpha, const Grid& k_grid) {
  const auto beta = inverse_ft(alpha, k_grid).values;
  GridFunction minus_i_da = derivative(alpha);
  minus_i_da *= cplx(0.0, -1.0);
  const auto rhs = inverse_ft(minus_i_da, k_grid).values;
  double defect = 0.0;
  for (std::size_t j = 0; j < k_grid.size(); ++j) {
    defect = std::max(defect, std::abs(k_grid[j] * beta[j] - rhs[j]));
  }
  return defect;
}

/// eta at a single x. phi lives on a k-grid and must be normalized.
inline cplx eta_at(const GridFunction& phi, double x) {
  const auto dens = detail::modulus_squared(phi);
  const auto w = simpson_weights(phi.grid());
  return detail::weighted_exp_sum(dens.values(), w, phi.grid(), x, +1.0);
}

/// sigma at a single k. psi lives on an x-grid and must be normalized.
inline cplx sigma_at(const GridFunction& psi, double k) {
  const auto dens = detail::modulus_squared(psi);
  const auto w = simpson_weights(psi.grid());
  return detail::weighted_exp_sum(dens.values(), w, psi.grid(), k, -1.0);
}

/// Forward transform of |phi(k)|^2.
inline GridFunction eta(const GridFunction& phi, const Grid& x_grid) {
  detail::require_normalized(phi, "eta");
  return forward_ft(detail::modulus_squared(phi), x_grid).values;
}

/// Inverse transform of |psi(x)|^2.
inline GridFunction sigma(const GridFunction& psi, const Grid& k_grid) {
  detail::require_normalized(psi, "sigma");
  return inverse_ft(detail::modulus_squared(psi), k_grid).values;
}

}  // namespace genmom
