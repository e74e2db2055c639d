#pragma once

// Reconstruction of the generalized transform kernels from their integral
// representations, G = exp[-Int (k + f')/f dx] and Gt = exp[-Int (x + h')/h dk].

#include <cmath>
#include <optional>
#include <stdexcept>

#include "genmom/grid.hpp"

namespace genmom {

inline constexpr double pole_guard = 1e-12;

/// Constant C (nonzero) and wavenumber k of f(x) = C e^{ikx} - i.
class KernelParamsP {
 public:
  KernelParamsP(cplx C, double k) : C_(C), k_(k) {
    if (C == cplx{}) throw std::invalid_argument("kernel: C must be nonzero");
  }
  cplx C() const { return C_; }
  double k() const { return k_; }

 private:
  cplx C_;
  double k_;
};

/// Constant D (nonzero) and position x of h(k) = D e^{-ikx} + i.
class KernelParamsX {
 public:
  KernelParamsX(cplx D, double x) : D_(D), x_(x) {
    if (D == cplx{}) throw std::invalid_argument("kernel: D must be nonzero");
  }
  cplx D() const { return D_; }
  double x() const { return x_; }

 private:
  cplx D_;
  double x_;
};

inline cplx f_of_x(const KernelParamsP& p, double x) {
  return p.C() * std::polar(1.0, p.k() * x) - cplx(0.0, 1.0);
}

inline cplx h_of_k(const KernelParamsX& p, double k) {
  return p.D() * std::polar(1.0, -k * p.x()) + cplx(0.0, 1.0);
}

/// Integration constant: the reconstructed kernel takes `value` at the sample nearest `at`.
struct KernelAnchor {
  double at;
  cplx value;
};

namespace detail {

// exp(-cumint((shift + u')/u)) on g, pinned at the anchor sample.
inline GridFunction reconstruct_exponential(const GridFunction& u, double shift, std::size_t anchor_index,
                                            cplx anchor_value) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (std::abs(u[i]) <= pole_guard) {
      throw std::domain_error("kernel: coefficient function vanishes at sample " + std::to_string(i) +
                              " (pole in the integrand)");
    }
  }
  const GridFunction du = derivative(u);
  GridFunction integrand(u.grid());
  for (std::size_t i = 0; i < u.size(); ++i) integrand[i] = (shift + du[i]) / u[i];
  const GridFunction acc = cumulative_integral(integrand);
  const cplx ref = acc[anchor_index];
  GridFunction out(u.grid());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = anchor_value * std::exp(-(acc[i] - ref));
  return out;
}

}  // namespace detail

/// Default anchor for G: the sample nearest 0 if the window contains it, else x_min,
/// pinned to the plane-wave value e^{-ikx} there.
inline KernelAnchor default_anchor_G(double k, const Grid& g) {
  const double at = g.contains(0.0) ? g[g.nearest_index(0.0)] : g.x_min();
  return {at, std::polar(1.0, -k * at)};
}

inline KernelAnchor default_anchor_Gtilde(double x, const Grid& g) {
  const double at = g.contains(0.0) ? g[g.nearest_index(0.0)] : g.x_min();
  return {at, std::polar(1.0, at * x)};
}

/// Reconstructs G(k, .) on g from f; f' is taken numerically from the samples.
template <class F>
GridFunction reconstruct_G(F&& f, double k, const Grid& g, std::optional<KernelAnchor> anchor = {}) {
  const KernelAnchor a = anchor.value_or(default_anchor_G(k, g));
  return detail::reconstruct_exponential(sample(f, g), k, g.nearest_index(a.at), a.value);
}

/// Reconstructs Gt(., x) on a k-axis grid from h.
template <class H>
GridFunction reconstruct_Gtilde(H&& h, double x, const Grid& k_grid,
                                std::optional<KernelAnchor> anchor = {}) {
  const KernelAnchor a = anchor.value_or(default_anchor_Gtilde(x, k_grid));
  return detail::reconstruct_exponential(sample(h, k_grid), x, k_grid.nearest_index(a.at), a.value);
}

/// max over interior samples of |f' G + f G' + k G| with G = e^{-ikx}.
template <class F>
double ode_residual_G(F&& f, double k, const Grid& g) {
  const GridFunction fs = sample(f, g);
  const GridFunction G = sample([k](double x) { return std::polar(1.0, -k * x); }, g);
  const GridFunction df = derivative(fs);
  const GridFunction dG = derivative(G);
  double r = 0.0;
  for (std::size_t i = 2; i + 2 < g.size(); ++i) {
    r = std::max(r, std::abs(df[i] * G[i] + fs[i] * dG[i] + k * G[i]));
  }
  return r;
}

/// Dual of ode_residual_G on the k axis: |h' Gt + h Gt' + x Gt| with Gt = e^{ikx}.
template <class H>
double ode_residual_Gtilde(H&& h, double x, const Grid& k_grid) {
  const GridFunction hs = sample(h, k_grid);
  const GridFunction G = sample([x](double k) { return std::polar(1.0, k * x); }, k_grid);
  const GridFunction dh = derivative(hs);
  const GridFunction dG = derivative(G);
  double r = 0.0;
  for (std::size_t i = 2; i + 2 < k_grid.size(); ++i) {
    r = std::max(r, std::abs(dh[i] * G[i] + hs[i] * dG[i] + x * G[i]));
  }
  return r;
}

/// Max pointwise distance of G from e^{-ikx}.
inline double plane_wave_defect_G(const GridFunction& G, double k) {
  double m = 0.0;
  for (std::size_t i = 0; i < G.size(); ++i) {
    m = std::max(m, std::abs(G[i] - std::polar(1.0, -k * G.grid()[i])));
  }
  return m;
}

/// Max pointwise distance of Gt from e^{ikx}.
inline double plane_wave_defect_Gtilde(const GridFunction& Gt, double x) {
  double m = 0.0;
  for (std::size_t i = 0; i < Gt.size(); ++i) {
    m = std::max(m, std::abs(Gt[i] - std::polar(1.0, Gt.grid()[i] * x)));
  }
  return m;
}

}  // namespace genmom
