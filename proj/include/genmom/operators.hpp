#pragma once

// Generalized momentum operators on x-grids and position operators on k-grids (hbar = 1).
//
//   p      = (C e^{ikx} - i) d/dx
//   p^+    = -(C* e^{-ikx} + i) d/dx + i k C* e^{-ikx}
//   p_H    = i[(a sin kx + b cos kx - 1) d/dx + (k/2)(a - ib) e^{-ikx}],   C = a + ib
//   x      = (D e^{-ikx} + i) d/dk
//   x^+    = (-D* e^{ikx} + i) d/dk - i x D* e^{ikx}
//   x_H    = i(1 - c sin kx + d cos kx) d/dk - (ix/2)(c - id) e^{ikx},     D = c + id

#include <cmath>
#include <stdexcept>
#include <variant>

#include "genmom/grid.hpp"
#include "genmom/kernels.hpp"

namespace genmom {

/// Deformation (a, b) of the momentum operator and its internal wavenumber k.
/// (a, b) must lie in the open unit disk; (0, 0) is the standard operator.
class DeformParamsP {
 public:
  DeformParamsP(double a, double b, double k) : a_(a), b_(b), k_(k) {
    if (!(a * a + b * b < 1.0)) {
      throw std::invalid_argument("momentum deformation out of domain a^2 + b^2 < 1");
    }
  }
  double a() const { return a_; }
  double b() const { return b_; }
  double k() const { return k_; }
  cplx C() const { return {a_, b_}; }
  bool is_standard() const { return a_ == 0.0 && b_ == 0.0; }

 private:
  double a_, b_, k_;
};

/// Deformation (c, d) of the position operator and its internal position x.
class DeformParamsX {
 public:
  DeformParamsX(double c, double d, double x) : c_(c), d_(d), x_(x) {
    if (!(c * c + d * d < 1.0)) {
      throw std::invalid_argument("position deformation out of domain c^2 + d^2 < 1");
    }
  }
  double c() const { return c_; }
  double d() const { return d_; }
  double x() const { return x_; }
  cplx D() const { return {c_, d_}; }
  bool is_standard() const { return c_ == 0.0 && d_ == 0.0; }

 private:
  double c_, d_, x_;
};

namespace detail {

// out_i = coeff(s_i) * psi'_i + mult(s_i) * psi_i
template <class Coeff, class Mult>
GridFunction first_order_action(const GridFunction& psi, Coeff&& coeff, Mult&& mult) {
  const GridFunction d = derivative(psi);
  GridFunction out(psi.grid());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const double s = psi.grid()[i];
    out[i] = coeff(s) * d[i] + mult(s) * psi[i];
  }
  return out;
}

inline constexpr cplx I{0.0, 1.0};

}  // namespace detail

/// Standard momentum operator -i d/dx.
inline GridFunction apply_p0(const GridFunction& psi) { return derivative(psi) * cplx(0.0, -1.0); }

/// Standard position operator in momentum space, i d/dk.
inline GridFunction apply_x0(const GridFunction& phi) { return derivative(phi) * cplx(0.0, 1.0); }

inline GridFunction apply_p(const GridFunction& psi, const KernelParamsP& p) {
  return detail::first_order_action(
      psi, [&](double x) { return f_of_x(p, x); }, [](double) { return cplx{}; });
}

inline GridFunction apply_p_dagger(const GridFunction& psi, const KernelParamsP& p) {
  const cplx Cc = std::conj(p.C());
  const double k = p.k();
  return detail::first_order_action(
      psi, [&](double x) { return -(Cc * std::polar(1.0, -k * x) + detail::I); },
      [&](double x) { return detail::I * k * Cc * std::polar(1.0, -k * x); });
}

inline GridFunction apply_pH(const GridFunction& psi, const DeformParamsP& dp) {
  const double a = dp.a(), b = dp.b(), k = dp.k();
  const cplx Cc{a, -b};
  return detail::first_order_action(
      psi, [&](double x) { return detail::I * (a * std::sin(k * x) + b * std::cos(k * x) - 1.0); },
      [&](double x) { return detail::I * (0.5 * k) * Cc * std::polar(1.0, -k * x); });
}

inline GridFunction apply_x_momentum(const GridFunction& phi, const KernelParamsX& p) {
  return detail::first_order_action(
      phi, [&](double k) { return h_of_k(p, k); }, [](double) { return cplx{}; });
}

inline GridFunction apply_x_dagger(const GridFunction& phi, const KernelParamsX& p) {
  const cplx Dc = std::conj(p.D());
  const double x = p.x();
  return detail::first_order_action(
      phi, [&](double k) { return -Dc * std::polar(1.0, k * x) + detail::I; },
      [&](double k) { return -detail::I * x * Dc * std::polar(1.0, k * x); });
}

inline GridFunction apply_xH(const GridFunction& phi, const DeformParamsX& dx) {
  const double c = dx.c(), d = dx.d(), x = dx.x();
  const cplx Dc{c, -d};
  return detail::first_order_action(
      phi, [&](double k) { return detail::I * (1.0 - c * std::sin(k * x) + d * std::cos(k * x)); },
      [&](double k) { return -detail::I * (0.5 * x) * Dc * std::polar(1.0, k * x); });
}

struct MomentumOp { KernelParamsP params; };
struct MomentumAdjointOp { KernelParamsP params; };
struct HermitianMomentumOp { DeformParamsP params; };
struct PositionOp { KernelParamsX params; };
struct PositionAdjointOp { KernelParamsX params; };
struct HermitianPositionOp { DeformParamsX params; };

using Operator = std::variant<MomentumOp, MomentumAdjointOp, HermitianMomentumOp, PositionOp,
                              PositionAdjointOp, HermitianPositionOp>;

inline GridFunction apply(const Operator& op, const GridFunction& f) {
  struct Visitor {
    const GridFunction& f;
    GridFunction operator()(const MomentumOp& o) const { return apply_p(f, o.params); }
    GridFunction operator()(const MomentumAdjointOp& o) const { return apply_p_dagger(f, o.params); }
    GridFunction operator()(const HermitianMomentumOp& o) const { return apply_pH(f, o.params); }
    GridFunction operator()(const PositionOp& o) const { return apply_x_momentum(f, o.params); }
    GridFunction operator()(const PositionAdjointOp& o) const { return apply_x_dagger(f, o.params); }
    GridFunction operator()(const HermitianPositionOp& o) const { return apply_xH(f, o.params); }
  };
  return std::visit(Visitor{f}, op);
}

struct HermiticityDefect {
  double defect;
  /// The states do not vanish at the window edges, so boundary terms survive.
  bool edge_flag;
};

/// |<phi, A psi> - <A phi, psi>| by quadrature.
inline HermiticityDefect hermiticity_defect(const Operator& op, const GridFunction& phi,
                                            const GridFunction& psi) {
  phi.require_same_grid(psi);
  constexpr double edge = 1e-12;
  const std::size_t n = phi.size();
  const bool flag = std::abs(phi[0]) >= edge || std::abs(phi[n - 1]) >= edge ||
                    std::abs(psi[0]) >= edge || std::abs(psi[n - 1]) >= edge;
  const cplx lhs = inner_product(phi, apply(op, psi));
  const cplx rhs = inner_product(apply(op, phi), psi);
  return {std::abs(lhs - rhs), flag};
}

}  // namespace genmom
