#pragma once

// Uniform 1-D grids, Simpson quadrature and 4th-order finite differences.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace genmom {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline const double sqrt_2pi = std::sqrt(2.0 * pi);

class Grid {
 public:
  Grid(double x_min, double x_max, std::size_t n)
      : x_min_(x_min), x_max_(x_max), n_(n) {
    if (!(x_max > x_min)) {
      throw std::invalid_argument("grid: x_max must exceed x_min");
    }
    if (n < 9 || n % 2 == 0) {
      throw std::invalid_argument("grid: sample count must be odd and >= 9, got " +
                                  std::to_string(n));
    }
    spacing_ = (x_max - x_min) / static_cast<double>(n - 1);
  }

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  std::size_t size() const { return n_; }
  double spacing() const { return spacing_; }
  double operator[](std::size_t i) const { return x_min_ + static_cast<double>(i) * spacing_; }

  bool contains(double x) const { return x >= x_min_ && x <= x_max_; }

  /// Index of the sample closest to x (clamped to the window).
  std::size_t nearest_index(double x) const {
    const double r = std::round((x - x_min_) / spacing_);
    if (r <= 0.0) return 0;
    if (r >= static_cast<double>(n_ - 1)) return n_ - 1;
    return static_cast<std::size_t>(r);
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  double x_min_;
  double x_max_;
  std::size_t n_;
  double spacing_ = 0.0;
};

inline Grid make_grid(double x_min, double x_max, std::size_t n) { return Grid(x_min, x_max, n); }

class GridFunction {
 public:
  explicit GridFunction(Grid grid) : grid_(grid), values_(grid.size(), cplx{}) {}

  GridFunction(Grid grid, std::vector<cplx> values) : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size()) {
      throw std::invalid_argument("grid function: value count does not match grid");
    }
  }

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  std::span<const cplx> values() const { return values_; }
  std::span<cplx> values() { return values_; }
  const cplx& operator[](std::size_t i) const { return values_[i]; }
  cplx& operator[](std::size_t i) { return values_[i]; }

  bool all_finite() const {
    for (const auto& v : values_) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
    return true;
  }

  GridFunction& operator+=(const GridFunction& o) {
    require_same_grid(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  GridFunction& operator-=(const GridFunction& o) {
    require_same_grid(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
  }
  GridFunction& operator*=(cplx s) {
    for (auto& v : values_) v *= s;
    return *this;
  }

  friend GridFunction operator+(GridFunction l, const GridFunction& r) { return l += r; }
  friend GridFunction operator-(GridFunction l, const GridFunction& r) { return l -= r; }
  friend GridFunction operator*(cplx s, GridFunction f) { return f *= s; }
  friend GridFunction operator*(GridFunction f, cplx s) { return f *= s; }

  void require_same_grid(const GridFunction& o) const {
    if (!(grid_ == o.grid_)) throw std::invalid_argument("grid mismatch");
  }

 private:
  Grid grid_;
  std::vector<cplx> values_;
};

/// Samples f at every grid point; rejects non-finite samples.
template <class F>
GridFunction sample(F&& f, const Grid& g) {
  GridFunction out(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const cplx v = static_cast<cplx>(f(g[i]));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::domain_error("sample: non-finite value at x = " + std::to_string(g[i]));
    }
    out[i] = v;
  }
  return out;
}

/// Pointwise map over (x, value) pairs.
template <class F>
GridFunction map_points(const GridFunction& in, F&& f) {
  GridFunction out(in.grid());
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = f(in.grid()[i], in[i]);
  return out;
}

/// Composite Simpson weight of sample i (without the h/3 factor).
inline double simpson_weight(std::size_t i, std::size_t n) {
  if (i == 0 || i + 1 == n) return 1.0;
  return (i % 2 == 1) ? 4.0 : 2.0;
}

inline std::vector<double> simpson_weights(const Grid& g) {
  std::vector<double> w(g.size());
  const double h3 = g.spacing() / 3.0;
  for (std::size_t i = 0; i < g.size(); ++i) w[i] = h3 * simpson_weight(i, g.size());
  return w;
}

inline cplx integrate(const GridFunction& gf) {
  const std::size_t n = gf.size();
  cplx acc{};
  for (std::size_t i = 0; i < n; ++i) acc += simpson_weight(i, n) * gf[i];
  return acc * (gf.grid().spacing() / 3.0);
}

/// Running integral from x_min; 4th-order four-point rule per interval.
inline GridFunction cumulative_integral(const GridFunction& gf) {
  const std::size_t n = gf.size();
  const double h24 = gf.grid().spacing() / 24.0;
  GridFunction out(gf.grid());
  const auto& f = gf;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    cplx piece;
    if (i == 0) {
      piece = 9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3];
    } else if (i + 2 == n) {
      piece = f[n - 4] - 5.0 * f[n - 3] + 19.0 * f[n - 2] + 9.0 * f[n - 1];
    } else {
      piece = -f[i - 1] + 13.0 * f[i] + 13.0 * f[i + 1] - f[i + 2];
    }
    out[i + 1] = out[i] + h24 * piece;
  }
  return out;
}

/// d/dx with 4th-order central differences and one-sided 4th-order stencils
/// on the two outermost samples of each side.
inline GridFunction derivative(const GridFunction& gf) {
  const std::size_t n = gf.size();
  const double inv12h = 1.0 / (12.0 * gf.grid().spacing());
  const auto& f = gf;
  GridFunction d(gf.grid());
  d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) * inv12h;
  d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) * inv12h;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) * inv12h;
  }
  d[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]) * inv12h;
  d[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] + 3.0 * f[n - 5]) *
             inv12h;
  return d;
}

inline cplx inner_product(const GridFunction& f, const GridFunction& g) {
  f.require_same_grid(g);
  const std::size_t n = f.size();
  cplx acc{};
  for (std::size_t i = 0; i < n; ++i) acc += simpson_weight(i, n) * std::conj(f[i]) * g[i];
  return acc * (f.grid().spacing() / 3.0);
}

/// L2 norm by quadrature.
inline double norm(const GridFunction& f) { return std::sqrt(std::max(0.0, inner_product(f, f).real())); }

inline double max_abs(const GridFunction& f) {
  double m = 0.0;
  for (const auto& v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

inline double max_abs_diff(const GridFunction& f, const GridFunction& g) {
  f.require_same_grid(g);
  double m = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f[i] - g[i]));
  return m;
}

/// Discrete l2 norm over samples [skip, n - skip).
inline double interior_l2(const GridFunction& f, std::size_t skip) {
  double s = 0.0;
  for (std::size_t i = skip; i + skip < f.size(); ++i) s += std::norm(f[i]);
  return std::sqrt(s);
}

/// Adaptive Simpson on [lo, hi] for a complex integrand.
template <class F>
cplx adaptive_simpson(F&& f, double lo, double hi, double tol = 1e-13, int max_depth = 40) {
  struct Rec {
    static cplx run(F& f, double a, double b, cplx fa, cplx fm, cplx fb, cplx whole, double tol,
                    int depth) {
      const double m = 0.5 * (a + b);
      const double lm = 0.5 * (a + m);
      const double rm = 0.5 * (m + b);
      const cplx flm = f(lm);
      const cplx frm = f(rm);
      const cplx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
      const cplx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
      const cplx delta = left + right - whole;
      if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
      return run(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
             run(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
    }
  };
  if (lo == hi) return cplx{};
  const cplx fa = f(lo);
  const cplx fb = f(hi);
  const cplx fm = f(0.5 * (lo + hi));
  const cplx whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
  return Rec::run(f, lo, hi, fa, fm, fb, whole, tol, max_depth);
}

/// Adaptive Simpson over [lo, hi] split into panels no wider than max_panel.
template <class F>
cplx adaptive_simpson_panels(F&& f, double lo, double hi, double max_panel, double tol = 1e-13) {
  const double len = hi - lo;
  const auto panels = static_cast<std::size_t>(std::max(1.0, std::ceil(std::abs(len) / max_panel)));
  cplx acc{};
  for (std::size_t p = 0; p < panels; ++p) {
    const double a = lo + len * static_cast<double>(p) / static_cast<double>(panels);
    const double b = lo + len * static_cast<double>(p + 1) / static_cast<double>(panels);
    acc += adaptive_simpson(f, a, b, tol / static_cast<double>(panels));
  }
  return acc;
}

}  // namespace genmom
