#pragma once

// Continuous branches of the arctangent antiderivatives that appear in the
// closed-form eigenfunction phases. The principal branch jumps by pi at every
// pole of tan(u); these versions add pi per tangent cell, which is the same as
// pi * floor(u/pi + 1/2), but they are evaluated through atan2 so the result is
// exact on the poles themselves. All of them equal u at u = pi/2 + m pi.

#include <cmath>

#include "genmom/grid.hpp"

namespace genmom::phase {

namespace detail {

// u + (angle - u) reduced to [-pi, pi]; valid because the continuous branch
// never strays more than pi/2 from u.
inline double follow(double u, double angle) { return u + std::remainder(angle - u, 2.0 * pi); }

}  // namespace detail

/// Continuous atan((tan u - a) / sqrt(1 - a^2)), |a| < 1.
inline double atan_tan_shift(double u, double a) {
  const double s = std::sqrt(1.0 - a * a);
  return detail::follow(u, std::atan2(std::sin(u) - a * std::cos(u), s * std::cos(u)));
}

/// Continuous atan(r tan u), r > 0.
inline double atan_tan_scale(double u, double r) {
  return detail::follow(u, std::atan2(r * std::sin(u), std::cos(u)));
}

/// Principal-branch value of atan((tan u - a)/sqrt(1 - a^2)) plus pi * floor(u/pi + 1/2).
/// Agrees with atan_tan_shift away from the tangent poles.
inline double atan_tan_shift_cellwise(double u, double a) {
  const double s = std::sqrt(1.0 - a * a);
  return std::atan((std::tan(u) - a) / s) + pi * std::floor(u / pi + 0.5);
}

/// Moves `principal` by whole multiples of `period` to the value nearest `reference`.
inline double nearest_branch(double principal, double reference, double period) {
  return principal + period * std::round((reference - principal) / period);
}

}  // namespace genmom::phase
