#include <catch_amalgamated.hpp>

#include <cmath>

#include "genmom/squarewell.hpp"

using namespace genmom;

namespace {

const Grid unit(0, 1, 8001);

}  // namespace

TEST_CASE("well configuration") {
  CHECK_THROWS_WITH(WellConfig(1, 1, 2.0, 5), "a out of domain |a| < 1");
  CHECK_THROWS_AS(WellConfig(0, 1, 0.2, 5), std::invalid_argument);
  CHECK_THROWS_AS(WellConfig(1, -1, 0.2, 5), std::invalid_argument);
  CHECK_THROWS_AS(WellConfig(1, 1, 0.2, 0), std::invalid_argument);
  CHECK_THROWS_AS(psi_n(WellConfig(1, 1, 0.2, 3), 4, unit), std::invalid_argument);
}

TEST_CASE("theta phases") {
  for (double x : {0.1, 0.5, 0.99}) {
    const auto t = theta_phases(0, 3 * pi, x);
    CHECK(t.theta1 == Catch::Approx(3 * pi * x).epsilon(1e-14));
    CHECK(t.theta2 == Catch::Approx(3 * pi * x).epsilon(1e-14));
  }
  const double a = 0.6, s = std::sqrt(1 - a * a);
  const auto t0 = theta_phases(a, 2 * pi, 0);
  CHECK(t0.theta1 == Catch::Approx(std::atan(-a / s) / s).epsilon(1e-14));
  CHECK(t0.theta2 == Catch::Approx(-t0.theta1).epsilon(1e-14));
}

TEST_CASE("boundary phase sum on the continuous branch") {
  // theta1 + theta2 at k0 L = n pi is n pi (1 + 1/s): a multiple of pi only when a = 0
  for (double a : {0.0, 0.3, 0.5, 0.9}) {
    const double s = std::sqrt(1 - a * a);
    for (int n = 1; n <= 5; ++n) {
      const auto t = theta_phases(a, n * pi, 1.0);
      CHECK(t.theta1 + t.theta2 == Catch::Approx(n * pi * (1 + 1 / s)).epsilon(1e-12));
      CHECK(boundary_residual(a, 1.0, n * pi) ==
            Catch::Approx(2 * std::abs(std::sin(0.5 * n * pi * (1 + 1 / s)))).margin(1e-12));
    }
  }
}

TEST_CASE("spectrum") {
  const auto levels = spectrum(WellConfig(1, 1, 0.3, 5));
  REQUIRE(levels.size() == 5);
  for (const auto& l : levels) CHECK(l.k0 == Catch::Approx(l.n * pi).epsilon(1e-15));
  CHECK(spectrum(WellConfig(2, 1, 0.3, 1))[0].E == Catch::Approx(pi * pi / 8).epsilon(1e-15));
  for (const auto& l : spectrum(WellConfig(1, 1, 0.0, 5))) CHECK(l.confirmed);
  for (const auto& l : spectrum(WellConfig(1, 1, 0.5, 5))) CHECK_FALSE(l.confirmed);
}

TEST_CASE("boundary residual scan") {
  const auto roots = scan_boundary_roots(0.0, 1.0, 5.5 * pi, 2000);
  REQUIRE(roots.size() == 5);
  for (int n = 1; n <= 5; ++n) CHECK(std::abs(roots[n - 1] - n * pi) < 1e-8);
  for (int n = 1; n <= 5; ++n) CHECK(boundary_residual(0.5, 1.0, (n + 0.5) * pi) >= 0.01);
  for (double r : scan_boundary_roots(0.5, 1.0, 5.5 * pi, 2000)) {
    CHECK(std::abs(r / pi - std::round(r / pi)) > 1e-6);
  }
}

TEST_CASE("wall values") {
  for (double a : {0.0, 0.5}) {
    const WellConfig cfg(1, 1, a, 5);
    for (int n = 1; n <= 5; ++n) {
      const auto sol = solve_level(cfg, n, unit);
      CHECK(std::abs(sol.psi_at_0) < 1e-12);
      CHECK(std::abs(sol.psi[0]) < 1e-12);
      // |psi(L)| = |P| * boundary residual
      CHECK(std::abs(sol.psi_at_L) == Catch::Approx(boundary_residual(a, 1, n * pi) / std::sqrt(2.0)).margin(1e-14));
    }
  }
}

TEST_CASE("small deformation recovers the sine states") {
  const WellConfig cfg(1, 1, 1e-6, 5);
  for (int n = 1; n <= 5; ++n) {
    const auto psi = psi_n(cfg, n, unit);
    double m = 0;
    for (std::size_t i = 0; i < unit.size(); ++i) {
      m = std::max(m, std::abs(psi[i] - std::sqrt(2.0) * std::sin(n * pi * unit[i])));
    }
    CHECK(m < 1e-5);
  }
  const Grid two(0, 2, 2001);
  const auto psi = psi_n(WellConfig(2, 1, 0, 3), 2, two);
  CHECK(std::abs(psi[500] - std::sin(pi * 0.5)) < 1e-12);
}

TEST_CASE("squared momentum eigen-check") {
  for (double a : {0.0, 0.3, 0.5, 0.9}) {
    const WellConfig cfg(1, 1, a, 5);
    for (int n = 1; n <= 5; ++n) CHECK(hamiltonian_residual(cfg, n, unit) < 1e-5);
  }
  // one operator for both branches only works undeformed
  CHECK(hamiltonian_residual_fixed_k(WellConfig(1, 1, 0.0, 2), 2, unit) < 1e-5);
  CHECK(hamiltonian_residual_fixed_k(WellConfig(1, 1, 0.5, 2), 2, unit) > 1.0);
}

TEST_CASE("norms") {
  for (int n = 1; n <= 5; ++n) CHECK(norm_report(psi_n(WellConfig(1, 1, 0, 5), n, unit)) == Catch::Approx(1).margin(1e-10));
  const WellConfig half(1, 1, 0.5, 1);
  const double n1 = norm_report(psi_n(half, 1, unit));
  CHECK(n1 > 1.0);
  CHECK(n1 < 1.2);
  const auto doubled = psi_n(half, 1, unit, 2.0 * well_prefactor(half));
  CHECK(norm_report(doubled) == Catch::Approx(4 * n1).epsilon(1e-14));
}
