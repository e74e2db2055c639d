#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "genmom/commutator.hpp"

using namespace genmom;

namespace {

cplx gauss(double x) { return std::pow(pi, -0.25) * std::exp(-0.5 * x * x); }

const Grid xg(-12, 12, 1201);
const Grid kg(-20, 20, 1201);
const cplx I{0, 1};
const double e4 = std::exp(-0.25);

CommutatorScenario gaussian(double a, double b, double k, double c, double d, double x) {
  return {DeformParamsP(a, b, k), DeformParamsX(c, d, x), sample(gauss, xg), kg};
}

}  // namespace

TEST_CASE("commutator actions") {
  const auto psi = sample(gauss, xg);
  CHECK(max_abs_diff(commutator_action_x(psi, DeformParamsP(0, 0, 1)), I * psi) == 0);
  CHECK(max_abs_diff(commutator_action_k(psi, DeformParamsX(0, 0, 1)), I * psi) == 0);
  CHECK(max_abs(commutator_action_x(GridFunction(xg), DeformParamsP(0.3, 0.2, 1))) == 0);
  CHECK(max_abs(commutator_action_k(GridFunction(kg), DeformParamsX(0.3, 0.2, 1))) == 0);
}

TEST_CASE("position-space action equals the operator composition") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> U(-0.6, 0.6);
  const Grid g(-8, 8, 3201);
  const auto psi = sample([](double x) { return gauss(x - 0.5) * std::polar(1.0, 0.8 * x); }, g);
  const auto xpsi = map_points(psi, [](double x, cplx v) { return x * v; });
  for (int t = 0; t < 10; ++t) {
    const DeformParamsP dp(U(rng), U(rng), 4 * U(rng));
    const auto lhs = map_points(apply_pH(psi, dp), [](double x, cplx v) { return x * v; }) - apply_pH(xpsi, dp);
    const auto rhs = commutator_action_x(psi, dp);
    double m = 0;
    for (std::size_t i = 2; i + 2 < g.size(); ++i) m = std::max(m, std::abs(lhs[i] - rhs[i]));
    CHECK(m < 1e-8);
  }
}

TEST_CASE("momentum-space action equals the operator composition") {
  const Grid g(-8, 8, 3201);
  const auto phi = sample([](double k) { return gauss(k + 0.3) * std::polar(1.0, -0.4 * k); }, g);
  const auto kphi = map_points(phi, [](double k, cplx v) { return k * v; });
  for (double d : {-0.4, 0.4}) {
    const DeformParamsX dx(0.2, d, 1.1);
    // [x_H, p] with p acting as multiplication by k
    const auto lhs = apply_xH(kphi, dx) - map_points(apply_xH(phi, dx), [](double k, cplx v) { return k * v; });
    const auto rhs = commutator_action_k(phi, dx);
    double m = 0;
    for (std::size_t i = 2; i + 2 < g.size(); ++i) m = std::max(m, std::abs(lhs[i] - rhs[i]));
    CHECK(m < 1e-8);
  }
}

TEST_CASE("expectation values in the gaussian state") {
  const auto s0 = gaussian(0, 0, 1, 0, 0, 1);
  for (cplx v : {expectation_x_basis(s0), expectation_k_basis(s0), closed_form_x(s0), closed_form_k(s0)}) {
    CHECK(std::abs(v - I) < 1e-10);
  }
  const auto sa = gaussian(0.4, 0, 1, 0, 0, 1);
  CHECK(std::abs(expectation_x_basis(sa) - I) < 1e-10);
  CHECK(std::abs(closed_form_x(sa) - I) < 1e-10);

  const auto sb = gaussian(0, 0.4, 1, 0, 0.4, 1);
  CHECK(std::abs(expectation_x_basis(sb) - I * (1 - 0.4 * e4)) < 1e-10);
  CHECK(std::abs(closed_form_x(sb) - I * (1 - 0.4 * e4)) < 1e-10);
  CHECK(std::abs(expectation_k_basis(sb) - I * (1 + 0.4 * e4)) < 1e-10);
  CHECK(std::abs(closed_form_k(sb) - I * (1 + 0.4 * e4)) < 1e-10);
}

TEST_CASE("closed forms on random states") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> U(-1, 1);
  for (int t = 0; t < 15; ++t) {
    const double x0 = 2 * U(rng), s = 0.85 + 0.35 * U(rng), q = 2 * U(rng);
    const auto psi = sample(
        [=](double x) {
          return std::pow(2 * pi * s * s, -0.25) * std::exp(cplx(-(x - x0) * (x - x0) / (4 * s * s), q * x));
        },
        xg);
    const CommutatorScenario sc(DeformParamsP(0.6 * U(rng), 0.6 * U(rng), 2 * U(rng)),
                                DeformParamsX(0.6 * U(rng), 0.6 * U(rng), 2 * U(rng)), psi, kg);
    CHECK(std::abs(expectation_x_basis(sc) - closed_form_x(sc)) < 1e-8);
    CHECK(std::abs(expectation_k_basis(sc) - closed_form_k(sc)) < 1e-8);
  }
}

TEST_CASE("scenario consistency checks") {
  const auto psi = sample(gauss, xg);
  const auto phi = inverse_ft(psi, kg).values;
  CHECK_NOTHROW(CommutatorScenario(DeformParamsP(0, 0, 1), DeformParamsX(0, 0, 1), psi, phi));
  const auto shifted = sample([](double k) { return gauss(k - 0.5); }, kg);
  CHECK_THROWS_AS(CommutatorScenario(DeformParamsP(0, 0, 1), DeformParamsX(0, 0, 1), psi, shifted),
                  std::invalid_argument);
  CHECK_THROWS_AS(CommutatorScenario(DeformParamsP(0, 0, 1), DeformParamsX(0, 0, 1), 2.0 * psi, kg),
                  std::invalid_argument);
}

TEST_CASE("basis independence residual") {
  CHECK(basis_independence_residual(gaussian(0, 0, 1, 0, 0, 1)) == 0.0);
  CHECK(find_independence_roots(gaussian(0, 0, 1, 0, 0, 1), -3, 3, 20).identically_zero);

  // even gaussian: R = -b sigma(k) - d eta(x), sigma(1) = eta(1) = e^{-1/4}/sqrt(2 pi)
  CHECK(basis_independence_residual(gaussian(0, 0.4, 1, 0, 0.4, 1)) ==
        Catch::Approx(-0.8 * e4 / sqrt_2pi).epsilon(1e-10));
  CHECK(std::abs(basis_independence_residual(gaussian(0, 0.4, 1, 0, -0.4, 1))) < 1e-12);
  CHECK(basis_independence_residual(gaussian(0, 0.4, 1, 0, -0.4, 2)) ==
        Catch::Approx((-0.4 * e4 + 0.4 * std::exp(-1.0)) / sqrt_2pi).epsilon(1e-10));
}

TEST_CASE("root recovery") {
  const auto opposite = find_independence_roots(gaussian(0, 0.4, 1, 0, -0.4, 1), 0.25, 3, 40);
  REQUIRE(opposite.roots.size() == 1);
  CHECK(std::abs(opposite.roots[0] - 1.0) < 1e-8);
  // symmetric in x: the mirror root
  const auto both = find_independence_roots(gaussian(0, 0.4, 1, 0, -0.4, 1), -3, 3, 41);
  REQUIRE(both.roots.size() == 2);
  CHECK(std::abs(both.roots[0] + 1.0) < 1e-8);

  CHECK(find_independence_roots(gaussian(0, 0.4, 1, 0, 0.4, 1), -3, 3, 41).roots.empty());
  // |b sigma(k)| exceeds max |d eta|
  CHECK(find_independence_roots(gaussian(0, 0.8, 1, 0, -0.1, 1), -6, 6, 61).roots.empty());

  const auto in_k = find_independence_roots_in_k(gaussian(0, 0.4, 1, 0, -0.4, 1), 0.25, 3, 40);
  REQUIRE(in_k.roots.size() == 1);
  CHECK(std::abs(in_k.roots[0] - 1.0) < 1e-8);
}
