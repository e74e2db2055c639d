#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "genmom/grid.hpp"

using namespace genmom;
using Catch::Approx;

TEST_CASE("grid spacing") {
  CHECK(make_grid(-1, 1, 9).spacing() == 0.25);
  CHECK(make_grid(0, pi, 1001).spacing() == Approx(pi / 1000).epsilon(1e-15));
  CHECK(make_grid(-1, 1, 9)[8] == 1.0);
}

TEST_CASE("grid rejects bad windows and sizes") {
  CHECK_THROWS_AS(make_grid(0, 0, 9), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(1, 0, 9), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(0, 1, 7), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(0, 1, 10), std::invalid_argument);
}

TEST_CASE("nearest_index clamps") {
  const Grid g(0, 1, 11);
  CHECK(g.nearest_index(0.31) == 3);
  CHECK(g.nearest_index(-5) == 0);
  CHECK(g.nearest_index(5) == 10);
}

TEST_CASE("sampling") {
  const Grid g(0, 1, 11);
  const auto one = sample([](double) { return 1.0; }, g);
  for (const auto& v : one.values()) CHECK(v == cplx(1.0, 0.0));
  const auto lin = sample([](double x) { return x; }, g);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(lin[i].real() == Approx(0.1 * i).margin(1e-15));
  CHECK_THROWS_AS(sample([](double x) { return 1.0 / (x - 0.5); }, g), std::domain_error);
}

TEST_CASE("grid functions on different grids do not mix") {
  const GridFunction f(Grid(0, 1, 11)), h(Grid(0, 2, 11));
  CHECK_THROWS(f + h);
  CHECK_THROWS(inner_product(f, h));
}

TEST_CASE("simpson integration") {
  const Grid g(0, 1, 101);
  CHECK(std::abs(integrate(sample([](double) { return 1.0; }, g)) - 1.0) < 1e-14);
  CHECK(std::abs(integrate(sample([](double x) { return x * x; }, g)) - 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(integrate(sample([](double x) { return x * x * x; }, g)) - 0.25) < 1e-12);
  const Grid w(0, 2 * pi, 2001);
  CHECK(std::abs(integrate(sample([](double x) { return std::polar(1.0, x); }, w))) < 1e-10);
}

TEST_CASE("cumulative integral tracks the antiderivative") {
  const Grid g(0, 3, 601);
  const auto c = cumulative_integral(sample([](double x) { return std::cos(x); }, g));
  double worst = 0;
  for (std::size_t i = 0; i < g.size(); ++i) worst = std::max(worst, std::abs(c[i] - std::sin(g[i])));
  CHECK(worst < 1e-10);
  // cubic: exact up to rounding
  const auto q = cumulative_integral(sample([](double x) { return x * x * x - x; }, g));
  CHECK(std::abs(q[g.size() - 1] - (std::pow(3.0, 4) / 4 - 4.5)) < 1e-11);
}

TEST_CASE("derivative stencils") {
  const Grid g(-1, 1, 201);
  const auto d = derivative(sample([](double x) { return x * x; }, g));
  double worst = 0;
  for (std::size_t i = 0; i < g.size(); ++i) worst = std::max(worst, std::abs(d[i] - 2 * g[i]));
  CHECK(worst < 1e-10);

  const Grid p(-pi, pi, 4001);
  const double k = 3;
  const auto e = derivative(sample([k](double x) { return std::polar(1.0, k * x); }, p));
  worst = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    worst = std::max(worst, std::abs(e[i] - cplx(0, k) * std::polar(1.0, k * p[i])));
  }
  CHECK(worst < 1e-8);

  CHECK(max_abs(derivative(sample([](double) { return 4.2; }, g))) < 1e-12);
}

TEST_CASE("derivative converges at fourth order") {
  auto err = [](std::size_t n) {
    const Grid g(0, 2, n);
    const auto d = derivative(sample([](double x) { return std::exp(std::sin(2 * x)); }, g));
    double m = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = g[i];
      m = std::max(m, std::abs(d[i] - 2 * std::cos(2 * x) * std::exp(std::sin(2 * x))));
    }
    return m;
  };
  const double order = std::log2(err(201) / err(401));
  CHECK(order > 3.7);
  CHECK(order < 4.5);
}

TEST_CASE("inner products") {
  CHECK(inner_product(sample([](double) { return 1 / std::sqrt(2.0); }, Grid(0, 2, 201)),
                      sample([](double) { return 1 / std::sqrt(2.0); }, Grid(0, 2, 201)))
            .real() == Approx(1.0).epsilon(1e-14));
  const Grid g(0, 1, 201);
  const auto s1 = sample([](double x) { return std::sin(pi * x); }, g);
  const auto s2 = sample([](double x) { return std::sin(2 * pi * x); }, g);
  CHECK(std::abs(inner_product(s1, s2)) < 1e-12);
  const auto e = sample([](double x) { return std::polar(1.0, x); }, Grid(0, 1, 101));
  CHECK(std::abs(inner_product(e, e) - 1.0) < 1e-12);
}

TEST_CASE("inner product is conjugate symmetric and sesquilinear") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(-1, 1);
  const Grid g(-2, 2, 41);
  for (int t = 0; t < 20; ++t) {
    GridFunction f(g), h(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
      f[i] = {U(rng), U(rng)};
      h[i] = {U(rng), U(rng)};
    }
    const cplx c{U(rng), U(rng)};
    CHECK(std::abs(inner_product(f, h) - std::conj(inner_product(h, f))) < 1e-14);
    CHECK(std::abs(inner_product(f, c * h) - c * inner_product(f, h)) < 1e-13);
    CHECK(std::abs(inner_product(c * f, h) - std::conj(c) * inner_product(f, h)) < 1e-13);
  }
}

TEST_CASE("adaptive simpson") {
  const cplx v = adaptive_simpson([](double x) { return std::exp(cplx(-x * x, 3 * x)); }, -8, 8);
  CHECK(std::abs(v - std::sqrt(pi) * std::exp(-9.0 / 4)) < 1e-12);
  const cplx p = adaptive_simpson_panels([](double x) { return std::cos(x); }, 0, 10, 0.5);
  CHECK(std::abs(p - std::sin(10.0)) < 1e-12);
  // reversed limits flip the sign
  const cplx r = adaptive_simpson_panels([](double x) { return x; }, 2, 0, 0.5);
  CHECK(std::abs(r + 2.0) < 1e-14);
}
