#pragma once

// Verification suites run by the CLI. Every random draw comes from a seeded
// generator consumed serially; sweeps may run in parallel but write into
// per-draw slots, so reports do not depend on the thread count.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "genmom/cli/config.hpp"
#include "genmom/cli/report.hpp"
#include "genmom/commutator.hpp"
#include "genmom/eigenfunctions.hpp"
#include "genmom/fourier.hpp"
#include "genmom/kernels.hpp"
#include "genmom/operators.hpp"
#include "genmom/parallel.hpp"
#include "genmom/squarewell.hpp"

namespace genmom::cli {

namespace detail {

/// Uniform doubles from mt19937_64 with a fixed bit recipe (the standard
/// distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(eng_() >> 11) * 0x1.0p-53);
  }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  /// Point in the open disk of radius r.
  std::pair<double, double> disk(double r) {
    for (;;) {
      const double u = uniform(-r, r), v = uniform(-r, r);
      if (u * u + v * v < r * r) return {u, v};
    }
  }
  double sign() { return uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0; }

 private:
  std::mt19937_64 eng_;
};

inline Rng make_rng(const Params& p, std::uint64_t stream) {
  return Rng(static_cast<std::uint64_t>(p["seed"]) * 1000003ULL + stream);
}

/// Shortest round-trip form, used inside record ids.
inline std::string short_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline Record below(std::string suite, std::string id, ordered_json inputs, double value, double tol) {
  Record r{std::move(suite), std::move(id), std::move(inputs), value, tol, Status::pass, ordered_json::object()};
  r.status = value < tol ? Status::pass : Status::fail;  // NaN fails
  return r;
}

inline Record above(std::string suite, std::string id, ordered_json inputs, double value, double bound) {
  Record r{std::move(suite), std::move(id), std::move(inputs), value, bound, Status::pass, ordered_json::object()};
  r.status = value > bound ? Status::pass : Status::fail;
  r.details["comparison"] = "value > tolerance";
  return r;
}

inline Record info(std::string suite, std::string id, ordered_json inputs, double value,
                   Status s = Status::pass) {
  return {std::move(suite), std::move(id), std::move(inputs), value, std::nullopt, s, ordered_json::object()};
}

inline double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::isnan(x) || std::isnan(m) ? std::numeric_limits<double>::quiet_NaN() : std::max(m, x);
  return m;
}

inline std::size_t argmax(const std::vector<double>& v) {
  return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

inline cplx unit_gaussian(double x) { return std::pow(pi, -0.25) * std::exp(-0.5 * x * x); }

// Compactly supported C-infinity bump, modulated: exp(-1/(1 - r^2)) e^{iqx}, r = (x - c)/w.
inline GridFunction bump(const Grid& g, double c, double w, double q) {
  return sample(
      [=](double x) {
        const double r = (x - c) / w;
        if (std::abs(r) >= 1.0) return cplx{};
        return std::exp(-1.0 / (1.0 - r * r)) * std::polar(1.0, q * x);
      },
      g);
}

}  // namespace detail

// ---- kernel ---------------------------------------------------------------

inline std::vector<Record> kernel_suite(const Params& p) {
  const std::string S = "kernel";
  const Grid g(-p["kernel_x"], p["kernel_x"], p.count("kernel_n"));
  const std::size_t draws = p.count("draws");
  constexpr double guard = 1e-3;  // draws whose coefficient gets closer to zero are redrawn

  struct Draw {
    cplx C;
    double s;
  };
  auto draw_set = [&](std::uint64_t stream, auto coefficient, std::size_t& rejected) {
    auto rng = detail::make_rng(p, stream);
    std::vector<Draw> out;
    while (out.size() < draws) {
      const cplx C = std::polar(rng.log_uniform(0.1, 10.0), rng.uniform(0.0, 2.0 * pi));
      const double s = rng.uniform(-5.0, 5.0);
      double closest = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < g.size(); ++i) closest = std::min(closest, std::abs(coefficient(C, s, g[i])));
      if (closest < guard) {
        ++rejected;
        continue;
      }
      out.push_back({C, s});
    }
    return out;
  };

  std::size_t rejected_G = 0, rejected_Gt = 0;
  const auto dG = draw_set(1, [](cplx C, double k, double x) { return f_of_x(KernelParamsP(C, k), x); },
                           rejected_G);
  const auto dGt = draw_set(2, [](cplx D, double x, double k) { return h_of_k(KernelParamsX(D, x), k); },
                            rejected_Gt);

  std::vector<double> eG(draws), eGt(draws);
  parallel_for(draws, [&](std::size_t i) {
    const KernelParamsP kp(dG[i].C, dG[i].s);
    eG[i] = plane_wave_defect_G(reconstruct_G([&](double x) { return f_of_x(kp, x); }, kp.k(), g), kp.k());
    const KernelParamsX kx(dGt[i].C, dGt[i].s);
    eGt[i] = plane_wave_defect_Gtilde(
        reconstruct_Gtilde([&](double k) { return h_of_k(kx, k); }, kx.x(), g), kx.x());
  });

  const ordered_json in = {{"draws", draws}, {"window", p["kernel_x"]}, {"points", g.size()}};
  std::vector<Record> out;
  auto worst = [&](const std::vector<double>& e, const std::vector<Draw>& d, const char* name, std::size_t rej,
                   const std::string& id) {
    auto r = detail::below(S, id, in, detail::max_of(e), 1e-6);
    const auto i = detail::argmax(e);
    r.details = {{"worst_" + std::string(name) + "_re", d[i].C.real()},
                 {"worst_" + std::string(name) + "_im", d[i].C.imag()},
                 {"worst_shift", d[i].s},
                 {"redrawn_near_pole", rej}};
    out.push_back(std::move(r));
  };
  worst(eG, dG, "C", rejected_G, "G.max_plane_wave_defect");
  worst(eGt, dGt, "D", rejected_Gt, "Gtilde.max_plane_wave_defect");
  return out;
}

// ---- fourier --------------------------------------------------------------

inline std::vector<Record> fourier_suite(const Params& p) {
  const std::string S = "fourier";
  const Grid xg(p["x_min"], p["x_max"], p.count("n"));
  const Grid kg(p["k_min"], p["k_max"], p.count("n"));
  const ordered_json in = {{"x_window", {xg.x_min(), xg.x_max()}},
                           {"k_window", {kg.x_min(), kg.x_max()}},
                           {"points", xg.size()}};
  std::vector<Record> out;

  const auto gx = sample(detail::unit_gaussian, xg);
  const auto gk = sample(detail::unit_gaussian, kg);
  const double self = std::max(max_abs_diff(inverse_ft(gx, kg).values, gk),
                               max_abs_diff(forward_ft(gk, xg).values, gx));
  out.push_back(detail::below(S, "gaussian_self_transform", in, self, 1e-9));

  // displaced, boosted Gaussian
  auto packet = [](double x) { return std::pow(pi, -0.25) * std::exp(cplx(-0.5 * (x - 1.0) * (x - 1.0), 0.5 * x)); };
  const auto alpha = sample(packet, xg);
  const auto beta = inverse_ft(alpha, kg).values;
  out.push_back(detail::below(S, "round_trip", in, max_abs_diff(forward_ft(beta, xg).values, alpha), 1e-9));

  double eta_sym = 0.0, sigma_sym = 0.0;
  for (int i = 0; i <= 40; ++i) {
    const double t = 0.25 * i;
    eta_sym = std::max(eta_sym, std::abs(eta_at(beta, -t) - std::conj(eta_at(beta, t))));
    sigma_sym = std::max(sigma_sym, std::abs(sigma_at(alpha, -t) - std::conj(sigma_at(alpha, t))));
  }
  out.push_back(detail::below(S, "eta_conjugate_symmetry", in, eta_sym, 1e-10));
  out.push_back(detail::below(S, "sigma_conjugate_symmetry", in, sigma_sym, 1e-10));

  const double corr = std::max(verify_momentum_correspondence(gx, kg), verify_momentum_correspondence(alpha, kg));
  out.push_back(detail::below(S, "momentum_correspondence", in, corr, 1e-8));
  return out;
}

// ---- operators ------------------------------------------------------------

inline std::vector<Record> operators_suite(const Params& p) {
  const std::string S = "operators";
  const Grid g(-p["bump_x"], p["bump_x"], p.count("bump_n"));
  const std::size_t draws = p.count("states");
  auto rng = detail::make_rng(p, 3);

  struct Draw {
    double c1, w1, q1, c2, w2, q2;
    double a, b, k, c, d, x;
    cplx C;
  };
  std::vector<Draw> ds(draws);
  for (auto& d : ds) {
    d.c1 = rng.uniform(-3, 3), d.w1 = rng.uniform(1.5, 3), d.q1 = rng.uniform(-2, 2);
    d.c2 = rng.uniform(-3, 3), d.w2 = rng.uniform(1.5, 3), d.q2 = rng.uniform(-2, 2);
    std::tie(d.a, d.b) = rng.disk(0.9);
    std::tie(d.c, d.d) = rng.disk(0.9);
    d.k = rng.uniform(-3, 3);
    d.x = rng.uniform(-3, 3);
    d.C = std::polar(rng.log_uniform(0.1, 10.0), rng.uniform(0.0, 2.0 * pi));
  }

  std::vector<double> dpH(draws), dxH(draws), ratio(draws), ratio_diag(draws);
  std::vector<int> edge(draws);
  parallel_for(draws, [&](std::size_t i) {
    const auto& d = ds[i];
    const auto phi = detail::bump(g, d.c1, d.w1, d.q1);
    const auto psi = detail::bump(g, d.c2, d.w2, d.q2);
    const auto hp = hermiticity_defect(HermitianMomentumOp{DeformParamsP(d.a, d.b, d.k)}, phi, psi);
    const auto hx = hermiticity_defect(HermitianPositionOp{DeformParamsX(d.c, d.d, d.x)}, phi, psi);
    dpH[i] = hp.defect;
    dxH[i] = hx.defect;
    edge[i] = hp.edge_flag || hx.edge_flag;
    const MomentumOp raw{KernelParamsP(d.C, d.k)};
    ratio[i] = hermiticity_defect(raw, phi, psi).defect / norm(psi);
    ratio_diag[i] = hermiticity_defect(raw, psi, psi).defect / norm(psi);
  });

  const ordered_json in = {{"draws", draws}, {"window", p["bump_x"]}, {"points", g.size()}};
  std::vector<Record> out;
  out.push_back(detail::below(S, "pH.max_adjoint_defect", in, detail::max_of(dpH), 1e-6));
  out.push_back(detail::below(S, "xH.max_adjoint_defect", in, detail::max_of(dxH), 1e-6));

  auto lowest = [&](const std::vector<double>& v, const std::string& id, bool asserted) {
    const double m = *std::min_element(v.begin(), v.end());
    const auto below_bound = std::count_if(v.begin(), v.end(), [](double r) { return !(r > 1e-2); });
    Record r = asserted ? detail::above(S, id, in, m, 1e-2) : detail::info(S, id, in, m, Status::flag);
    r.details["draws_not_exceeding_bound"] = below_bound;
    out.push_back(std::move(r));
  };
  lowest(ratio, "p.min_adjoint_defect_over_norm", true);
  // same operator draws with phi = psi: supports always overlap
  lowest(ratio_diag, "p.min_adjoint_defect_over_norm.diagonal_pair", false);

  out.push_back(detail::below(S, "edge_flags", in, static_cast<double>(std::count(edge.begin(), edge.end(), 1)), 0.5));
  return out;
}

// ---- eigen ----------------------------------------------------------------

inline std::vector<Record> eigen_suite(const Params& p) {
  const std::string S = "eigen";
  const Grid g(-p["eigen_x"], p["eigen_x"], p.count("eigen_n"));
  const std::size_t draws = p.count("draws");
  const ordered_json in = {{"draws", draws}, {"window", p["eigen_x"]}, {"points", g.size()}};
  std::vector<Record> out;

  // configured parameters
  {
    const double a = p["a"], b = p["b"], k = p["k"];
    const ordered_json pin = {{"a", a}, {"b", b}, {"k", k}, {"points", g.size()}};
    if (b == 0.0 || a == 0.0) {
      const EigenfunctionSpec spec(b == 0.0 ? EigenCase::CaseA : EigenCase::CaseB, a, b, k);
      out.push_back(detail::below(S, "eigen_residual", pin,
                                  eigen_residual(sample_eigenfunction(spec, g), spec.operator_params()), 1e-6));
    } else {
      const auto ne = psi_general_numeric(a, b, k, g);
      out.push_back(detail::below(S, "eigen_residual", pin, ne.residual, 1e-5));
    }
  }

  struct Draw {
    double d, k;
  };
  auto rng = detail::make_rng(p, 4);
  std::vector<Draw> da(draws), db(draws);
  for (auto& d : da) d = {rng.uniform(-0.8, 0.8), rng.sign() * rng.uniform(0.25, 2.5)};
  for (auto& d : db) d = {rng.uniform(-0.8, 0.8), rng.sign() * rng.uniform(0.25, 2.5)};

  std::vector<double> ra(draws), rb(draws), pa(draws), pb(draws), dena(draws), denb(draws);
  parallel_for(draws, [&](std::size_t i) {
    const auto [a, ka] = da[i];
    const auto [b, kb] = db[i];
    ra[i] = eigen_residual(sample([&](double x) { return psi_case_a(a, ka, x); }, g), DeformParamsP(a, 0, ka));
    rb[i] = eigen_residual(sample([&](double x) { return psi_case_b(b, kb, x); }, g), DeformParamsP(0, b, kb));
    double ea = 0, eb = 0, qa = 0, qb = 0;
    const cplx a0 = psi_case_a(a, ka, 0.0), b0 = psi_case_b(b, kb, 0.0);
    for (int j = 0; j <= 40; ++j) {
      const double x = -5.0 + 0.25 * j;
      // against the quadrature oracles; the closed forms fix the phase at x = 0
      ea = std::max(ea, std::abs(psi_case_a(a, ka, x) / a0 - std::exp(cplx(0, ka) * I1_quadrature(a, ka, x))));
      eb = std::max(eb, std::abs(psi_case_b(b, kb, x) / b0 - std::exp(cplx(0, kb) * I2_quadrature(b, kb, x))));
      qa = std::max(qa, std::abs(density_case_a(a, ka, x) - std::norm(psi_case_a(a, ka, x))) /
                            density_case_a(a, ka, x));
      qb = std::max(qb, std::abs(density_case_b(b, kb, x) - std::norm(psi_case_b(b, kb, x))) /
                            density_case_b(b, kb, x));
    }
    pa[i] = ea;
    pb[i] = eb;
    dena[i] = qa;
    denb[i] = qb;
  });
  out.push_back(detail::below(S, "case_a.max_residual", in, detail::max_of(ra), 1e-6));
  out.push_back(detail::below(S, "case_b.max_residual", in, detail::max_of(rb), 1e-6));
  out.push_back(detail::below(S, "case_a.quadrature_phase_defect", in, detail::max_of(pa), 1e-7));
  out.push_back(detail::below(S, "case_b.quadrature_phase_defect", in, detail::max_of(pb), 1e-7));
  out.push_back(detail::below(S, "case_a.density_defect", in, detail::max_of(dena), 1e-12));
  out.push_back(detail::below(S, "case_b.density_defect", in, detail::max_of(denb), 1e-12));

  // small-parameter limits: distance to e^{ikx}/sqrt(2pi) should scale like the parameter
  for (const bool use_a : {true, false}) {
    const double k = 1.0;
    std::vector<double> dist;
    for (double eps : {1e-1, 1e-2, 1e-3}) {
      double m = 0.0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        const cplx v = use_a ? psi_case_a(eps, k, g[i]) : psi_case_b(eps, k, g[i]);
        m = std::max(m, std::abs(v - std::polar(default_normalization, k * g[i])));
      }
      dist.push_back(m);
    }
    const double o1 = std::log10(dist[0] / dist[1]), o2 = std::log10(dist[1] / dist[2]);
    auto r = detail::below(S, use_a ? "case_a.limit_order_defect" : "case_b.limit_order_defect",
                           {{"k", k}, {"params", {1e-1, 1e-2, 1e-3}}}, std::max(std::abs(o1 - 1), std::abs(o2 - 1)),
                           0.1);
    r.details = {{"distances", dist}, {"orders", {o1, o2}}};
    out.push_back(std::move(r));
  }

  // general (a, b) by refined integration
  {
    const std::size_t n_general = std::min<std::size_t>(draws, 10);
    std::vector<std::array<double, 3>> dg(n_general);
    for (auto& d : dg) {
      auto [a, b] = rng.disk(0.7);
      d = {a, b, rng.sign() * rng.uniform(0.25, 2.0)};
    }
    std::vector<double> rg(n_general);
    std::vector<int> conv(n_general);
    parallel_for(n_general, [&](std::size_t i) {
      const auto ne = psi_general_numeric(dg[i][0], dg[i][1], dg[i][2], g);
      rg[i] = ne.residual;
      conv[i] = ne.converged;
    });
    auto r = detail::below(S, "general.max_residual", {{"draws", n_general}, {"points", g.size()}},
                           detail::max_of(rg), 1e-5);
    r.details["unconverged"] = std::count(conv.begin(), conv.end(), 0);
    out.push_back(std::move(r));
  }
  return out;
}

// ---- well -----------------------------------------------------------------

inline std::vector<Record> well_suite(const Params& p) {
  const std::string S = "well";
  const double L = p["L"], m = p["m"];
  const int n_max = static_cast<int>(p["n_max"]);
  const Grid g(0.0, L, p.count("well_n"));
  std::vector<double> as = {0.0, 0.3, 0.6, 0.9};
  if (std::find(as.begin(), as.end(), p["a"]) == as.end()) as.push_back(p["a"]);

  std::vector<Record> out;
  for (double a : as) {
    const WellConfig cfg(L, m, a, n_max);
    const std::string tag = "a=" + detail::short_double(a);
    const ordered_json in = {{"a", a}, {"L", L}, {"n_max", n_max}};

    // boundary roots against n pi / L with a 2000-point scan
    const double k_max = (n_max + 0.5) * pi / L;
    const auto roots = scan_boundary_roots(a, L, k_max, 2000);
    double worst = 0.0;
    for (int n = 1; n <= n_max; ++n) {
      double best = std::numeric_limits<double>::infinity();
      for (double r : roots) best = std::min(best, std::abs(r - n * pi / L));
      worst = std::max(worst, best);
    }
    std::size_t spurious = 0;
    for (double r : roots) {
      const double n = std::round(r * L / pi);
      if (n < 1 || n > n_max || std::abs(r - n * pi / L) > 1e-8) ++spurious;
    }
    auto rr = detail::below(S, "roots." + tag, in, worst, 1e-8);
    if (spurious > 0) rr.status = Status::fail;
    rr.details = {{"roots", roots}, {"spurious", spurious}, {"scan_k_max", k_max}};
    out.push_back(std::move(rr));

    double wall0 = 0.0, wallL = 0.0, res = 0.0, res_fixed = 0.0;
    std::vector<double> norms, energies;
    for (const auto& lvl : spectrum(cfg)) {
      const auto sol = solve_level(cfg, lvl.n, g);
      wall0 = std::max(wall0, std::abs(sol.psi_at_0));
      wallL = std::max(wallL, std::abs(sol.psi_at_L));
      res = std::max(res, hamiltonian_residual(cfg, lvl.n, g));
      res_fixed = std::max(res_fixed, hamiltonian_residual_fixed_k(cfg, lvl.n, g));
      norms.push_back(norm_report(sol.psi));
      energies.push_back(lvl.E);
    }
    out.push_back(detail::below(S, "psi_at_0." + tag, in, wall0, 1e-8));
    out.push_back(detail::below(S, "psi_at_L." + tag, in, wallL, 1e-8));
    out.push_back(detail::below(S, "hamiltonian_residual." + tag, in, res, 1e-5));
    out.push_back(detail::info(S, "hamiltonian_residual_fixed_k." + tag, in, res_fixed,
                               a == 0.0 ? Status::pass : Status::flag));
    auto nr = detail::info(S, "norm." + tag, in, norms.empty() ? 0.0 : norms.front());
    nr.details = {{"norms", norms}, {"energies", energies}};
    out.push_back(std::move(nr));
  }

  // a -> 0: sqrt(2/L) sin(n pi x / L)
  {
    const WellConfig cfg(L, m, 1e-6, n_max);
    double worst = 0.0;
    for (int n = 1; n <= n_max; ++n) {
      const auto psi = psi_n(cfg, n, g);
      for (std::size_t i = 0; i < g.size(); ++i) {
        worst = std::max(worst, std::abs(psi[i] - std::sqrt(2.0 / L) * std::sin(n * pi * g[i] / L)));
      }
    }
    out.push_back(detail::below(S, "small_a_limit", {{"a", 1e-6}, {"L", L}, {"n_max", n_max}}, worst, 1e-5));
  }
  return out;
}

// ---- commutator -----------------------------------------------------------

inline std::vector<Record> commutator_suite(const Params& p) {
  const std::string S = "commutator";
  const Grid xg(-p["state_x"], p["state_x"], p.count("state_n"));
  const Grid kg(-p["state_k"], p["state_k"], p.count("state_n"));
  const std::size_t states = p.count("states");
  std::vector<Record> out;

  struct Draw {
    double x0, s, q, a, b, c, d, k, x;
  };
  auto rng = detail::make_rng(p, 5);
  std::vector<Draw> ds(states);
  for (auto& d : ds) {
    d.x0 = rng.uniform(-2, 2), d.s = rng.uniform(0.5, 1.2), d.q = rng.uniform(-2, 2);
    std::tie(d.a, d.b) = rng.disk(0.9);
    std::tie(d.c, d.d) = rng.disk(0.9);
    d.k = rng.uniform(-2, 2), d.x = rng.uniform(-2, 2);
  }
  auto packet = [](double x0, double s, double q) {
    return [=](double x) {
      const double u = x - x0;
      return std::pow(2.0 * pi * s * s, -0.25) * std::exp(cplx(-u * u / (4.0 * s * s), q * x));
    };
  };

  std::vector<double> ex(states), ek(states);
  parallel_for(states, [&](std::size_t i) {
    const auto& d = ds[i];
    const CommutatorScenario sc(DeformParamsP(d.a, d.b, d.k), DeformParamsX(d.c, d.d, d.x),
                                sample(packet(d.x0, d.s, d.q), xg), kg);
    ex[i] = std::abs(expectation_x_basis(sc) - closed_form_x(sc));
    ek[i] = std::abs(expectation_k_basis(sc) - closed_form_k(sc));
  });
  const ordered_json in = {{"states", states}, {"x_window", p["state_x"]}, {"k_window", p["state_k"]},
                           {"points", xg.size()}};
  out.push_back(detail::below(S, "x_basis.closed_form_defect", in, detail::max_of(ex), 1e-8));
  out.push_back(detail::below(S, "k_basis.closed_form_defect", in, detail::max_of(ek), 1e-8));

  const auto gauss = sample(detail::unit_gaussian, xg);
  {
    const CommutatorScenario sc(DeformParamsP(0, 0, p["k"]), DeformParamsX(0, 0, p["x"]), gauss, kg);
    const cplx I{0.0, 1.0};
    const double m = std::max({std::abs(expectation_x_basis(sc) - I), std::abs(expectation_k_basis(sc) - I),
                               std::abs(closed_form_x(sc) - I), std::abs(closed_form_k(sc) - I)});
    out.push_back(detail::below(S, "undeformed_equals_i", {{"k", p["k"]}, {"x", p["x"]}}, m, 1e-10));
  }

  // Gaussian state, k = 1: sigma(1) = eta(1), so R = -b sigma(1) - d eta(x) vanishes at x = 1 when d = -b
  {
    const CommutatorScenario sc(DeformParamsP(0, 0.4, 1.0), DeformParamsX(0, -0.4, 1.0), gauss, kg);
    const auto scan = find_independence_roots(sc, 0.25, 3.0, 56);
    double dist = std::numeric_limits<double>::infinity();
    for (double r : scan.roots) dist = std::min(dist, std::abs(r - 1.0));
    auto r = detail::below(S, "gaussian_root_x1", {{"a", 0}, {"b", 0.4}, {"c", 0}, {"d", -0.4}, {"k", 1}}, dist,
                           1e-8);
    r.details = {{"roots", scan.roots}};
    out.push_back(std::move(r));

    const CommutatorScenario lit(DeformParamsP(0, 0.4, 1.0), DeformParamsX(0, 0.4, 1.0), gauss, kg);
    const auto none = find_independence_roots(lit, 0.25, 3.0, 56);
    auto rl = detail::below(S, "gaussian_same_sign_roots", {{"a", 0}, {"b", 0.4}, {"c", 0}, {"d", 0.4}, {"k", 1}},
                            static_cast<double>(none.roots.size()), 0.5);
    rl.details = {{"residual_at_x1", basis_independence_residual(lit)}};
    out.push_back(std::move(rl));
  }

  {
    const CommutatorScenario sc(DeformParamsP(p["a"], p["b"], p["k"]), DeformParamsX(p["c"], p["d"], p["x"]), gauss,
                                kg);
    out.push_back(detail::info(S, "basis_independence_residual",
                               {{"a", p["a"]}, {"b", p["b"]}, {"c", p["c"]}, {"d", p["d"]}, {"k", p["k"]}, {"x", p["x"]}},
                               basis_independence_residual(sc)));
  }
  return out;
}

// ---- ortho ----------------------------------------------------------------

inline std::vector<Record> ortho_suite(const Params& p) {
  const std::string S = "ortho";
  const double X = p["X"], k = p["ortho_k"], kp = p["ortho_kp"], a = p["ortho_a"];
  const std::size_t n = p.count("n");
  std::vector<Record> out;

  const auto zero = orthonormality_report(0.0, k, kp, X, n);
  const double dirichlet = std::sin((k - kp) * X) / (pi * (k - kp));
  const ordered_json in0 = {{"a", 0}, {"k", k}, {"kp", kp}, {"X", X}, {"points", n}};
  out.push_back(detail::below(S, "dirichlet_overlap.a=0", in0, std::abs(zero.overlap - dirichlet), 1e-8));
  out.push_back(detail::below(S, "phase_identity_defect.a=0", in0, zero.phase_identity_defect, 1e-10));

  const auto rep = orthonormality_report(a, k, kp, X, n);
  const ordered_json in = {{"a", a}, {"k", k}, {"kp", kp}, {"X", X}, {"points", n}};
  out.push_back(detail::info(S, "phase_identity_defect", in, rep.phase_identity_defect));
  auto ratio = detail::below(S, "offdiagonal_ratio", in, std::abs(rep.overlap) / rep.diagonal, 0.05);
  ratio.details = {{"overlap_abs", std::abs(rep.overlap)}, {"diagonal", rep.diagonal}};
  out.push_back(std::move(ratio));

  // all pairs on k, kp in {0.2, 0.3, ..., 3.0} with |k - kp| >= 0.5
  {
    const Grid g(-X, X, n);
    std::vector<double> ks;
    for (int i = 2; i <= 30; ++i) ks.push_back(0.1 * i);
    std::vector<GridFunction> states(ks.size(), GridFunction(g));
    parallel_for(ks.size(), [&](std::size_t i) {
      states[i] = sample([&](double x) { return psi_case_a(a, ks[i], x); }, g);
    });
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      for (std::size_t j = 0; j < ks.size(); ++j) {
        if (std::abs(ks[i] - ks[j]) >= 0.5 - 1e-9) pairs.emplace_back(i, j);
      }
    }
    std::vector<double> ratios(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t q) {
      const auto [i, j] = pairs[q];
      ratios[q] = std::abs(inner_product(states[j], states[i])) / inner_product(states[i], states[i]).real();
    });
    const auto w = detail::argmax(ratios);
    auto r = detail::below(S, "offdiagonal_ratio.sweep", {{"a", a}, {"X", X}, {"pairs", pairs.size()}},
                           detail::max_of(ratios), 0.05);
    r.details = {{"exceeding", std::count_if(ratios.begin(), ratios.end(), [](double v) { return !(v < 0.05); })},
                 {"worst_k", ks[pairs[w].first]},
                 {"worst_kp", ks[pairs[w].second]}};
    out.push_back(std::move(r));
  }
  return out;
}

// ---- dispatch -------------------------------------------------------------

inline ordered_json environment(const Params& p) {
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : p.all()) params[k] = v;
  return {{"version", artifact_version}, {"hbar", 1}, {"params", std::move(params)}};
}

inline Report run_suites(Suite suite, const Params& p) {
  validate(p);
  Report r;
  r.suite = std::string(to_string(suite));
  r.environment = environment(p);
  auto add = [&](std::vector<Record> recs) {
    for (auto& rec : recs) r.records.push_back(std::move(rec));
  };
  const bool all = suite == Suite::all;
  if (all || suite == Suite::kernel) add(kernel_suite(p));
  if (all || suite == Suite::fourier) add(fourier_suite(p));
  if (all || suite == Suite::operators) add(operators_suite(p));
  if (all || suite == Suite::eigen) add(eigen_suite(p));
  if (all || suite == Suite::well) add(well_suite(p));
  if (all || suite == Suite::commutator) add(commutator_suite(p));
  if (all || suite == Suite::ortho) add(ortho_suite(p));
  return r;
}

/// Writes text to path ("-" or empty means standard output).
inline void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file '" + path + "'");
  f << text;
  if (!f) throw ConfigError("failed writing '" + path + "'");
}

/// Exit code: 0 when no record failed, 1 otherwise. Config errors propagate as ConfigError.
inline int run(const RunConfig& cfg) {
  const Report r = run_suites(cfg.suite, cfg.params);
  write_output(cfg.output_path, render(r, cfg.format));
  return r.failed() ? 1 : 0;
}

}  // namespace genmom::cli
