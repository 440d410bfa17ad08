#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "qwell/solver.hpp"
#include "qwell/variational.hpp"

using namespace qwell;

namespace {

// Independent brute-force oracle: classical RK4 on the first-order system
// u' = v, v' = f(r) u, coarse fixed step. Only node counts are trusted.
int rk4_node_count(PotentialKind kind, double xi, int l, double energy, double h,
                   double r_max) {
  const auto f = [&](double r) {
    const double v = kind == PotentialKind::Gaussian ? -xi * std::exp(-r * r)
                                                     : -xi * std::exp(-r) / r;
    return l * (l + 1) / (r * r) + 2.0 * v - 2.0 * energy;
  };
  double r = h;
  double u = std::pow(r, l + 1), v = (l + 1) * std::pow(r, l);
  int nodes = 0;
  double prev = u;
  while (r < r_max) {
    const auto deriv = [&](double rr, double uu, double vv) {
      return std::pair<double, double>{vv, f(rr) * uu};
    };
    auto [k1u, k1v] = deriv(r, u, v);
    auto [k2u, k2v] = deriv(r + h / 2, u + h / 2 * k1u, v + h / 2 * k1v);
    auto [k3u, k3v] = deriv(r + h / 2, u + h / 2 * k2u, v + h / 2 * k2v);
    auto [k4u, k4v] = deriv(r + h, u + h * k3u, v + h * k3v);
    u += h / 6 * (k1u + 2 * k2u + 2 * k3u + k4u);
    v += h / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
    r += h;
    if ((u > 0) != (prev > 0) && u != 0.0) ++nodes;
    prev = u;
    if (std::fabs(u) > 1e250) {
      u /= 1e250;
      v /= 1e250;
      prev /= 1e250;
    }
  }
  return nodes;
}

}  // namespace

TEST_CASE("integrate_radial basics") {
  SUBCASE("vanishing potential has no bound character") {
    const RadialSolution sol =
        integrate_radial(PotentialKind::Gaussian, CouplingStrength(1e-12), 0, -1.0);
    CHECK(sol.node_count == 0);
    CHECK(std::fabs(sol.matching_defect) > 1e-2);
  }
  SUBCASE("near-origin behavior u ~ r^{l+1}") {
    for (int l : {0, 1, 3}) {
      const RadialSolution sol =
          integrate_radial(PotentialKind::Gaussian, CouplingStrength(200.0), l, -100.0);
      const double c0 = sol.u[0] / std::pow(sol.r[0], l + 1);
      CHECK(c0 > 0.0);
      const double c1 = sol.u[3] / std::pow(sol.r[3], l + 1);
      CHECK(c1 == doctest::Approx(c0).epsilon(1e-3));
    }
  }
  SUBCASE("node counts around the deep-well ground state, RK4 cross-check") {
    const RadialSolution low =
        integrate_radial(PotentialKind::Gaussian, CouplingStrength(200.0), 0, -175.0);
    CHECK(low.node_count == 0);

    const RadialSolution high =
        integrate_radial(PotentialKind::Gaussian, CouplingStrength(200.0), 0, -135.0);
    CHECK(high.node_count >= 1);

    // the outward solution acquires one node per eigenvalue passed; stop at
    // r = 2 so the growing exponential cannot fake extra tail crossings
    CHECK(rk4_node_count(PotentialKind::Gaussian, 200.0, 0, -175.0, 2e-3, 2.0) == 0);
    CHECK(rk4_node_count(PotentialKind::Gaussian, 200.0, 0, -170.0, 2e-3, 2.0) == 1);
    CHECK(rk4_node_count(PotentialKind::Gaussian, 200.0, 0, -135.0, 2e-3, 2.0) >= 1);
  }
  CHECK_THROWS_AS(
      integrate_radial(PotentialKind::Gaussian, CouplingStrength(1.0), 0, 0.5),
      std::domain_error);
  CHECK_THROWS_AS(
      integrate_radial(PotentialKind::Gaussian, CouplingStrength(1.0), -1, -0.5),
      std::domain_error);
}

TEST_CASE("solve_bound_state") {
  const CouplingStrength xi200(200.0);
  SUBCASE("deep Gaussian ground state") {
    const BoundStateResult res =
        solve_bound_state(PotentialKind::Gaussian, xi200, QuantumNumbers(0, 0));
    CHECK(res.estimate.value > -171.3);
    CHECK(res.estimate.value < -170.9);
    CHECK(res.estimate.bound);
    CHECK(res.solution.node_count == 0);
    CHECK(res.discretization_error < 1e-6);
    // upper bound from the variational module
    const VariationalResult var =
        solve_variational(PotentialKind::Gaussian, 0, xi200);
    REQUIRE(var.point.has_value());
    CHECK(res.estimate.value <= var.point->energy + 1e-6);
  }
  SUBCASE("deep Yukawa well against the screened-Coulomb expansion") {
    // E ~ -xi^2/2 + xi - 3/4 for large xi
    SolverConfig cfg;
    cfg.h = 2e-4;
    const BoundStateResult res =
        solve_bound_state(PotentialKind::Yukawa, CouplingStrength(50.0), QuantumNumbers(0, 0), cfg);
    CHECK(res.estimate.value == doctest::Approx(-1200.75).epsilon(0.05 / 1200.75));
  }
  SUBCASE("just above critical: shallow bound state") {
    const BoundStateResult res =
        solve_bound_state(PotentialKind::Gaussian, CouplingStrength(2.0), QuantumNumbers(0, 0));
    CHECK(res.estimate.value > -2.0);
    CHECK(res.estimate.value < 0.0);
    CHECK(res.estimate.bound);
  }
  SUBCASE("node theorem for n = 0..3") {
    double prev = -1e9;
    for (int n = 0; n <= 3; ++n) {
      const BoundStateResult res =
          solve_bound_state(PotentialKind::Gaussian, xi200, QuantumNumbers(n, 0));
      CHECK(res.solution.node_count == n);
      CHECK(res.estimate.value > prev);  // increasing in n
      CHECK(res.estimate.value > -200.0);
      CHECK(res.estimate.value < 0.0);
      prev = res.estimate.value;
    }
  }
  SUBCASE("missing state raises NoBoundStateError") {
    CHECK_THROWS_AS(
        solve_bound_state(PotentialKind::Gaussian, CouplingStrength(0.5), QuantumNumbers(0, 0)),
        NoBoundStateError);
    CHECK_THROWS_AS(
        solve_bound_state(PotentialKind::Gaussian, CouplingStrength(2.0), QuantumNumbers(5, 0)),
        NoBoundStateError);
  }
}

TEST_CASE("reference energies are monotone in xi and l") {
  double prev = 0.0;
  for (double x : {5.0, 10.0, 20.0, 50.0}) {
    const double e =
        solve_bound_state(PotentialKind::Gaussian, CouplingStrength(x), QuantumNumbers(0, 0))
            .estimate.value;
    CHECK(e < prev);
    prev = e;
  }
  double prev_l = -1e9;
  for (int l = 0; l <= 3; ++l) {
    const double e =
        solve_bound_state(PotentialKind::Gaussian, CouplingStrength(50.0), QuantumNumbers(0, l))
            .estimate.value;
    CHECK(e > prev_l);
    prev_l = e;
  }
}

TEST_CASE("Numerov convergence order under step halving") {
  SolverConfig cfg;
  cfg.r_max = 12.0;
  cfg.h = 4e-3;
  const double e1 =
      solve_bound_state(PotentialKind::Gaussian, CouplingStrength(200.0), QuantumNumbers(0, 0), cfg)
          .estimate.value;
  cfg.h = 2e-3;
  const double e2 =
      solve_bound_state(PotentialKind::Gaussian, CouplingStrength(200.0), QuantumNumbers(0, 0), cfg)
          .estimate.value;
  cfg.h = 1e-3;
  const double e3 =
      solve_bound_state(PotentialKind::Gaussian, CouplingStrength(200.0), QuantumNumbers(0, 0), cfg)
          .estimate.value;
  const double ratio = (e1 - e2) / (e2 - e3);
  CHECK(ratio >= 8.0);
  CHECK(ratio <= 32.0);
}

TEST_CASE("count_bound_states") {
  CHECK(count_bound_states(PotentialKind::Gaussian, CouplingStrength(0.5), 0) == 0);
  CHECK(count_bound_states(PotentialKind::Gaussian, CouplingStrength(2.0), 0) == 1);
  CHECK(count_bound_states(PotentialKind::Yukawa, CouplingStrength(0.5), 0) == 0);
}

TEST_CASE("reference critical couplings") {
  SUBCASE("Yukawa l=0") {
    const CriticalCouplingRecord rec =
        critical_coupling_reference(PotentialKind::Yukawa, 0);
    CHECK(rec.xi_crit == doctest::Approx(0.8399).epsilon(0.005 / 0.8399));
    CHECK(rec.bracket_width <= 1e-6);
    CHECK(rec.xi_crit < 1.0);  // closed-form variational value
  }
  SUBCASE("Gaussian l=0") {
    const CriticalCouplingRecord rec =
        critical_coupling_reference(PotentialKind::Gaussian, 0);
    CHECK(rec.xi_crit == doctest::Approx(1.34).epsilon(0.02 / 1.34));
    CHECK(rec.xi_crit < 1.948557);
  }
  SUBCASE("Yukawa l=1") {
    const CriticalCouplingRecord rec =
        critical_coupling_reference(PotentialKind::Yukawa, 1);
    CHECK(rec.xi_crit == doctest::Approx(4.54).epsilon(0.02 / 4.54));
    CHECK(rec.xi_crit < 128.0 / 27.0);
  }
  SUBCASE("count changes by exactly one across the critical point") {
    const double xc = critical_coupling_reference(PotentialKind::Gaussian, 0).xi_crit;
    const int below = count_bound_states(PotentialKind::Gaussian, CouplingStrength(xc - 1e-3), 0);
    const int above = count_bound_states(PotentialKind::Gaussian, CouplingStrength(xc + 1e-3), 0);
    CHECK(above - below == 1);
  }
}

TEST_CASE("variational dominance on a sample grid") {
  for (double x : {5.0, 50.0}) {
    for (int l = 0; l <= 2; ++l) {
      const VariationalResult var =
          solve_variational(PotentialKind::Gaussian, l, CouplingStrength(x));
      if (!var.point || !var.bound) continue;
      const double ref =
          solve_bound_state(PotentialKind::Gaussian, CouplingStrength(x), QuantumNumbers(0, l))
              .estimate.value;
      CHECK(ref <= var.point->energy + 1e-6);
      CHECK(ref > -x);
      CHECK(ref < 0.0);
    }
  }
}
