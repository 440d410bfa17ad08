#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "qwell/empirical.hpp"

using namespace qwell;

TEST_CASE("harmonic zeroth-order energies") {
  const CouplingStrength xi(200.0);
  CHECK(harmonic_zeroth_energy(QuantumNumbers(0, 0), xi).value == doctest::Approx(-170.0));
  CHECK(harmonic_zeroth_energy(QuantumNumbers(1, 1), xi).value == doctest::Approx(-110.0));

  // E'_HO + xi = (2n+l+3/2) sqrt(2 xi) identically
  for (double x : {0.7, 3.0, 41.0, 900.0}) {
    const double e = harmonic_zeroth_energy(QuantumNumbers(0, 0), CouplingStrength(x)).value;
    CHECK(e + x == doctest::Approx(1.5 * std::sqrt(2.0 * x)).epsilon(1e-13));
  }
}

TEST_CASE("Koksal energies against extended-precision evaluation") {
  const CouplingStrength xi(200.0);
  // 15 - 200 e^{-0.075} and 35 - 200 e^{-0.175} in long double
  const double e00 = static_cast<double>(15.0L - 200.0L * std::exp(-0.075L));
  const double e10 = static_cast<double>(35.0L - 200.0L * std::exp(-0.175L));
  CHECK(koksal_energy(QuantumNumbers(0, 0), xi).value == doctest::Approx(e00).epsilon(1e-14));
  CHECK(koksal_energy(QuantumNumbers(0, 0), xi).value == doctest::Approx(-170.5487).epsilon(1e-6));
  CHECK(koksal_energy(QuantumNumbers(1, 0), xi).value == doctest::Approx(e10).epsilon(1e-14));
  CHECK(koksal_energy(QuantumNumbers(1, 0), xi).value == doctest::Approx(-132.892).epsilon(1e-5));
  CHECK(koksal_energy(QuantumNumbers(0, 0), xi).bound);

  CHECK_THROWS_AS(koksal_energy(PotentialKind::Yukawa, QuantumNumbers(0, 0), xi),
                  UnsupportedPotentialError);
  CHECK(koksal_energy(PotentialKind::Gaussian, QuantumNumbers(0, 0), xi).value ==
        koksal_energy(QuantumNumbers(0, 0), xi).value);
}

TEST_CASE("deep-well asymptotics match the perturbative correction") {
  // |E_K - (E_HO - (E_HO+xi)^2/(8 xi))| relative to the correction shrinks with xi
  double prev = 1e9;
  for (double x : {1e3, 1e4, 1e5}) {
    const CouplingStrength xi(x);
    const double ho = harmonic_zeroth_energy(QuantumNumbers(0, 0), xi).value;
    const double k = koksal_energy(QuantumNumbers(0, 0), xi).value;
    const double corr = (ho + x) * (ho + x) / (8.0 * x);
    const double dev = std::fabs(k - (ho - corr)) / corr;
    CHECK(dev < prev);
    prev = dev;
  }
}

TEST_CASE("Koksal energy has exactly one sign change in xi") {
  for (int n = 0; n <= 5; ++n)
    for (int l = 0; l <= 5; ++l) {
      int changes = 0;
      double prev = koksal_energy(QuantumNumbers(n, l), CouplingStrength(0.5)).value;
      for (double x = 0.5; x <= 500.0; x += 0.5) {
        const double e = koksal_energy(QuantumNumbers(n, l), CouplingStrength(x)).value;
        if ((e > 0) != (prev > 0)) ++changes;
        prev = e;
      }
      CHECK(changes <= 1);
      // decreasing beyond the zero
      const double root = koksal_critical(QuantumNumbers(n, l)).value();
      double last = koksal_energy(QuantumNumbers(n, l), CouplingStrength(root + 0.1)).value;
      for (double x = root + 0.6; x < root + 5.0; x += 0.5) {
        const double e = koksal_energy(QuantumNumbers(n, l), CouplingStrength(x)).value;
        CHECK(e < last);
        last = e;
      }
    }
}

TEST_CASE("Koksal critical coupling") {
  SUBCASE("ground state root near 3.497, bracketed by hand bisection") {
    // independent sign check of the formula around the root
    CHECK(detail::koksal_core(0, 0, 3.49) > 0.0);
    CHECK(detail::koksal_core(0, 0, 3.50) < 0.0);
    const double root = koksal_critical(QuantumNumbers(0, 0)).value();
    CHECK(root == doctest::Approx(3.497).epsilon(0.003));
    CHECK(std::fabs(koksal_energy(QuantumNumbers(0, 0), CouplingStrength(root)).value) < 1e-8);
  }
  SUBCASE("monotone in l, cross-checked by a brute-force scan") {
    const double r00 = koksal_critical(QuantumNumbers(0, 0)).value();
    const double r01 = koksal_critical(QuantumNumbers(0, 1)).value();
    CHECK(r01 > r00);
    // brute-force: first grid xi where E(0,1) turns negative lies above r00
    double first_negative = 0.0;
    for (double x = 0.5; x < 100.0; x += 0.01)
      if (detail::koksal_core(0, 1, x) < 0.0) {
        first_negative = x;
        break;
      }
    CHECK(first_negative > r00);
    CHECK(r01 == doctest::Approx(first_negative).epsilon(0.01));
  }
  SUBCASE("monotone in n and l on a grid") {
    for (int n = 0; n <= 4; ++n)
      for (int l = 0; l <= 4; ++l) {
        const double here = koksal_critical(QuantumNumbers(n, l)).value();
        CHECK(koksal_critical(QuantumNumbers(n + 1, l)).value() > here);
        CHECK(koksal_critical(QuantumNumbers(n, l + 1)).value() > here);
      }
  }
  SUBCASE("bracketing succeeds for all n, l up to 50") {
    for (int n = 0; n <= 50; n += 5)
      for (int l = 0; l <= 50; l += 5) {
        const double root = koksal_critical(QuantumNumbers(n, l)).value();
        CHECK(root > 0.0);
        CHECK(std::fabs(koksal_energy(QuantumNumbers(n, l), CouplingStrength(root)).value) <
              1e-7);
      }
    CHECK(koksal_critical(QuantumNumbers(50, 50)).value() > 0.0);
  }
}
