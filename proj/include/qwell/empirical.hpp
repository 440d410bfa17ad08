#pragma once

#include <cmath>

#include "qwell/model.hpp"

namespace qwell {

/// Harmonic zeroth-order energy: minimum potential energy plus the harmonic
/// oscillation about it, E' = -xi + (2n + l + 3/2) sqrt(2 xi).
EnergyEstimate harmonic_zeroth_energy(const QuantumNumbers& qn, const CouplingStrength& xi);

/// Koksal's closed-form approximant for the Gaussian well,
/// E' = (nu/2) sqrt(2 xi) - xi exp(-(nu/2) sqrt(2/xi)), nu = 2n + l + 3/2.
EnergyEstimate koksal_energy(const QuantumNumbers& qn, const CouplingStrength& xi);

/// Kind-checked entry point; throws UnsupportedPotentialError for Yukawa,
/// where no such empirical expression exists.
EnergyEstimate koksal_energy(PotentialKind kind, const QuantumNumbers& qn,
                             const CouplingStrength& xi);

/// Positive root of koksal_energy(qn, xi) = 0, the empirical estimate of the
/// critical coupling. Bracketing starts at xi = (2n+l+3/2)^2/2 (where the
/// formula is positive) and doubles upward; bisection to 1e-8 on xi followed
/// by a secant polish on the residual.
CouplingStrength koksal_critical(const QuantumNumbers& qn);

namespace detail {

template <class Real>
Real harmonic_core(int n, int l, Real xi) {
  const Real nu = Real(2 * n + l) + Real(1.5L);
  return -xi + nu * std::sqrt(2 * xi);
}

template <class Real>
Real koksal_core(int n, int l, Real xi) {
  const Real nu = Real(2 * n + l) + Real(1.5L);
  return Real(0.5L) * nu * std::sqrt(2 * xi) -
         xi * std::exp(-Real(0.5L) * nu * std::sqrt(Real(2) / xi));
}

}  // namespace detail

}  // namespace qwell
