#pragma once

#include <cmath>
#include <optional>

#include "qwell/model.hpp"

namespace qwell {

enum class Branch { LocalMax, LocalMin };

/// One stationary point of the Rayleigh quotient of the trial function
/// r^{l+1} e^{-a r^2} (Gaussian) or r^{l+1} e^{-a r} (Yukawa).
struct VariationalStationaryPoint {
  double a;
  double xi;
  double energy;
  Branch branch;
};

struct LocusPoint {
  double xi;
  double energy;
};

/// The parametric stationarity locus a -> (xi, E'). Both kinds, ground radial
/// state, any l.
LocusPoint stationary_locus(PotentialKind kind, int l, double a);

/// Rayleigh quotient <H> of the trial function at arbitrary (xi, a); an upper
/// bound on the lowest energy of that l channel.
double energy_functional(PotentialKind kind, int l, double xi, double a);

/// The a value minimizing xi along the locus; the energy-minimizing branch is
/// a >= this. (2l+1)/8 for Gaussian in closed form, solved numerically for
/// Yukawa.
double locus_minimum_a(PotentialKind kind, int l);

/// The a at which the variational energy crosses zero: (2l+1)/4 (Gaussian) or
/// (2l+1)/2 (Yukawa). Feeding it to stationary_locus gives the closed-form
/// critical coupling.
double bound_threshold_a(PotentialKind kind, int l);

struct VariationalResult {
  std::optional<VariationalStationaryPoint> point;  // absent below the locus minimum
  double functional_value;  // independent <H> evaluation at the returned a (0 when absent)
  bool bound;
};

/// Solves the locus for the given xi on the energy-minimizing (larger-a)
/// branch. If xi lies below the minimum of the locus no stationary point
/// exists and an unbound result with no point is returned.
VariationalResult solve_variational(PotentialKind kind, int l, const CouplingStrength& xi);

/// xi_crit = (2l+3)^{(2l+5)/2} / (8 (2l+1)^{(2l+1)/2}) for Gaussian,
/// 2^{2l} (l+1)^{2l+3} / (2l+1)^{2l+1} for Yukawa.
CouplingStrength critical_coupling_closed_form(PotentialKind kind, int l);

namespace detail {

template <class Real>
Real locus_xi(PotentialKind kind, int l, Real a) {
  if (kind == PotentialKind::Gaussian)
    return std::pow(2 * a + 1, Real(2 * l + 5) / 2) /
           (std::pow(Real(2), Real(l) - Real(0.5L)) * 4 * std::pow(a, Real(2 * l + 1) / 2));
  return Real(l + 1) * std::pow(2 * a + 1, Real(2 * l + 3)) /
         (std::pow(Real(2), Real(2 * (l + 1))) * std::pow(a, Real(2 * l + 1)) *
          (2 * a + 2 * l + 3));
}

template <class Real>
Real locus_energy(PotentialKind kind, int l, Real a) {
  if (kind == PotentialKind::Gaussian) return a * (2 * l + 1 - 4 * a) / 2;
  return a * a * (2 * l + 1 - 2 * a) / (2 * (2 * a + 2 * l + 3));
}

template <class Real>
Real functional_core(PotentialKind kind, int l, Real xi, Real a) {
  if (kind == PotentialKind::Gaussian)
    return a * (2 * l + 3) / 2 - xi * std::pow(2 * a / (2 * a + 1), Real(2 * l + 3) / 2);
  return a * a / 2 - xi * std::pow(2 * a, Real(2 * l + 3)) /
                         (Real(2 * l + 2) * std::pow(2 * a + 1, Real(2 * l + 2)));
}

/// Analytic d<H>/da; vanishing on the locus is what ties the functional to
/// the parametric equations.
template <class Real>
Real functional_derivative(PotentialKind kind, int l, Real xi, Real a) {
  if (kind == PotentialKind::Gaussian)
    return Real(2 * l + 3) / 2 *
           (1 - xi * 2 * std::pow(2 * a / (2 * a + 1), Real(2 * l + 1) / 2) /
                    ((2 * a + 1) * (2 * a + 1)));
  return a - xi * 2 * std::pow(2 * a, Real(2 * l + 2)) * (2 * a + 2 * l + 3) /
                 (Real(2 * l + 2) * std::pow(2 * a + 1, Real(2 * l + 3)));
}

template <class Real>
Real critical_core(PotentialKind kind, int l) {
  if (kind == PotentialKind::Gaussian)
    return std::pow(Real(2 * l + 3), Real(2 * l + 5) / 2) /
           (8 * std::pow(Real(2 * l + 1), Real(2 * l + 1) / 2));
  return std::pow(Real(2), Real(2 * l)) * std::pow(Real(l + 1), Real(2 * l + 3)) /
         std::pow(Real(2 * l + 1), Real(2 * l + 1));
}

}  // namespace detail

}  // namespace qwell
