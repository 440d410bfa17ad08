#include "qwell/variational.hpp"

#include <cmath>
#include <stdexcept>

namespace qwell {

namespace {

void check_inputs(int l, double a) {
  if (l < 0) throw std::domain_error("angular momentum must be non-negative");
  if (!(a > 0.0) || !std::isfinite(a))
    throw std::domain_error("variational parameter must be positive and finite");
}

// d log(xi)/da along the Yukawa locus; its unique zero is the xi-minimizing a.
double yukawa_log_xi_derivative(int l, double a) {
  return 2.0 * (2 * l + 3) / (2 * a + 1) - (2 * l + 1) / a - 2.0 / (2 * a + 2 * l + 3);
}

}  // namespace

LocusPoint stationary_locus(PotentialKind kind, int l, double a) {
  check_inputs(l, a);
  return LocusPoint{detail::locus_xi(kind, l, a), detail::locus_energy(kind, l, a)};
}

double energy_functional(PotentialKind kind, int l, double xi, double a) {
  check_inputs(l, a);
  if (!(xi > 0.0)) throw std::domain_error("coupling strength must be positive");
  return detail::functional_core(kind, l, xi, a);
}

double locus_minimum_a(PotentialKind kind, int l) {
  if (l < 0) throw std::domain_error("angular momentum must be non-negative");
  if (kind == PotentialKind::Gaussian) return (2 * l + 1) / 8.0;
  double lo = 1e-9, hi = 1.0;
  while (yukawa_log_xi_derivative(l, hi) <= 0.0) hi *= 2.0;
  for (int i = 0; i < 200 && (hi - lo) > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (yukawa_log_xi_derivative(l, mid) <= 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double bound_threshold_a(PotentialKind kind, int l) {
  if (l < 0) throw std::domain_error("angular momentum must be non-negative");
  return kind == PotentialKind::Gaussian ? (2 * l + 1) / 4.0 : (2 * l + 1) / 2.0;
}

VariationalResult solve_variational(PotentialKind kind, int l, const CouplingStrength& xi) {
  if (l < 0) throw std::domain_error("angular momentum must be non-negative");
  const double target = xi.value();
  const double a_min = locus_minimum_a(kind, l);
  const double xi_min = detail::locus_xi(kind, l, a_min);
  if (target < xi_min) return VariationalResult{std::nullopt, 0.0, false};

  // xi(a) is strictly increasing for a >= a_min; plain bisection.
  double lo = a_min;
  double hi = std::max(2.0 * a_min, 1.0);
  while (detail::locus_xi(kind, l, hi) < target) hi *= 2.0;
  for (int i = 0; i < 200 && (hi - lo) > 1e-14 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (detail::locus_xi(kind, l, mid) < target ? lo : hi) = mid;
  }
  const double a = 0.5 * (lo + hi);
  const double energy = detail::locus_energy(kind, l, a);
  VariationalStationaryPoint point{a, target, energy, Branch::LocalMin};
  return VariationalResult{point, detail::functional_core(kind, l, target, a),
                           energy < 0.0};
}

CouplingStrength critical_coupling_closed_form(PotentialKind kind, int l) {
  if (l < 0) throw std::domain_error("angular momentum must be non-negative");
  return CouplingStrength(detail::critical_core<double>(kind, l));
}

}  // namespace qwell
