#include "qwell/model.hpp"

#include <cmath>

namespace qwell {

std::string to_string(PotentialKind kind) {
  return kind == PotentialKind::Gaussian ? "gaussian" : "yukawa";
}

PotentialKind potential_kind_from_string(const std::string& name) {
  if (name == "gaussian") return PotentialKind::Gaussian;
  if (name == "yukawa") return PotentialKind::Yukawa;
  throw std::domain_error("unknown potential kind: " + name);
}

std::string to_string(Method method) {
  switch (method) {
    case Method::HarmonicZeroth: return "harmonic";
    case Method::Koksal: return "koksal";
    case Method::Variational: return "variational";
    case Method::Reference: return "reference";
  }
  throw std::logic_error("unreachable");
}

CouplingStrength::CouplingStrength(double xi) : xi_(xi) {
  if (!std::isfinite(xi) || xi <= 0.0)
    throw std::domain_error("coupling strength must be finite and positive");
}

QuantumNumbers::QuantumNumbers(int n_radial, int l_angular) : n(n_radial), l(l_angular) {
  if (n < 0 || l < 0) throw std::domain_error("quantum numbers must be non-negative");
}

EnergyEstimate make_energy_estimate(Method method, double value, double xi) {
  return EnergyEstimate{method, value, value > -xi && value < 0.0};
}

Reduction reduce_to_dimensionless(const DimensionalParameters& p, PotentialKind kind) {
  if (!(p.mass > 0.0) || !(p.depth > 0.0) || !(p.width > 0.0) || !(p.hbar > 0.0))
    throw std::domain_error("dimensional parameters must be positive");
  // L = width^{-1/2} (Gaussian) or L = width (Yukawa); xi = m*depth*L^2/hbar^2.
  const double length_sq =
      kind == PotentialKind::Gaussian ? 1.0 / p.width : p.width * p.width;
  const double xi = p.mass * p.depth * length_sq / (p.hbar * p.hbar);
  return Reduction{CouplingStrength(xi), p.depth / xi};
}

double potential_value(PotentialKind kind, const CouplingStrength& xi, double r) {
  if (r < 0.0) throw std::domain_error("radius must be non-negative");
  if (kind == PotentialKind::Yukawa && r == 0.0)
    throw std::domain_error("Yukawa potential is singular at r = 0");
  return detail::potential_core(kind, xi.value(), r);
}

double effective_radial_potential(PotentialKind kind, const CouplingStrength& xi, int l,
                                  double r) {
  if (l < 0) throw std::domain_error("angular momentum must be non-negative");
  if (r <= 0.0) throw std::domain_error("radius must be positive");
  return detail::effective_radial_core(kind, xi.value(), l, r);
}

}  // namespace qwell
