#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace qwell {

enum class PotentialKind { Gaussian, Yukawa };

std::string to_string(PotentialKind kind);
PotentialKind potential_kind_from_string(const std::string& name);

/// Thrown when a method is asked to handle a potential it is not defined for
/// (the empirical formula exists only for the Gaussian well).
struct UnsupportedPotentialError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Physical well parameters at the API boundary. Internally everything is
/// dimensionless; see reduce_to_dimensionless.
///
/// `width` is the Gaussian width parameter (inverse length squared) or, for
/// the Yukawa well, the screening length L. The Yukawa dimensional form used
/// here is V(r) = -depth * (L/r) * exp(-r/L), so that both kinds reduce with
/// the same length unit L (L = width^{-1/2} for Gaussian, L = width for
/// Yukawa).
struct DimensionalParameters {
  double mass;
  double depth;
  double width;
  double hbar = 1.0;
};

/// The single dimensionless parameter xi = m*depth*L^2/hbar^2 controlling the
/// whole spectrum. Strictly positive and finite.
class CouplingStrength {
 public:
  explicit CouplingStrength(double xi);
  double value() const noexcept { return xi_; }

 private:
  double xi_;
};

struct QuantumNumbers {
  QuantumNumbers(int n_radial, int l_angular);
  int n;
  int l;
};

enum class Method { HarmonicZeroth, Koksal, Variational, Reference };

std::string to_string(Method method);

/// A dimensionless energy tagged with the method that produced it. `bound`
/// is true iff the value lies in (-xi, 0).
struct EnergyEstimate {
  Method method;
  double value;
  bool bound;
};

EnergyEstimate make_energy_estimate(Method method, double value, double xi);

struct Reduction {
  CouplingStrength xi;
  double energy_scale;  // dimensional E = energy_scale * E'
};

Reduction reduce_to_dimensionless(const DimensionalParameters& p, PotentialKind kind);

inline double restore_dimensional(double dimensionless_energy, const Reduction& red) {
  return red.energy_scale * dimensionless_energy;
}

double potential_value(PotentialKind kind, const CouplingStrength& xi, double r);

/// V(r) + l(l+1)/(2 r^2); requires r > 0.
double effective_radial_potential(PotentialKind kind, const CouplingStrength& xi, int l,
                                  double r);

namespace detail {

template <class Real>
Real potential_core(PotentialKind kind, Real xi, Real r) {
  if (kind == PotentialKind::Gaussian) return -xi * std::exp(-r * r);
  return -xi * std::exp(-r) / r;
}

template <class Real>
Real effective_radial_core(PotentialKind kind, Real xi, int l, Real r) {
  return potential_core(kind, xi, r) + Real(l) * Real(l + 1) / (2 * r * r);
}

}  // namespace detail

}  // namespace qwell
