#include "qwell/empirical.hpp"

#include <cmath>
#include <stdexcept>

namespace qwell {

EnergyEstimate harmonic_zeroth_energy(const QuantumNumbers& qn, const CouplingStrength& xi) {
  return make_energy_estimate(Method::HarmonicZeroth,
                              detail::harmonic_core(qn.n, qn.l, xi.value()), xi.value());
}

EnergyEstimate koksal_energy(const QuantumNumbers& qn, const CouplingStrength& xi) {
  return make_energy_estimate(Method::Koksal, detail::koksal_core(qn.n, qn.l, xi.value()),
                              xi.value());
}

EnergyEstimate koksal_energy(PotentialKind kind, const QuantumNumbers& qn,
                             const CouplingStrength& xi) {
  if (kind != PotentialKind::Gaussian)
    throw UnsupportedPotentialError(
        "the Koksal empirical formula is defined only for the Gaussian well");
  return koksal_energy(qn, xi);
}

CouplingStrength koksal_critical(const QuantumNumbers& qn) {
  const auto value = [&](double xi) { return detail::koksal_core(qn.n, qn.l, xi); };

  const double nu = 2 * qn.n + qn.l + 1.5;
  double lo = nu * nu / 2.0;  // E'(lo) = (nu^2/2)(1 - 1/e) > 0
  double hi = lo;
  for (int i = 0; i < 200 && value(hi) > 0.0; ++i) {
    lo = hi;
    hi *= 2.0;
  }
  if (value(hi) > 0.0)
    throw std::runtime_error("koksal_critical: failed to bracket the root");

  while (hi - lo > 1e-8) {
    const double mid = 0.5 * (lo + hi);
    (value(mid) > 0.0 ? lo : hi) = mid;
  }

  // Secant polish on the residual itself.
  double a = lo, b = hi, fa = value(a), fb = value(b);
  for (int i = 0; i < 50 && std::fabs(fb) > 1e-10; ++i) {
    if (fa == fb) break;
    const double c = b - fb * (b - a) / (fb - fa);
    a = b;
    fa = fb;
    b = c;
    fb = value(b);
  }
  return CouplingStrength(b);
}

}  // namespace qwell
