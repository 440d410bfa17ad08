#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qwell/model.hpp"

namespace qwell {

struct SolverConfig {
  double r_max = 0.0;  // 0 = choose adaptively
  double h = 1e-3;
  double energy_tol = 1e-10;
  int max_iterations = 200;
};

/// Reduced radial wavefunction u(r) on the grid r_i = (i+1) h, together with
/// node and matching diagnostics. Sign convention u(h) > 0.
struct RadialSolution {
  std::vector<double> r;
  std::vector<double> u;
  int node_count = 0;
  double matching_defect = 0.0;  // log-derivative mismatch at the matching radius
  double energy = 0.0;
};

struct CriticalCouplingRecord {
  PotentialKind kind;
  int l;
  double xi_crit;
  double bracket_width;
};

struct BoundStateResult {
  EnergyEstimate estimate;  // Method::Reference
  RadialSolution solution;
  double discretization_error;  // Richardson step-halving estimate
};

/// Raised when the requested bound state does not exist; carries the
/// bracketing diagnostics in the message.
struct NoBoundStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numerov integration of u'' = [l(l+1)/r^2 + 2V - 2E] u. Outward start
/// u ~ r^{l+1} (with the first-order Coulomb correction for Yukawa), inward
/// start u ~ exp(-sqrt(-2E) r) for E < 0, matched at the outermost classical
/// turning point. For E = 0 only the outward sweep is performed and the
/// matching defect is NaN.
RadialSolution integrate_radial(PotentialKind kind, const CouplingStrength& xi, int l,
                                double energy, const SolverConfig& cfg = {});

/// Shooting eigensolver: node-count bisection isolates the n-th state, then
/// the matching defect is refined to cfg.energy_tol.
BoundStateResult solve_bound_state(PotentialKind kind, const CouplingStrength& xi,
                                   const QuantumNumbers& qn, const SolverConfig& cfg = {});

/// Number of negative-energy states in the l channel, from the node count of
/// the zero-energy outward solution (with a tail log-derivative check for a
/// node just beyond the cutoff).
int count_bound_states(PotentialKind kind, const CouplingStrength& xi, int l,
                       const SolverConfig& cfg = {});

/// Bisection on xi of "the zero-energy solution acquires an interior node",
/// to bracket width 1e-6.
CriticalCouplingRecord critical_coupling_reference(PotentialKind kind, int l,
                                                   const SolverConfig& cfg = {});

}  // namespace qwell
