#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qwell/model.hpp"
#include "qwell/solver.hpp"

namespace qwell {

/// One comparison point: all three methods at fixed (kind, xi, n, l).
/// Errors are present iff both operands are; relative errors use |E_ref| and
/// are absent when the reference vanishes.
struct ComparisonRow {
  PotentialKind kind;
  double xi;
  int n;
  int l;
  std::optional<double> e_koksal;
  std::optional<double> e_variational;
  std::optional<double> e_reference;
  std::optional<double> abs_err_koksal;
  std::optional<double> abs_err_variational;
  std::optional<double> rel_err_koksal;
  std::optional<double> rel_err_variational;
  std::optional<double> reference_error_estimate;  // Richardson step-halving
  bool subcritical = false;
};

/// Critical couplings per l. The variational value is an upper bound on the
/// reference one; construction enforces it.
struct CriticalRow {
  CriticalRow(PotentialKind kind, int l, std::optional<double> xi_koksal,
              double xi_variational, double xi_reference);
  PotentialKind kind;
  int l;
  std::optional<double> xi_koksal;
  double xi_variational;
  double xi_reference;
};

struct ComparisonDataset {
  std::vector<ComparisonRow> rows;
  std::vector<std::string> warnings;
};

struct CriticalDataset {
  std::vector<CriticalRow> rows;
  std::vector<std::string> warnings;
};

/// Gaussian n=0 energies versus l at fixed xi. Truncates (with a warning)
/// at the first l without a reference bound state.
ComparisonDataset figure1_data(int l_max, const CouplingStrength& xi,
                               const SolverConfig& cfg = {});

/// Gaussian ground-state energies over a xi grid; subcritical xi produce
/// warning rows with the reference absent.
ComparisonDataset figure2_data(std::span<const double> xi_values,
                               const SolverConfig& cfg = {});

/// Gaussian critical couplings per l, all three methods.
CriticalDataset figure3_data(int l_max, const SolverConfig& cfg = {});

/// Yukawa critical couplings per l; the empirical method is undefined here.
CriticalDataset figure4_data(int l_max, const SolverConfig& cfg = {});

struct MethodErrorStats {
  double max_abs = 0.0;
  double mean_abs = 0.0;
  std::optional<double> max_rel;
  std::optional<double> mean_rel;
  int count = 0;
};

struct ErrorSummary {
  MethodErrorStats koksal;
  MethodErrorStats variational;
};

ErrorSummary error_summary(const std::vector<ComparisonRow>& rows);

/// Builds a single comparison row; used by the figure generators and the CLI
/// sweep/energy commands. Methods that do not apply (Yukawa Koksal, n>0
/// variational) are left absent.
ComparisonRow comparison_row(PotentialKind kind, const CouplingStrength& xi,
                             const QuantumNumbers& qn, const SolverConfig& cfg = {});

}  // namespace qwell
