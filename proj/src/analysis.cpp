#include "qwell/analysis.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qwell/empirical.hpp"
#include "qwell/variational.hpp"

namespace qwell {

namespace {

void attach_errors(ComparisonRow& row) {
  if (!row.e_reference) return;
  const double ref = *row.e_reference;
  if (row.e_koksal) {
    row.abs_err_koksal = std::fabs(*row.e_koksal - ref);
    if (ref != 0.0) row.rel_err_koksal = *row.abs_err_koksal / std::fabs(ref);
  }
  if (row.e_variational) {
    row.abs_err_variational = std::fabs(*row.e_variational - ref);
    if (ref != 0.0) row.rel_err_variational = *row.abs_err_variational / std::fabs(ref);
  }
}

void accumulate(MethodErrorStats& stats, const std::optional<double>& abs_err,
                const std::optional<double>& rel_err) {
  if (!abs_err) return;
  ++stats.count;
  stats.max_abs = std::max(stats.max_abs, *abs_err);
  stats.mean_abs += *abs_err;
  if (rel_err) {
    stats.max_rel = std::max(stats.max_rel.value_or(0.0), *rel_err);
    stats.mean_rel = stats.mean_rel.value_or(0.0) + *rel_err;
  }
}

void finalize(MethodErrorStats& stats, int rel_count) {
  if (stats.count > 0) stats.mean_abs /= stats.count;
  if (stats.mean_rel && rel_count > 0) *stats.mean_rel /= rel_count;
}

}  // namespace

CriticalRow::CriticalRow(PotentialKind kind_, int l_, std::optional<double> xi_koksal_,
                         double xi_variational_, double xi_reference_)
    : kind(kind_),
      l(l_),
      xi_koksal(xi_koksal_),
      xi_variational(xi_variational_),
      xi_reference(xi_reference_) {
  if (xi_variational < xi_reference)
    throw std::logic_error("variational critical coupling below the reference value");
}

ComparisonRow comparison_row(PotentialKind kind, const CouplingStrength& xi,
                             const QuantumNumbers& qn, const SolverConfig& cfg) {
  ComparisonRow row{};
  row.kind = kind;
  row.xi = xi.value();
  row.n = qn.n;
  row.l = qn.l;
  if (kind == PotentialKind::Gaussian) row.e_koksal = koksal_energy(qn, xi).value;
  if (qn.n == 0) {
    const VariationalResult var = solve_variational(kind, qn.l, xi);
    if (var.point) row.e_variational = var.point->energy;
  }
  try {
    const BoundStateResult ref = solve_bound_state(kind, xi, qn, cfg);
    row.e_reference = ref.estimate.value;
    row.reference_error_estimate = ref.discretization_error;
  } catch (const NoBoundStateError&) {
    row.subcritical = true;
  }
  attach_errors(row);
  return row;
}

ComparisonDataset figure1_data(int l_max, const CouplingStrength& xi,
                               const SolverConfig& cfg) {
  if (l_max < 0) throw std::domain_error("l_max must be non-negative");
  ComparisonDataset ds;
  for (int l = 0; l <= l_max; ++l) {
    ComparisonRow row = comparison_row(PotentialKind::Gaussian, xi, QuantumNumbers(0, l), cfg);
    if (!row.e_reference) {
      std::ostringstream msg;
      msg << "no reference bound state at l=" << l << " for xi=" << xi.value()
          << "; truncating";
      ds.warnings.push_back(msg.str());
      break;
    }
    ds.rows.push_back(std::move(row));
  }
  return ds;
}

ComparisonDataset figure2_data(std::span<const double> xi_values, const SolverConfig& cfg) {
  ComparisonDataset ds;
  for (double xi : xi_values) {
    ComparisonRow row =
        comparison_row(PotentialKind::Gaussian, CouplingStrength(xi), QuantumNumbers(0, 0), cfg);
    if (row.subcritical) {
      std::ostringstream msg;
      msg << "xi=" << xi << " is below the critical coupling; reference omitted";
      ds.warnings.push_back(msg.str());
    }
    ds.rows.push_back(std::move(row));
  }
  return ds;
}

namespace {

CriticalDataset critical_data(PotentialKind kind, int l_max, const SolverConfig& cfg) {
  if (l_max < 0) throw std::domain_error("l_max must be non-negative");
  CriticalDataset ds;
  for (int l = 0; l <= l_max; ++l) {
    std::optional<double> xi_k;
    if (kind == PotentialKind::Gaussian)
      xi_k = koksal_critical(QuantumNumbers(0, l)).value();
    const double xi_var = critical_coupling_closed_form(kind, l).value();
    const double xi_ref = critical_coupling_reference(kind, l, cfg).xi_crit;
    ds.rows.emplace_back(kind, l, xi_k, xi_var, xi_ref);
  }
  return ds;
}

}  // namespace

CriticalDataset figure3_data(int l_max, const SolverConfig& cfg) {
  return critical_data(PotentialKind::Gaussian, l_max, cfg);
}

CriticalDataset figure4_data(int l_max, const SolverConfig& cfg) {
  return critical_data(PotentialKind::Yukawa, l_max, cfg);
}

ErrorSummary error_summary(const std::vector<ComparisonRow>& rows) {
  if (rows.empty()) throw std::domain_error("error_summary requires at least one row");
  ErrorSummary summary;
  int rel_k = 0, rel_v = 0;
  for (const ComparisonRow& row : rows) {
    accumulate(summary.koksal, row.abs_err_koksal, row.rel_err_koksal);
    accumulate(summary.variational, row.abs_err_variational, row.rel_err_variational);
    if (row.rel_err_koksal) ++rel_k;
    if (row.rel_err_variational) ++rel_v;
  }
  finalize(summary.koksal, rel_k);
  finalize(summary.variational, rel_v);
  return summary;
}

}  // namespace qwell
