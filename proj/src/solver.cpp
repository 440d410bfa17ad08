#include "qwell/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace qwell {

namespace {

struct Problem {
  PotentialKind kind;
  double xi;
  int l;
};

// u'' = f(r) u
inline double f_value(const Problem& p, double energy, double r) {
  return static_cast<double>(p.l) * (p.l + 1) / (r * r) +
         2.0 * detail::potential_core(p.kind, p.xi, r) - 2.0 * energy;
}

// Series start near the origin. Gaussian: u = r^{l+1}(1 + b r^2) with
// b = (V(0)-E)/(2l+3). Yukawa: u = r^{l+1}(1 + c1 r + c2 r^2) with the
// Coulomb-like c1 = -xi/(l+1).
double series_start(const Problem& p, double energy, double r) {
  const double rl = std::pow(r, p.l + 1);
  if (p.kind == PotentialKind::Gaussian) {
    const double b = (-p.xi - energy) / (2 * p.l + 3);
    return rl * (1.0 + b * r * r);
  }
  const double c1 = -p.xi / (p.l + 1);
  const double c2 =
      (2.0 * p.xi - 2.0 * energy + 2.0 * p.xi * p.xi / (p.l + 1)) / (4 * p.l + 6);
  return rl * (1.0 + c1 * r + c2 * r * r);
}

constexpr double kRescaleThreshold = 1e200;
constexpr int kRescaleInterval = 500;

// First usable grid index for the outward sweep. Near the centrifugal
// singularity h^2 f/12 ~ l(l+1)/12 exceeds 1 for l >= 3 and the recurrence
// is unstable, so integration starts where that factor is small and the
// series covers the skipped points.
int outward_start_index(int l, double h) {
  (void)h;
  const double r0_over_h = std::sqrt(l * (l + 1) / 8.0);
  return std::max(0, static_cast<int>(std::ceil(r0_over_h)) - 1);
}

// Numerov sweep over grid indices [i_begin, i_end] (either direction), seeds
// already placed at the first two indices of the sweep. r_i = (i+1)*h.
// Renormalizes periodically to avoid overflow; all stored values seen so far
// are rescaled with the running buffer so the stored shape stays consistent.
void numerov_sweep(const Problem& p, double energy, double h, std::vector<double>& u,
                   int i_begin, int i_end) {
  const int dir = i_end >= i_begin ? 1 : -1;
  const double h2 = h * h;
  const double c = h2 / 12.0;

  int i_prev2 = i_begin - 2 * dir;
  int i_prev1 = i_begin - dir;
  double f_prev2 = f_value(p, energy, (i_prev2 + 1) * h);
  double f_prev1 = f_value(p, energy, (i_prev1 + 1) * h);
  double w_prev2 = (1.0 - c * f_prev2) * u[i_prev2];
  double w_prev1 = (1.0 - c * f_prev1) * u[i_prev1];

  int steps = 0;
  for (int i = i_begin; i != i_end + dir; i += dir) {
    const double fi = f_value(p, energy, (i + 1) * h);
    const double w = 2.0 * w_prev1 - w_prev2 + h2 * f_prev1 * u[i - dir];
    u[i] = w / (1.0 - c * fi);
    w_prev2 = w_prev1;
    w_prev1 = w;
    f_prev1 = fi;
    if (++steps % kRescaleInterval == 0 && std::fabs(u[i]) > kRescaleThreshold) {
      const double scale = std::fabs(u[i]);
      for (int j = i_begin - 2 * dir; j != i + dir; j += dir) u[j] /= scale;
      w_prev2 /= scale;
      w_prev1 /= scale;
    }
    if (!std::isfinite(u[i]))
      throw std::runtime_error("numerov_sweep: non-finite value during integration");
  }
}

// Outward-only integration counting interior sign changes; no storage.
int outward_nodes(const Problem& p, double energy, double h, int n_grid) {
  const double h2 = h * h;
  const double c = h2 / 12.0;
  const int i0 = outward_start_index(p.l, h);
  double u_prev2 = series_start(p, energy, (i0 + 1) * h);
  double u_prev1 = series_start(p, energy, (i0 + 2) * h);
  double f_prev2 = f_value(p, energy, (i0 + 1) * h);
  double f_prev1 = f_value(p, energy, (i0 + 2) * h);
  double w_prev2 = (1.0 - c * f_prev2) * u_prev2;
  double w_prev1 = (1.0 - c * f_prev1) * u_prev1;

  int nodes = (u_prev2 > 0) != (u_prev1 > 0) ? 1 : 0;
  for (int i = i0 + 2; i < n_grid; ++i) {
    const double fi = f_value(p, energy, (i + 1) * h);
    const double w = 2.0 * w_prev1 - w_prev2 + h2 * f_prev1 * u_prev1;
    const double ui = w / (1.0 - c * fi);
    if ((ui > 0) != (u_prev1 > 0) && ui != 0.0) ++nodes;
    u_prev2 = u_prev1;
    u_prev1 = ui;
    w_prev2 = w_prev1;
    w_prev1 = w;
    f_prev1 = fi;
    if (i % kRescaleInterval == 0 && std::fabs(ui) > kRescaleThreshold) {
      u_prev2 /= std::fabs(ui);
      w_prev2 /= std::fabs(ui);
      w_prev1 /= std::fabs(ui);
      u_prev1 = u_prev1 < 0 ? -1.0 : 1.0;
    }
  }
  return nodes;
}

struct ZeroEnergyScan {
  int nodes;
  double r_log_derivative;  // r u'/u at the cutoff
};

ZeroEnergyScan zero_energy_scan(const Problem& p, double h, int n_grid) {
  std::vector<double> u(n_grid);
  const int i0 = outward_start_index(p.l, h);
  for (int i = 0; i <= i0 + 1; ++i) u[i] = series_start(p, 0.0, (i + 1) * h);
  numerov_sweep(p, 0.0, h, u, i0 + 2, n_grid - 1);
  int nodes = 0;
  for (int i = i0 + 1; i < n_grid; ++i)
    if ((u[i] > 0) != (u[i - 1] > 0) && u[i] != 0.0) ++nodes;
  const int m = n_grid - 2;
  const double du = (u[m + 1] - u[m - 1]) / (2 * h);
  const double rld = (m + 1) * h * du / u[m];
  return ZeroEnergyScan{nodes, rld};
}

// Bound-state count from the zero-energy solution: interior nodes, plus one
// if the tail log-derivative lies below the decaying power r^{-l}, which
// marks a node just beyond the cutoff.
int zero_energy_count(const Problem& p, double h, int n_grid) {
  const ZeroEnergyScan scan = zero_energy_scan(p, h, n_grid);
  return scan.nodes + (scan.r_log_derivative < -static_cast<double>(p.l) - 1e-9 ? 1 : 0);
}

double default_zero_energy_r_max(PotentialKind kind) {
  return kind == PotentialKind::Gaussian ? 40.0 : 60.0;
}

// Outermost classical turning point of the effective potential at the given
// energy; 0 if there is no classically allowed region.
double outer_turning_point(const Problem& p, double energy) {
  const double scan_max = 60.0;
  const double dr = 0.02;
  for (double r = scan_max; r > dr / 2; r -= dr)
    if (f_value(p, energy, r) < 0.0) return r;
  return 0.0;
}

double default_r_max(const Problem& p, double energy) {
  if (energy == 0.0) return default_zero_energy_r_max(p.kind);
  const double from_tail = 10.0 / std::sqrt(-2.0 * energy);
  const double rm = std::max({12.0, 3.0 * outer_turning_point(p, energy), from_tail});
  return std::min(rm, 200.0);
}

int grid_size(double r_max, double h) {
  return std::max(32, static_cast<int>(std::ceil(r_max / h)));
}

RadialSolution integrate_impl(const Problem& p, double energy, double h, int n_grid) {
  RadialSolution sol;
  sol.energy = energy;
  sol.r.resize(n_grid);
  for (int i = 0; i < n_grid; ++i) sol.r[i] = (i + 1) * h;

  const int i0 = outward_start_index(p.l, h);
  if (energy == 0.0) {
    sol.u.assign(n_grid, 0.0);
    for (int i = 0; i <= i0 + 1; ++i) sol.u[i] = series_start(p, 0.0, (i + 1) * h);
    numerov_sweep(p, 0.0, h, sol.u, i0 + 2, n_grid - 1);
    sol.matching_defect = std::numeric_limits<double>::quiet_NaN();
  } else {
    // Matching index: outermost grid point inside the classically allowed
    // region, clamped away from both ends.
    int match = n_grid / 2;
    for (int i = n_grid - 5; i >= 2; --i)
      if (f_value(p, energy, (i + 1) * h) < 0.0) {
        match = i;
        break;
      }
    match = std::clamp(match, 3, n_grid - 5);

    match = std::max(match, i0 + 3);
    std::vector<double> out_u(n_grid, 0.0), in_u(n_grid, 0.0);
    for (int i = 0; i <= i0 + 1; ++i) out_u[i] = series_start(p, energy, (i + 1) * h);
    numerov_sweep(p, energy, h, out_u, i0 + 2, match + 2);

    const double kappa = std::sqrt(-2.0 * energy);
    in_u[n_grid - 1] = 1.0;
    in_u[n_grid - 2] = std::exp(kappa * h);
    numerov_sweep(p, energy, h, in_u, n_grid - 3, match - 2);

    // Avoid matching on a zero of either branch.
    int m = match;
    for (int cand : {match, match + 1, match - 1})
      if (out_u[cand] != 0.0 && in_u[cand] != 0.0) {
        m = cand;
        break;
      }

    const double d_out = (out_u[m + 1] - out_u[m - 1]) / (2 * h * out_u[m]);
    const double d_in = (in_u[m + 1] - in_u[m - 1]) / (2 * h * in_u[m]);
    sol.matching_defect = d_out - d_in;

    sol.u.assign(n_grid, 0.0);
    const double scale = out_u[m] / in_u[m];
    for (int i = 0; i <= m; ++i) sol.u[i] = out_u[i];
    for (int i = m + 1; i < n_grid; ++i) sol.u[i] = in_u[i] * scale;
  }

  if (sol.u[0] < 0.0)
    for (double& v : sol.u) v = -v;
  const double peak = std::fabs(*std::max_element(
      sol.u.begin(), sol.u.end(), [](double a, double b) { return std::fabs(a) < std::fabs(b); }));
  if (peak > 0.0)
    for (double& v : sol.u) v /= peak;

  sol.node_count = 0;
  for (int i = 1; i < n_grid; ++i)
    if ((sol.u[i] > 0) != (sol.u[i - 1] > 0) && sol.u[i] != 0.0) ++sol.node_count;
  return sol;
}

void validate_config(const SolverConfig& cfg) {
  if (!(cfg.h > 0.0) || !(cfg.energy_tol > 0.0) || cfg.max_iterations <= 0)
    throw std::domain_error("invalid solver configuration");
  if (cfg.r_max != 0.0 && cfg.r_max <= cfg.h)
    throw std::domain_error("r_max must exceed the grid step");
}

// The Yukawa core behaves like a Coulomb well of Bohr radius 1/xi; a uniform
// grid must resolve that scale or the eigenvalue converges far slower than
// O(h^4). Cap the requested step accordingly.
double effective_step(const Problem& p, double h) {
  if (p.kind != PotentialKind::Yukawa) return h;
  return std::max(1e-6, std::min(h, 5e-3 / p.xi));
}

double ground_energy_lower_bound(const Problem& p) {
  if (p.kind == PotentialKind::Gaussian) return -p.xi;
  // e^{-r} < 1, so the Yukawa well is shallower than the Coulomb well with
  // ground energy -xi^2/2.
  return -p.xi * p.xi / 2.0 * (1.0 + 1e-9) - 1e-9;
}

}  // namespace

RadialSolution integrate_radial(PotentialKind kind, const CouplingStrength& xi, int l,
                                double energy, const SolverConfig& cfg) {
  validate_config(cfg);
  if (l < 0) throw std::domain_error("angular momentum must be non-negative");
  if (energy > 0.0) throw std::domain_error("integrate_radial requires E <= 0");
  const Problem p{kind, xi.value(), l};
  const double r_max = cfg.r_max > 0.0 ? cfg.r_max : default_r_max(p, energy);
  return integrate_impl(p, energy, cfg.h, grid_size(r_max, cfg.h));
}

int count_bound_states(PotentialKind kind, const CouplingStrength& xi, int l,
                       const SolverConfig& cfg) {
  validate_config(cfg);
  if (l < 0) throw std::domain_error("angular momentum must be non-negative");
  const Problem p{kind, xi.value(), l};
  const double r_max = cfg.r_max > 0.0 ? cfg.r_max : default_zero_energy_r_max(kind);
  return zero_energy_count(p, cfg.h, grid_size(r_max, cfg.h));
}

BoundStateResult solve_bound_state(PotentialKind kind, const CouplingStrength& xi,
                                   const QuantumNumbers& qn, const SolverConfig& cfg) {
  validate_config(cfg);
  const Problem p{kind, xi.value(), qn.l};
  const int n = qn.n;

  const int available = count_bound_states(kind, xi, qn.l, cfg);
  if (available <= n) {
    std::ostringstream msg;
    msg << "no bound state with n=" << n << " for " << to_string(kind) << " xi=" << p.xi
        << " l=" << qn.l << " (channel supports " << available << " state(s))";
    throw NoBoundStateError(msg.str());
  }

  const double e_bottom = ground_energy_lower_bound(p);
  const double e_top = -1e-13 * std::max(1.0, p.xi);

  // Coarse pass: locate the n -> n+1 node-count transition on a cheap grid to
  // pick r_max and seed the fine bracket.
  const double h_coarse = std::max(cfg.h, 4e-3);
  const double r_coarse = cfg.r_max > 0.0 ? cfg.r_max : default_zero_energy_r_max(kind);
  const int n_coarse = grid_size(r_coarse, h_coarse);
  const auto nodes_coarse = [&](double e) { return outward_nodes(p, e, h_coarse, n_coarse); };

  if (nodes_coarse(e_top) < n + 1) {
    std::ostringstream msg;
    msg << "state n=" << n << " too close to threshold for " << to_string(kind)
        << " xi=" << p.xi << " l=" << qn.l;
    throw NoBoundStateError(msg.str());
  }
  double lo = e_bottom, hi = e_top;
  for (int i = 0; i < 60 && hi - lo > std::max(1e-6, 1e-6 * std::fabs(lo)); ++i) {
    const double mid = 0.5 * (lo + hi);
    (nodes_coarse(mid) >= n + 1 ? hi : lo) = mid;
  }
  const double e_est = 0.5 * (lo + hi);

  const double r_max = cfg.r_max > 0.0 ? cfg.r_max : default_r_max(p, e_est);

  const auto solve_at = [&](double h) {
    const int n_grid = grid_size(r_max, h);
    const auto nodes = [&](double e) { return outward_nodes(p, e, h, n_grid); };
    const auto defect = [&](double e) {
      return integrate_impl(p, e, h, n_grid).matching_defect;
    };

    // Re-establish the bracket on the fine grid.
    const double pad = std::max(1e-3, 1e-3 * std::fabs(e_est));
    double a = std::max(e_bottom, lo - pad);
    double b = std::min(e_top, hi + pad);
    while (nodes(a) > n && a > e_bottom) a = std::max(e_bottom, a - (b - a));
    while (nodes(b) < n + 1 && b < e_top) b = std::min(e_top, b + (b - a));
    if (nodes(a) > n || nodes(b) < n + 1)
      throw std::runtime_error("solve_bound_state: lost the node bracket on refinement");

    // Node-count bisection carries most of the convergence.
    const double stop = std::max(cfg.energy_tol, 5e-13 * std::fabs(e_est));
    int iter = 0;
    while (b - a > stop && iter++ < cfg.max_iterations) {
      const double mid = 0.5 * (a + b);
      (nodes(mid) >= n + 1 ? b : a) = mid;
    }

    // Secant refinement on the matching defect inside the final bracket.
    double e0 = a, e1 = b;
    double d0 = defect(e0), d1 = defect(e1);
    double best = 0.5 * (a + b);
    if (std::isfinite(d0) && std::isfinite(d1) && (d0 > 0) != (d1 > 0)) {
      for (int i = 0; i < 12; ++i) {
        double e2 = d1 != d0 ? e1 - d1 * (e1 - e0) / (d1 - d0) : 0.5 * (a + b);
        if (!(e2 > a) || !(e2 < b)) e2 = 0.5 * (a + b);
        const double d2 = defect(e2);
        if (!std::isfinite(d2)) break;
        ((d2 > 0) == (d0 > 0) ? a : b) = e2;
        e0 = e1;
        d0 = d1;
        e1 = e2;
        d1 = d2;
        best = e2;
        if (std::fabs(b - a) < 0.5 * cfg.energy_tol || d2 == 0.0) break;
      }
    }
    return best;
  };

  const double h_fine = effective_step(p, cfg.h);
  const double e_final = solve_at(h_fine);
  const double e_half = solve_at(h_fine / 2.0);
  const double disc_err = std::fabs(e_final - e_half) / 15.0;

  RadialSolution sol = integrate_impl(p, e_final, h_fine, grid_size(r_max, h_fine));
  return BoundStateResult{make_energy_estimate(Method::Reference, e_final, p.xi), std::move(sol),
                          disc_err};
}

CriticalCouplingRecord critical_coupling_reference(PotentialKind kind, int l,
                                                   const SolverConfig& cfg) {
  validate_config(cfg);
  if (l < 0) throw std::domain_error("angular momentum must be non-negative");
  const double r_max = cfg.r_max > 0.0 ? cfg.r_max : default_zero_energy_r_max(kind);
  const int n_grid = grid_size(r_max, cfg.h);
  const auto bound_appears = [&](double xi) {
    return zero_energy_count(Problem{kind, xi, l}, cfg.h, n_grid) >= 1;
  };

  double lo = 1e-6;
  if (bound_appears(lo))
    throw std::runtime_error("critical_coupling_reference: lower bracket already bound");
  double hi = 0.1;
  while (!bound_appears(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6)
      throw std::runtime_error("critical_coupling_reference: no bracket below xi = 1e6");
  }
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (bound_appears(mid) ? hi : lo) = mid;
  }
  return CriticalCouplingRecord{kind, l, 0.5 * (lo + hi), hi - lo};
}

}  // namespace qwell
