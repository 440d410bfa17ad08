#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qwell/analysis.hpp"
#include "qwell/empirical.hpp"
#include "qwell/solver.hpp"
#include "qwell/table.hpp"
#include "qwell/variational.hpp"
#include "qwell/version.hpp"

namespace {

using namespace qwell;

std::string format_sig(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%#.12g", value);
  return buf;
}

std::string solver_comment(const SolverConfig& cfg) {
  std::string r = cfg.r_max > 0.0 ? format_double(cfg.r_max) : std::string("adaptive");
  return "solver: h=" + format_double(cfg.h) + ", energy_tol=" + format_double(cfg.energy_tol) +
         ", r_max=" + r;
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
}

struct CommonOptions {
  std::string potential = "gaussian";
  std::string method = "all";
  double xi = 0.0;
  int n = 0;
  int l = 0;
  SolverConfig cfg;
  std::string format = "csv";
  std::string out;
};

void add_solver_flags(CLI::App* cmd, SolverConfig& cfg) {
  cmd->add_option("--step", cfg.h, "grid step h");
  cmd->add_option("--r-max", cfg.r_max, "integration cutoff (0 = adaptive)");
  cmd->add_option("--tol", cfg.energy_tol, "energy tolerance");
}

void write_plot_script(const std::string& script_path, const std::string& data_path, int id) {
  std::ofstream out(script_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open plot script path: " + script_path);
  const bool energies = id == 1 || id == 2;
  const std::string x = id == 2 ? "2" : (energies ? "4" : "2");
  const std::string y = energies ? "6" : "4";
  const std::string xlabel = id == 2 ? "xi" : "l";
  const std::string ylabel = energies ? "E'" : "xi_crit";
  out << "# gnuplot script for figure " << id << " data\n"
      << "set datafile separator ','\n"
      << "set xlabel '" << xlabel << "'\n"
      << "set ylabel '" << ylabel << "'\n"
      << "set key top left\n"
      << "filter(m) = sprintf(\"<awk -F, '$" << (energies ? 5 : 3) << " == \\\"%s\\\"' "
      << data_path << "\", m)\n"
      << "plot filter('reference') using " << x << ":" << y
      << " with lines lc 'black' title 'reference', \\\n"
      << "     filter('variational') using " << x << ":" << y
      << " with points pt 7 lc 'blue' title 'variational'";
  if (id != 4)
    out << ", \\\n     filter('koksal') using " << x << ":" << y
        << " with points pt 5 lc 'red' title 'empirical'";
  out << "\n";
}

int run_energy(const CommonOptions& opt) {
  const PotentialKind kind = potential_kind_from_string(opt.potential);
  const CouplingStrength xi(opt.xi);
  const QuantumNumbers qn(opt.n, opt.l);
  const bool all = opt.method == "all";
  std::vector<std::pair<std::string, double>> values;
  if (opt.method == "koksal" || (all && kind == PotentialKind::Gaussian))
    values.emplace_back("koksal", koksal_energy(kind, qn, xi).value);
  if (opt.method == "variational" || (all && qn.n == 0)) {
    const VariationalResult var = solve_variational(kind, qn.l, xi);
    if (var.point)
      values.emplace_back("variational", var.point->energy);
    else
      std::cerr << "warning: no variational stationary point at xi=" << opt.xi << "\n";
  }
  if (opt.method == "reference" || all)
    values.emplace_back("reference", solve_bound_state(kind, xi, qn, opt.cfg).estimate.value);
  for (const auto& [name, value] : values) {
    if (all) std::cout << name << " ";
    std::cout << format_sig(value) << "\n";
  }
  return 0;
}

int run_critical(const CommonOptions& opt) {
  const PotentialKind kind = potential_kind_from_string(opt.potential);
  const bool all = opt.method == "all";
  if (opt.method == "koksal" || (all && kind == PotentialKind::Gaussian)) {
    if (all) std::cout << "koksal ";
    std::cout << format_sig(koksal_critical(QuantumNumbers(0, opt.l)).value()) << "\n";
  }
  if (opt.method == "variational" || all) {
    if (all) std::cout << "variational ";
    std::cout << format_sig(critical_coupling_closed_form(kind, opt.l).value()) << "\n";
  }
  if (opt.method == "reference" || all) {
    if (all) std::cout << "reference ";
    std::cout << format_sig(critical_coupling_reference(kind, opt.l, opt.cfg).xi_crit) << "\n";
  }
  return 0;
}

int run_count(const CommonOptions& opt) {
  const PotentialKind kind = potential_kind_from_string(opt.potential);
  std::cout << count_bound_states(kind, CouplingStrength(opt.xi), opt.l, opt.cfg) << "\n";
  return 0;
}

int run_sweep(const CommonOptions& opt, const std::vector<double>& xi_list, int l_max) {
  const PotentialKind kind = potential_kind_from_string(opt.potential);
  std::vector<ComparisonRow> rows;
  std::vector<std::string> comments;
  comments.push_back(std::string("qwell ") + kVersion + " sweep");
  if (!xi_list.empty()) {
    for (double xi : xi_list)
      rows.push_back(
          comparison_row(kind, CouplingStrength(xi), QuantumNumbers(opt.n, opt.l), opt.cfg));
    comments.push_back("grid: xi list (" + std::to_string(xi_list.size()) +
                       " values), n = " + std::to_string(opt.n) +
                       ", l = " + std::to_string(opt.l));
  } else {
    for (int l = 0; l <= l_max; ++l)
      rows.push_back(
          comparison_row(kind, CouplingStrength(opt.xi), QuantumNumbers(opt.n, l), opt.cfg));
    comments.push_back("grid: l = 0.." + std::to_string(l_max) +
                       ", xi = " + format_double(opt.xi) + ", n = " + std::to_string(opt.n));
  }
  for (const ComparisonRow& row : rows)
    if (row.subcritical)
      std::cerr << "warning: no reference bound state at xi=" << row.xi << " l=" << row.l
                << "\n";
  comments.push_back(solver_comment(opt.cfg));
  Table table = to_table(rows);
  table.comments = std::move(comments);
  emit_table(table, output_format_from_string(opt.format), opt.out);
  return 0;
}

int run_figure(const CommonOptions& opt, int id, int l_max, std::vector<double> xi_list,
               const std::string& plot_script) {
  Table table;
  std::vector<std::string> comments;
  comments.push_back(std::string("qwell ") + kVersion + " figure " + std::to_string(id));
  if (id == 1) {
    const double xi = opt.xi > 0.0 ? opt.xi : 200.0;
    ComparisonDataset ds = figure1_data(l_max, CouplingStrength(xi), opt.cfg);
    print_warnings(ds.warnings);
    comments.push_back("grid: l = 0.." + std::to_string(l_max) + ", xi = " + format_double(xi) +
                       ", n = 0");
    table = to_table(ds.rows);
  } else if (id == 2) {
    if (xi_list.empty())
      for (int i = 1; i <= 15; ++i) xi_list.push_back(2.0 * i);
    ComparisonDataset ds = figure2_data(xi_list, opt.cfg);
    print_warnings(ds.warnings);
    comments.push_back("grid: xi list (" + std::to_string(xi_list.size()) + " values), n = l = 0");
    table = to_table(ds.rows);
  } else {
    CriticalDataset ds = id == 3 ? figure3_data(l_max, opt.cfg) : figure4_data(l_max, opt.cfg);
    print_warnings(ds.warnings);
    comments.push_back("grid: l = 0.." + std::to_string(l_max));
    table = to_table(ds.rows);
  }
  comments.push_back(solver_comment(opt.cfg));
  table.comments = std::move(comments);
  emit_table(table, output_format_from_string(opt.format), opt.out);
  if (!plot_script.empty())
    write_plot_script(plot_script, opt.out.empty() ? "figure.csv" : opt.out, id);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound-state energies and critical couplings of the attractive Gaussian "
               "and Yukawa wells"};
  app.set_version_flag("--version", std::string("qwell ") + kVersion);
  app.require_subcommand(1);

  CommonOptions opt;
  std::vector<double> xi_list;
  int l_max = 10;
  int figure_id = 0;
  std::string plot_script;

  const auto add_potential = [&](CLI::App* cmd) {
    cmd->add_option("--potential", opt.potential, "gaussian or yukawa")
        ->check(CLI::IsMember({"gaussian", "yukawa"}));
  };
  const auto add_method = [&](CLI::App* cmd) {
    cmd->add_option("--method", opt.method, "koksal, variational, reference, or all")
        ->check(CLI::IsMember({"koksal", "variational", "reference", "all"}));
  };

  CLI::App* energy = app.add_subcommand("energy", "energy of one state by the chosen methods");
  add_potential(energy);
  add_method(energy);
  energy->add_option("--xi", opt.xi, "coupling strength")->required();
  energy->add_option("--n", opt.n, "radial quantum number");
  energy->add_option("--l", opt.l, "angular momentum");
  add_solver_flags(energy, opt.cfg);

  CLI::App* critical = app.add_subcommand("critical", "critical coupling for one l");
  add_potential(critical);
  add_method(critical);
  critical->add_option("--l", opt.l, "angular momentum");
  add_solver_flags(critical, opt.cfg);

  CLI::App* count = app.add_subcommand("count", "bound-state count in one l channel");
  add_potential(count);
  count->add_option("--xi", opt.xi, "coupling strength")->required();
  count->add_option("--l", opt.l, "angular momentum");
  add_solver_flags(count, opt.cfg);

  CLI::App* sweep = app.add_subcommand("sweep", "comparison table over a grid of xi or l");
  add_potential(sweep);
  sweep->add_option("--xi", opt.xi, "fixed coupling strength (for an l sweep)");
  sweep->add_option("--xi-list", xi_list, "xi grid (for a xi sweep)")->delimiter(',');
  sweep->add_option("--l-max", l_max, "sweep l = 0..l_max");
  sweep->add_option("--n", opt.n, "radial quantum number");
  sweep->add_option("--l", opt.l, "angular momentum (for a xi sweep)");
  sweep->add_option("--format", opt.format)->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", opt.out, "output path (default stdout)");
  add_solver_flags(sweep, opt.cfg);

  CLI::App* figure = app.add_subcommand("figure", "regenerate a figure dataset");
  figure->add_option("id", figure_id, "figure id (1-4)")->required()->check(CLI::Range(1, 4));
  figure->add_option("--xi", opt.xi, "xi for figure 1 (default 200)");
  figure->add_option("--xi-list", xi_list, "xi grid for figure 2")->delimiter(',');
  figure->add_option("--l-max", l_max, "l range for figures 1, 3, 4");
  figure->add_option("--format", opt.format)->check(CLI::IsMember({"csv", "json"}));
  figure->add_option("--out", opt.out, "output path (default stdout)");
  figure->add_option("--plot-script", plot_script, "also emit a gnuplot script");
  add_solver_flags(figure, opt.cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  // Cross-flag combinations CLI11 cannot express.
  if (opt.method == "koksal" && opt.potential == "yukawa") {
    std::cerr << "error: the Koksal empirical formula is undefined for the Yukawa "
                 "potential; use --method variational or reference\n";
    return 2;
  }
  if (opt.method == "variational" && opt.n > 0) {
    std::cerr << "error: the variational method covers only the n=0 state of each l\n";
    return 2;
  }
  if (sweep->parsed() && !xi_list.empty() && sweep->count("--l-max") > 0) {
    std::cerr << "error: --xi-list and --l-max are mutually exclusive in sweep\n";
    return 2;
  }
  if (sweep->parsed() && xi_list.empty() && opt.xi <= 0.0) {
    std::cerr << "error: sweep needs either --xi-list or --xi with --l-max\n";
    return 2;
  }

  try {
    if (energy->parsed()) return run_energy(opt);
    if (critical->parsed()) return run_critical(opt);
    if (count->parsed()) return run_count(opt);
    if (sweep->parsed()) return run_sweep(opt, xi_list, l_max);
    if (figure->parsed()) return run_figure(opt, figure_id, l_max, xi_list, plot_script);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
