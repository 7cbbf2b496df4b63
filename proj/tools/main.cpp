// Command-line front end: emits iteration matrices, trajectories, theta
// sweeps and the built-in figure datasets as CSV, and runs the verification
// suite. Exit codes: 0 success, 1 usage error, 2 numerical failure.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "groverphase/groverphase.hpp"

namespace {

grover::Engine to_engine(const std::string& name) {
  if (name == "reduced") return grover::Engine::kReduced;
  if (name == "spectral") return grover::Engine::kSpectral;
  if (name == "full") return grover::Engine::kFull;
  return grover::Engine::kAuto;
}

// Parses a --flag value as a pi-expression, naming the flag on failure so the
// usage error points at the offending option.
double parse_angle_option(const std::string& flag, const std::string& text) {
  try {
    return grover::parse_angle_expression(text);
  } catch (const std::invalid_argument& err) {
    throw std::invalid_argument(flag + ": " + err.what());
  }
}

int with_output(const std::string& path, const std::function<int(std::ostream&)>& fn) {
  if (path.empty()) {
    return fn(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << path << "'\n";
    return 1;
  }
  return fn(out);
}

grover::Table matrix_table(const grover::Mat2& m) {
  grover::Table table{{"row", "col", "re", "im"}, {}};
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      table.rows.push_back({static_cast<double>(r), static_cast<double>(c),
                            m(r, c).real(), m(r, c).imag()});
    }
  }
  return table;
}

grover::Table trajectory_table(const grover::Trajectory& traj) {
  grover::Table table{{"j", "re_B", "im_B", "abs_B", "re_A", "im_A", "abs_A",
                       "norm_defect"},
                      {}};
  table.rows.reserve(traj.states.size());
  for (std::size_t j = 0; j < traj.states.size(); ++j) {
    const grover::ReducedState& s = traj.states[j];
    table.rows.push_back({static_cast<double>(j), s.b.real(), s.b.imag(),
                          std::abs(s.b), s.a.real(), s.a.imag(), std::abs(s.a),
                          grover::norm_defect(s)});
  }
  return table;
}

grover::Table sweep_table(const grover::ThetaSweep& sweep) {
  grover::Table table{{"theta", "abs_B"}, {}};
  table.rows.reserve(sweep.grid.size());
  for (std::size_t i = 0; i < sweep.grid.size(); ++i) {
    table.rows.push_back({sweep.grid[i], sweep.values[i]});
  }
  return table;
}

int run_verify(std::ostream& out) {
  const std::vector<grover::CheckResult> results = grover::run_verification();
  bool all_passed = true;
  for (const grover::CheckResult& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << "  " << r.name << ": " << r.detail
        << "\n";
    all_passed = all_passed && r.passed;
  }
  out << (all_passed ? "all checks passed" : "verification FAILED") << "\n";
  return all_passed ? 0 : 2;
}

int run_nm2_diagnostic(std::uint64_t n, double theta, std::ostream& out) {
  const grover::CoefficientDiagnostic diag =
      grover::nm2_coefficient_diagnostic(n, theta);
  out << "A-row coefficient comparison at N=" << n << ", theta="
      << grover::format_value(grover::canonicalize_angle(theta)) << "\n"
      << "  standard sin(psi) = " << grover::format_value(diag.standard_coefficient)
      << ", one-step deviation vs full simulation = "
      << grover::format_value(diag.standard_one_step_deviation) << "\n"
      << "  variant 2*sqrt(N-2)/N = "
      << grover::format_value(diag.variant_coefficient)
      << ", one-step deviation vs full simulation = "
      << grover::format_value(diag.variant_one_step_deviation) << "\n"
      << "  variant unitarity defect = "
      << grover::format_value(diag.variant_unitarity_defect) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Quantum-search iteration toolkit: marked-state amplitude trajectories, "
      "theta sweeps and spectra for the search iteration with an arbitrary "
      "marked-state phase."};
  app.require_subcommand(1);

  const std::vector<std::string> engines{"auto", "reduced", "spectral", "full"};

  // matrix
  CLI::App* matrix_cmd = app.add_subcommand(
      "matrix", "Print the 2x2 iteration matrix as CSV (row,col,re,im)");
  std::uint64_t matrix_n = 100;
  std::string matrix_theta;
  std::string matrix_output;
  matrix_cmd->add_option("--n", matrix_n, "Search-space size N (>= 2)");
  matrix_cmd->add_option("--theta", matrix_theta,
                         "Marked-state phase: pi, pi/K, pi*K, K*pi or radians")
      ->required();
  matrix_cmd->add_option("--output", matrix_output, "Write CSV here instead of stdout");

  // trajectory
  CLI::App* traj_cmd = app.add_subcommand(
      "trajectory",
      "Print the amplitude pair after 0..jmax applications as CSV");
  std::uint64_t traj_n = 100;
  std::string traj_theta;
  std::uint64_t traj_jmax = 100;
  std::string traj_engine = "auto";
  std::uint64_t traj_max_n = grover::kDefaultFullStateLimit;
  std::string traj_output;
  double b0_re = 0.0, b0_im = 0.0, a0_re = 0.0, a0_im = 0.0;
  traj_cmd->add_option("--n", traj_n, "Search-space size N (>= 2)");
  traj_cmd->add_option("--theta", traj_theta,
                       "Marked-state phase: pi, pi/K, pi*K, K*pi or radians")
      ->required();
  traj_cmd->add_option("--jmax", traj_jmax, "Number of applications");
  traj_cmd->add_option("--engine", traj_engine, "Computation path")
      ->check(CLI::IsMember(engines));
  traj_cmd->add_option("--max-n", traj_max_n,
                       "Largest N the full engine may materialize");
  traj_cmd->add_option("--output", traj_output, "Write CSV here instead of stdout");
  CLI::Option* ob_re = traj_cmd->add_option(
      "--b0-re", b0_re, "Custom initial state (all four components required)");
  CLI::Option* ob_im = traj_cmd->add_option("--b0-im", b0_im, "");
  CLI::Option* oa_re = traj_cmd->add_option("--a0-re", a0_re, "");
  CLI::Option* oa_im = traj_cmd->add_option("--a0-im", a0_im, "");
  ob_re->needs(ob_im, oa_re, oa_im);
  ob_im->needs(ob_re, oa_re, oa_im);
  oa_re->needs(ob_re, ob_im, oa_im);
  oa_im->needs(ob_re, ob_im, oa_re);

  // sweep
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Sweep theta for a fixed application count; CSV (theta,abs_B)");
  std::uint64_t sweep_n = 100;
  std::uint64_t sweep_report = 4;
  std::uint64_t sweep_points = 2000;
  std::string sweep_from = "0";
  std::string sweep_to = "pi*2";
  std::string sweep_engine = "auto";
  std::string sweep_output;
  sweep_cmd->add_option("--n", sweep_n, "Search-space size N (>= 2)");
  sweep_cmd->add_option("--report", sweep_report,
                        "Application count whose |B| is reported");
  sweep_cmd->add_option("--points", sweep_points, "Grid points (>= 3)");
  sweep_cmd->add_option("--from", sweep_from, "Window start (pi-expression)");
  sweep_cmd->add_option("--to", sweep_to,
                        "Window end (pi-expression); the end itself is not sampled");
  sweep_cmd->add_option("--engine", sweep_engine, "Computation path")
      ->check(CLI::IsMember(engines));
  sweep_cmd->add_option("--output", sweep_output, "Write CSV here instead of stdout");

  // figure
  CLI::App* figure_cmd =
      app.add_subcommand("figure", "Emit one of the built-in datasets as CSV");
  int figure_id = 0;
  std::string figure_engine = "auto";
  std::string figure_output;
  figure_cmd->add_option("--id", figure_id, "Dataset id (1..5)")->required();
  figure_cmd->add_option("--engine", figure_engine, "Computation path")
      ->check(CLI::IsMember(engines));
  figure_cmd->add_option("--output", figure_output,
                         "Write CSV here instead of stdout");

  // verify
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Run the built-in verification suite (exit 0 when clean)");
  bool nm2_flag = false;
  std::uint64_t verify_n = 100;
  std::string verify_theta = "pi";
  verify_cmd
      ->add_flag("--nm2-coefficient", nm2_flag,
                 "Report how the 2*sqrt(N-2)/N A-row coefficient variant "
                 "deviates from the full simulation")
      ->group("");  // hidden diagnostic
  verify_cmd->add_option("--n", verify_n, "Size for the coefficient diagnostic")
      ->group("");
  verify_cmd->add_option("--theta", verify_theta,
                         "Phase for the coefficient diagnostic")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*matrix_cmd) {
      const double theta = parse_angle_option("--theta", matrix_theta);
      const grover::ProblemConfig config(matrix_n, theta);
      const grover::Table table = matrix_table(grover::build_iteration_matrix(config));
      return with_output(matrix_output, [&](std::ostream& out) {
        grover::write_csv(out, table);
        return 0;
      });
    }
    if (*traj_cmd) {
      const double theta = parse_angle_option("--theta", traj_theta);
      const grover::ProblemConfig config(traj_n, theta);
      const grover::ReducedState initial =
          ob_re->count() > 0
              ? grover::custom_initial_state({b0_re, b0_im}, {a0_re, a0_im})
              : grover::uniform_initial_state(traj_n);
      const grover::Trajectory traj = grover::trajectory_by_engine(
          config, initial, traj_jmax, to_engine(traj_engine), traj_max_n);
      const grover::Table table = trajectory_table(traj);
      return with_output(traj_output, [&](std::ostream& out) {
        grover::write_csv(out, table);
        return 0;
      });
    }
    if (*sweep_cmd) {
      const grover::ThetaWindow window{parse_angle_option("--from", sweep_from),
                                       parse_angle_option("--to", sweep_to)};
      const grover::ThetaSweep sweep =
          grover::theta_sweep(sweep_n, sweep_report, sweep_points, window,
                              to_engine(sweep_engine));
      const grover::Table table = sweep_table(sweep);
      return with_output(sweep_output, [&](std::ostream& out) {
        grover::write_csv(out, table);
        return 0;
      });
    }
    if (*figure_cmd) {
      const grover::Table table =
          grover::figure_dataset(figure_id, to_engine(figure_engine));
      return with_output(figure_output, [&](std::ostream& out) {
        grover::write_csv(out, table);
        return 0;
      });
    }
    if (*verify_cmd) {
      if (nm2_flag) {
        const double theta = parse_angle_option("--theta", verify_theta);
        return run_nm2_diagnostic(verify_n, theta, std::cout);
      }
      return run_verify(std::cout);
    }
  } catch (const grover::DegenerateSpectrumError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const grover::SymmetryViolationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const grover::SizeGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
