// Experiment runner for the fractional relaxation / oscillation library.
//
// Subcommands:
//   run <preset|specfile>   solve and emit CSV files plus a manifest
//   list-presets            print the available named configurations
//   compare                 check a CSV against an analytic oracle
//
// Exit codes: 0 success, 2 validation, 3 solver failure, 4 I/O failure.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ekfrac/experiment.hpp"

namespace {

int run_command(const std::string& target, ekfrac::RunOptions opts, bool adaptive,
                double h, double t_end, double h_min, double h_max) {
  ekfrac::ExperimentSpec spec;
  bool is_preset = false;
  for (const auto& name : ekfrac::preset_names())
    if (name == target) is_preset = true;
  if (is_preset) {
    spec = ekfrac::make_preset(target);
  } else if (std::filesystem::exists(target)) {
    spec = ekfrac::parse_spec_file(target);
  } else {
    throw ekfrac::ValidationError("'" + target + "' is neither a preset nor a spec file");
  }
  if (h > 0.0) spec.grid.h = h;
  if (t_end > 0.0) spec.grid.t_end = t_end;
  if (adaptive) spec.grid.mode = ekfrac::GridMode::Adaptive;
  if (h_min > 0.0) spec.grid.h_min = h_min;
  if (h_max > 0.0) spec.grid.h_max = h_max;
  if (spec.grid.mode == ekfrac::GridMode::Adaptive) {
    spec.grid.h_min = std::min(spec.grid.h_min, spec.grid.h);
    spec.grid.h_max = std::max(spec.grid.h_max, spec.grid.h);
  }

  const auto manifest = ekfrac::run_experiment(spec, opts);
  std::cout << "wrote " << manifest.entries.size() << " file(s) to " << opts.out_dir << "\n";
  return 0;
}

int compare_command(const std::string& csv, const std::string& oracle_name, double tol,
                    const std::string& residual_out) {
  const auto kind = ekfrac::oracle_from_name(oracle_name);
  if (!kind)
    throw ekfrac::ValidationError(
        "unknown oracle '" + oracle_name +
        "' (expected closed_form_alpha1, saigo_kilbas, or manufactured)");
  const auto data = ekfrac::read_trajectory_csv(csv);
  const auto rep = ekfrac::compare_to_oracle(data, *kind, tol, residual_out);
  std::printf("nodes=%zu max_abs=%.6g rms=%.6g tol=%.6g -> %s\n", rep.nodes, rep.max_abs,
              rep.rms, tol, rep.pass ? "PASS" : "FAIL");
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fractional relaxation and damped-oscillation experiments"};
  app.require_subcommand(1);

  std::string target;
  ekfrac::RunOptions opts;
  bool adaptive = false;
  double h = 0.0, t_end = 0.0, h_min = 0.0, h_max = 0.0;
  auto* run = app.add_subcommand("run", "run a preset or a spec file");
  run->add_option("target", target, "preset name or path to a key=value spec file")->required();
  run->add_option("--out", opts.out_dir, "output directory")->capture_default_str();
  run->add_option("--workers", opts.workers, "concurrent sweep points")->capture_default_str();
  run->add_option("--h", h, "override base step");
  run->add_option("--t-end", t_end, "override end time");
  run->add_flag("--adaptive", adaptive, "use the adaptive step rule");
  run->add_option("--h-min", h_min, "adaptive step lower clamp");
  run->add_option("--h-max", h_max, "adaptive step upper clamp");

  auto* list = app.add_subcommand("list-presets", "list named experiment presets");

  std::string csv, oracle_name, residual_out;
  double tol = 1e-3;
  auto* cmp = app.add_subcommand("compare", "compare a CSV against an analytic oracle");
  cmp->add_option("--csv", csv, "trajectory CSV produced by run")->required();
  cmp->add_option("--oracle", oracle_name, "closed_form_alpha1 | saigo_kilbas | manufactured")
      ->required();
  cmp->add_option("--tol", tol, "max-abs pass threshold")->capture_default_str();
  cmp->add_option("--residual-out", residual_out, "write per-node residual CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (run->parsed()) return run_command(target, opts, adaptive, h, t_end, h_min, h_max);
    if (list->parsed()) {
      for (const auto& name : ekfrac::preset_names()) std::cout << name << "\n";
      return 0;
    }
    if (cmp->parsed()) return compare_command(csv, oracle_name, tol, residual_out);
  } catch (const ekfrac::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const ekfrac::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 4;
  } catch (const ekfrac::NonConvergenceError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 3;
  } catch (const ekfrac::SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
