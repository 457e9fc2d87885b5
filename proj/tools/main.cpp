#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "untrapped/csv.hpp"
#include "untrapped/errors.hpp"
#include "untrapped/scenario.hpp"
#include "untrapped/sphere_slices.hpp"

namespace fs = std::filesystem;
using namespace untrapped;

namespace {

struct CommonOpts {
  std::string out_dir = ".";
  int grid = 0;        // 0: keep the scenario's value
  double tol = 0.0;    // 0: keep the scenario's value
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--out", opts.out_dir, "output directory")->capture_default_str();
  cmd->add_option("--grid", opts.grid, "override the scenario grid size");
  cmd->add_option("--tol", opts.tol, "override the equality tolerance");
  cmd->add_option("--format", opts.format, "output format: json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

Scenario load_with_overrides(const std::string& path, const CommonOpts& opts,
                             std::vector<Task> forced_tasks = {}) {
  Scenario sc = load_scenario(path);
  if (opts.grid > 0) sc.numeric.n = opts.grid;
  if (opts.tol > 0.0) sc.numeric.tol = opts.tol;
  if (!forced_tasks.empty()) {
    if (sc.surface) {
      // surface scenarios carry no constraint/horizon/jang pipeline
      sc.tasks = {Task::spectrum, Task::verify};
    } else {
      sc.tasks = std::move(forced_tasks);
    }
  }
  return sc;
}

int run_and_emit(const Scenario& sc, const CommonOpts& opts) {
  RunReport report = run(sc);
  emit(report, opts.out_dir, opts.format);
  std::cout << report.to_json().dump(2) << "\n";
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral and constraint checks for spherically symmetric initial data:\n"
               "Dirac spectra of surfaces of revolution, trapped-surface scans, a Dirichlet\n"
               "Jang solver, and eigenvalue bound verification with rigidity detection."};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string scenario_path;
  std::string profile_path;
  std::string family_kind;
  double radius = 1.0, ax_a = 1.0, ax_c = 1.0, k_max = 3.5;
  int grid_n = 1024;

  auto* verify = app.add_subcommand("verify", "run the full bound-verification pipeline");
  verify->add_option("scenario", scenario_path, "scenario JSON")->required();
  add_common(verify, opts);

  auto* constraints = app.add_subcommand("constraints", "constraint fields and the energy condition");
  constraints->add_option("scenario", scenario_path, "scenario JSON")->required();
  add_common(constraints, opts);

  auto* horizons = app.add_subcommand("scan-horizons", "locate apparent horizons on the domain");
  horizons->add_option("scenario", scenario_path, "scenario JSON")->required();
  add_common(horizons, opts);

  auto* jang = app.add_subcommand("jang", "solve the Dirichlet Jang equation");
  jang->add_option("scenario", scenario_path, "scenario JSON")->required();
  add_common(jang, opts);

  auto* spectrum = app.add_subcommand("spectrum", "Dirac spectrum of a surface of revolution");
  spectrum->add_option("profile", profile_path, "profile CSV (columns t, f)");
  spectrum->add_option("--family", family_kind, "built-in surface: sphere | spheroid");
  spectrum->add_option("--r", radius, "sphere radius")->capture_default_str();
  spectrum->add_option("--a", ax_a, "spheroid equatorial semi-axis")->capture_default_str();
  spectrum->add_option("--c", ax_c, "spheroid polar semi-axis")->capture_default_str();
  spectrum->add_option("--kmax", k_max, "largest Fourier mode |k|")->capture_default_str();
  add_common(spectrum, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed())
      return run_and_emit(load_with_overrides(scenario_path, opts,
                                              {Task::constraints, Task::horizons, Task::jang,
                                               Task::verify}),
                          opts);
    if (constraints->parsed())
      return run_and_emit(load_with_overrides(scenario_path, opts, {Task::constraints}), opts);
    if (horizons->parsed())
      return run_and_emit(load_with_overrides(scenario_path, opts, {Task::horizons}), opts);
    if (jang->parsed())
      return run_and_emit(load_with_overrides(scenario_path, opts,
                                              {Task::constraints, Task::horizons, Task::jang}),
                          opts);
    if (spectrum->parsed()) {
      RevolutionSurface surf = [&]() {
        if (!profile_path.empty()) return load_profile_csv(profile_path);
        if (family_kind == "sphere") return sphere_profile(radius);
        if (family_kind == "spheroid") return spheroid_profile(ax_a, ax_c, 2048);
        throw InvalidParameter("spectrum needs a profile CSV or --family sphere|spheroid");
      }();
      const int n = opts.grid > 0 ? opts.grid : grid_n;
      const Spectrum spec = dirac_spectrum(surf, k_max, n);
      nlohmann::json j = spectrum_json(spec);
      fs::create_directories(opts.out_dir);
      std::ofstream out(fs::path(opts.out_dir) / "spectrum.json");
      out << j.dump(2) << "\n";
      std::cout << j.dump(2) << "\n";
      return exit_ok;
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const InvalidParameter& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const InvalidMode& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const PreconditionViolation& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return exit_hypothesis_violation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_bound_failed;
  }
  return exit_ok;
}
