#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "untrapped/bounds.hpp"
#include "untrapped/dirac_spectrum.hpp"
#include "untrapped/initial_data.hpp"
#include "untrapped/jang.hpp"
#include "untrapped/revolution_surface.hpp"

namespace untrapped {

enum class Task { constraints, horizons, jang, spectrum, verify };

std::string task_name(Task t);
Task task_from_name(const std::string& name);

struct NumericOptions {
  int n = 1024;
  double k_max = 3.5;
  double tol = 1e-3;  // equality tolerance forwarded to bound reports
};

struct SurfaceSpec {
  std::string kind;  // "sphere" | "spheroid" | "profile_csv"
  double r = 1.0;
  double a = 1.0;
  double c = 1.0;
  std::filesystem::path csv;
};

/// A validated scenario: one data source (initial-data family or revolution
/// surface), a domain, and the tasks to run. The JSON schema is versioned and
/// fail-closed: unknown keys are rejected.
struct Scenario {
  std::string name;
  std::optional<Family> family;
  nlohmann::json family_params = nlohmann::json::object();
  std::filesystem::path fields_csv;  // custom families
  std::optional<SurfaceSpec> surface;
  double rho_min = 0.0;
  double rho_b = 0.0;
  bool has_domain = false;
  std::vector<Task> tasks;
  NumericOptions numeric;

  SphericalDataSet build_data() const;
  RevolutionSurface build_surface() const;
};

Scenario scenario_from_json(const nlohmann::json& j,
                            const std::filesystem::path& base_dir = ".");
Scenario load_scenario(const std::filesystem::path& path);

/// Exit codes: 0 all requested bounds hold, 2 a bound check failed,
/// 3 a theorem hypothesis is violated, 4 input error.
enum ExitCode : int {
  exit_ok = 0,
  exit_bound_failed = 2,
  exit_hypothesis_violation = 3,
  exit_input_error = 4,
};

struct RunReport {
  std::string scenario_name;
  nlohmann::json tasks = nlohmann::json::object();
  int exit_code = exit_ok;

  // retained fields for CSV emission
  std::optional<SphericalDataSet> data;
  std::optional<JangSolution> jang_solution;

  nlohmann::json to_json() const;
};

RunReport run(const Scenario& sc);

/// Writes <dir>/report.json; with format "csv" also the per-field tables.
/// Output is byte-stable for identical inputs and version.
void emit(const RunReport& report, const std::filesystem::path& out_dir,
          const std::string& format = "json");

nlohmann::json spectrum_json(const Spectrum& spec);

}  // namespace untrapped
