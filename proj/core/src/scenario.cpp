#include "untrapped/scenario.hpp"

#include <algorithm>
#include <fstream>

#include "untrapped/csv.hpp"
#include "untrapped/errors.hpp"
#include "untrapped/sphere_slices.hpp"

namespace untrapped {

std::string task_name(Task t) {
  switch (t) {
    case Task::constraints: return "constraints";
    case Task::horizons: return "horizons";
    case Task::jang: return "jang";
    case Task::spectrum: return "spectrum";
    case Task::verify: return "verify";
  }
  return "verify";
}

Task task_from_name(const std::string& name) {
  if (name == "constraints") return Task::constraints;
  if (name == "horizons") return Task::horizons;
  if (name == "jang") return Task::jang;
  if (name == "spectrum") return Task::spectrum;
  if (name == "verify") return Task::verify;
  throw ParseError("/tasks", "unknown task '" + name + "'");
}

namespace {

void reject_unknown_keys(const nlohmann::json& j, const std::string& pointer,
                         std::initializer_list<const char*> allowed) {
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const char* key : allowed)
      if (item.key() == key) ok = true;
    if (!ok) throw ParseError(pointer + "/" + item.key(), "unknown key (schema is fail-closed)");
  }
}

double require_number(const nlohmann::json& j, const std::string& pointer) {
  if (!j.is_number()) throw ParseError(pointer, "expected a number");
  return j.get<double>();
}

}  // namespace

Scenario scenario_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ParseError("", "scenario must be a JSON object");
  reject_unknown_keys(j, "", {"schema", "name", "data", "domain", "tasks", "numeric"});

  if (j.contains("schema") && j.at("schema") != 1)
    throw ParseError("/schema", "unsupported schema version");

  Scenario sc;
  sc.name = j.value("name", std::string("unnamed"));

  if (!j.contains("data")) throw ParseError("/data", "missing required key");
  const auto& data = j.at("data");
  reject_unknown_keys(data, "/data", {"family", "params", "fields_csv", "surface"});
  if (data.contains("family") == data.contains("surface"))
    throw ParseError("/data", "exactly one of 'family' or 'surface' is required");

  if (data.contains("family")) {
    const std::string fam = data.at("family").get<std::string>();
    try {
      sc.family = family_from_name(fam);
    } catch (const InvalidParameter&) {
      throw ParseError("/data/family", "unknown family '" + fam + "'");
    }
    if (data.contains("params")) sc.family_params = data.at("params");
    if (data.contains("fields_csv")) {
      std::filesystem::path p = data.at("fields_csv").get<std::string>();
      sc.fields_csv = p.is_absolute() ? p : base_dir / p;
    }
    if ((*sc.family == Family::custom || *sc.family == Family::maximal_slice_custom) &&
        sc.fields_csv.empty())
      throw ParseError("/data/fields_csv", "custom families need a fields CSV");

    if (!j.contains("domain")) throw ParseError("/domain", "missing required key");
    const auto& dom = j.at("domain");
    if (!dom.is_array() || dom.size() != 2)
      throw ParseError("/domain", "expected [rho_min, rho_b]");
    sc.rho_min = require_number(dom[0], "/domain/0");
    sc.rho_b = require_number(dom[1], "/domain/1");
    if (!(sc.rho_min > 0.0) || !(sc.rho_b > sc.rho_min))
      throw ParseError("/domain", "need 0 < rho_min < rho_b");
    sc.has_domain = true;
  } else {
    const auto& surf = data.at("surface");
    reject_unknown_keys(surf, "/data/surface", {"kind", "r", "a", "c", "path"});
    SurfaceSpec spec;
    spec.kind = surf.value("kind", std::string());
    if (spec.kind == "sphere") {
      spec.r = surf.value("r", 1.0);
    } else if (spec.kind == "spheroid") {
      spec.a = surf.value("a", 1.0);
      spec.c = surf.value("c", 1.0);
    } else if (spec.kind == "profile_csv") {
      if (!surf.contains("path")) throw ParseError("/data/surface/path", "missing profile path");
      std::filesystem::path p = surf.at("path").get<std::string>();
      spec.csv = p.is_absolute() ? p : base_dir / p;
    } else {
      throw ParseError("/data/surface/kind", "expected sphere | spheroid | profile_csv");
    }
    sc.surface = spec;
    if (j.contains("domain")) throw ParseError("/domain", "domain does not apply to surfaces");
  }

  if (!j.contains("tasks")) throw ParseError("/tasks", "missing required key");
  if (!j.at("tasks").is_array() || j.at("tasks").empty())
    throw ParseError("/tasks", "tasks must be a nonempty array");
  for (const auto& t : j.at("tasks")) sc.tasks.push_back(task_from_name(t.get<std::string>()));

  if (j.contains("numeric")) {
    const auto& num = j.at("numeric");
    reject_unknown_keys(num, "/numeric", {"n", "k_max", "tol"});
    sc.numeric.n = num.value("n", sc.numeric.n);
    sc.numeric.k_max = num.value("k_max", sc.numeric.k_max);
    sc.numeric.tol = num.value("tol", sc.numeric.tol);
    if (sc.numeric.n < 16) throw ParseError("/numeric/n", "grid too coarse");
  }
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), "cannot open scenario file");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string(), e.what());
  }
  return scenario_from_json(j, path.parent_path());
}

SphericalDataSet Scenario::build_data() const {
  if (!family) throw InvalidParameter("scenario has no initial-data source");
  if (*family == Family::custom || *family == Family::maximal_slice_custom) {
    const CsvTable table = read_csv(fields_csv);
    auto d = make_custom(table.column("rho"), table.column("a"), table.column("r"),
                         table.column("kappa_rho"), table.column("kappa_T"), *family);
    if (rho_min < d.rho_min() - 1e-12 || rho_b > d.rho_max() + 1e-12)
      throw InvalidParameter("scenario domain outside the sampled grid");
    return d;
  }
  return make_family(*family, family_params, Grid{rho_min, rho_b, numeric.n});
}

RevolutionSurface Scenario::build_surface() const {
  if (!surface) throw InvalidParameter("scenario has no surface source");
  if (surface->kind == "sphere") return sphere_profile(surface->r);
  if (surface->kind == "spheroid") return spheroid_profile(surface->a, surface->c, 2048);
  return load_profile_csv(surface->csv);
}

nlohmann::json spectrum_json(const Spectrum& spec) {
  nlohmann::json per_mode = nlohmann::json::object();
  for (const auto& [k, eigs] : spec.per_mode) per_mode[k.label()] = eigs;
  return nlohmann::json{
      {"lambda1", spec.lambda1},
      {"eigenvalues", spec.eigenvalues},
      {"per_mode", per_mode},
      {"error_estimate", spec.error_estimate},
  };
}

namespace {

nlohmann::json field_summary(const std::vector<double>& v) {
  double lo = v.front(), hi = v.front();
  for (double x : v) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  return {{"min", lo}, {"max", hi}};
}

struct TaskOutcome {
  nlohmann::json payload;
  int exit_code = exit_ok;
};

nlohmann::json structured_error(const std::string& kind, const std::string& what) {
  return {{"status", "error"}, {"error", kind}, {"detail", what}};
}

}  // namespace

nlohmann::json RunReport::to_json() const {
  return nlohmann::json{
      {"scenario", scenario_name},
      {"tasks", tasks},
      {"exit_code", exit_code},
  };
}

RunReport run(const Scenario& sc) {
  RunReport rep;
  rep.scenario_name = sc.name;
  const auto wants = [&](Task t) {
    return std::find(sc.tasks.begin(), sc.tasks.end(), t) != sc.tasks.end();
  };

  auto record_exit = [&](int code) { rep.exit_code = std::max(rep.exit_code, code); };

  // ---- surface-only scenarios -------------------------------------------
  if (sc.surface) {
    RevolutionSurface surf = [&]() -> RevolutionSurface { return sc.build_surface(); }();
    if (wants(Task::spectrum)) {
      try {
        const Spectrum spec = dirac_spectrum(surf, sc.numeric.k_max, sc.numeric.n);
        auto j = spectrum_json(spec);
        j["status"] = "ok";
        rep.tasks["spectrum"] = j;
      } catch (const NumericalFailure& e) {
        rep.tasks["spectrum"] = structured_error("numerical-failure", e.what());
        record_exit(exit_bound_failed);
      }
    }
    if (wants(Task::verify)) {
      try {
        BoundReport b = intrinsic_bounds(surf, sc.numeric.k_max, sc.numeric.n);
        auto j = b.to_json();
        j["status"] = "ok";
        rep.tasks["verify"] = j;
        if (!b.flags.lower_holds) record_exit(exit_bound_failed);
      } catch (const std::exception& e) {
        rep.tasks["verify"] = structured_error("numerical-failure", e.what());
        record_exit(exit_bound_failed);
      }
    }
    for (Task t : {Task::constraints, Task::horizons, Task::jang})
      if (wants(t))
        rep.tasks[task_name(t)] =
            structured_error("input-error", "task needs an initial-data scenario");
    if (rep.tasks.contains("constraints") || rep.tasks.contains("horizons") ||
        rep.tasks.contains("jang"))
      record_exit(exit_input_error);
    return rep;
  }

  // ---- initial-data scenarios -------------------------------------------
  SphericalDataSet data = [&]() { return sc.build_data(); }();
  rep.data = data;

  std::optional<DecReport> dec;
  if (wants(Task::constraints) || wants(Task::verify)) {
    try {
      const ConstraintFields fields = constraint_fields(data);
      dec = check_dec(data);
      rep.tasks["constraints"] = {
          {"status", "ok"},
          {"R", field_summary(fields.R)},
          {"mu", field_summary(fields.mu)},
          {"J_rad", field_summary(fields.J_rad)},
          {"dec", {{"satisfied", dec->satisfied},
                   {"min_margin", dec->min_margin},
                   {"at_rho", dec->at_rho}}},
      };
    } catch (const std::exception& e) {
      rep.tasks["constraints"] = structured_error("numerical-failure", e.what());
      record_exit(exit_input_error);
    }
  }

  std::optional<std::vector<double>> roots;
  if (wants(Task::horizons) || wants(Task::jang) || wants(Task::verify)) {
    roots = horizon_scan(data, sc.rho_min, sc.rho_b);
    if (wants(Task::horizons))
      rep.tasks["horizons"] = {{"status", "ok"}, {"roots", *roots}};
  }

  std::optional<JangSolution> jang_sol;
  std::string jang_error;
  if (wants(Task::jang) || wants(Task::verify)) {
    try {
      JangParams params;
      params.n = sc.numeric.n;
      jang_sol = solve_jang_dirichlet(data, sc.rho_b, params);
      rep.jang_solution = jang_sol;
      if (wants(Task::jang)) {
        double max_resid = 0.0, max_x = 0.0;
        for (double v : jang_sol->residual) max_resid = std::max(max_resid, std::abs(v));
        for (double v : jang_sol->X_rad) max_x = std::max(max_x, std::abs(v));
        const BoundaryIdentity id = boundary_identity_check(data, *jang_sol);
        rep.tasks["jang"] = {
            {"status", "ok"},
            {"iterations", jang_sol->iterations},
            {"residual_norm", jang_sol->residual_norm},
            {"max_abs_residual", max_resid},
            {"max_abs_X", max_x},
            {"min_sy_margin", jang_sol->min_sy_margin},
            {"boundary_identity", {{"lhs", id.lhs},
                                   {"rhs_plus", id.rhs_plus},
                                   {"rhs_minus", id.rhs_minus},
                                   {"sigma", id.sigma},
                                   {"bound", id.bound}}},
        };
      }
    } catch (const PreconditionViolation& e) {
      jang_error = e.what();
      if (wants(Task::jang)) {
        rep.tasks["jang"] = structured_error("precondition-violation", e.what());
        rep.tasks["jang"]["hypothesis"] = e.hypothesis();
        record_exit(exit_hypothesis_violation);
      }
    } catch (const NumericalFailure& e) {
      jang_error = e.what();
      if (wants(Task::jang)) {
        rep.tasks["jang"] = structured_error("numerical-failure", e.what());
        record_exit(exit_bound_failed);
      }
    }
  }

  if (wants(Task::spectrum)) {
    try {
      const double rb = data.r(sc.rho_b);
      const Spectrum spec = dirac_spectrum(sphere_profile(rb), sc.numeric.k_max,
                                           std::min(sc.numeric.n, 1024));
      auto j = spectrum_json(spec);
      j["status"] = "ok";
      j["boundary_area_radius"] = rb;
      rep.tasks["spectrum"] = j;
    } catch (const std::exception& e) {
      rep.tasks["spectrum"] = structured_error("numerical-failure", e.what());
      record_exit(exit_bound_failed);
    }
  }

  if (wants(Task::verify)) {
    std::vector<Hypothesis> preliminary;
    if (dec)
      preliminary.push_back({"dominant energy condition", dec->satisfied,
                             "min margin " + std::to_string(dec->min_margin) + " at rho = " +
                                 std::to_string(dec->at_rho)});
    if (roots) {
      std::string witness = roots->empty() ? "no sign change of theta+/-" : "roots at rho =";
      for (double r : *roots) witness += " " + std::to_string(r);
      const bool interior_free =
          roots->empty() ||
          roots->front() >= sc.rho_b - 1e-9 * (sc.rho_b - sc.rho_min);
      preliminary.push_back({"no apparent horizon in the interior", interior_free, witness});
    }

    auto fail_verify = [&](const std::string& hypothesis, const std::string& detail) {
      rep.tasks["verify"] = structured_error("precondition-violation", detail);
      rep.tasks["verify"]["hypothesis"] = hypothesis;
      nlohmann::json hyps = nlohmann::json::array();
      for (const auto& h : preliminary)
        hyps.push_back({{"name", h.name}, {"satisfied", h.satisfied}, {"witness", h.witness}});
      rep.tasks["verify"]["hypotheses"] = hyps;
      record_exit(exit_hypothesis_violation);
    };

    if (dec && !dec->satisfied) {
      fail_verify("dominant energy condition", "mu >= |J| fails on the grid");
    } else if (!preliminary.empty() && !preliminary.back().satisfied) {
      fail_verify("no apparent horizon in the interior", preliminary.back().witness);
    } else if (!jang_sol) {
      if (!jang_error.empty() && jang_error.find("horizon") != std::string::npos)
        fail_verify("no apparent horizon in the interior", jang_error);
      else {
        rep.tasks["verify"] = structured_error("upstream-failure",
                                               jang_error.empty() ? "jang solve unavailable"
                                                                  : jang_error);
        record_exit(exit_bound_failed);
      }
    } else {
      try {
        BoundReport bounds = assemble_bounds(data, sc.rho_b, *jang_sol, wants(Task::spectrum),
                                             std::min(sc.numeric.n, 1024), sc.numeric.tol);
        bounds.hypotheses.insert(bounds.hypotheses.begin(), preliminary.begin(),
                                 preliminary.end());
        auto j = bounds.to_json();
        j["status"] = "ok";
        rep.tasks["verify"] = j;
        if (!bounds.all_bounds_hold()) record_exit(exit_bound_failed);
      } catch (const PreconditionViolation& e) {
        fail_verify(e.hypothesis(), e.what());
      }
    }
  }
  return rep;
}

void emit(const RunReport& report, const std::filesystem::path& out_dir,
          const std::string& format) {
  std::filesystem::create_directories(out_dir);
  {
    std::ofstream out(out_dir / "report.json");
    if (!out) throw ParseError((out_dir / "report.json").string(), "cannot write report");
    out << report.to_json().dump(2) << "\n";
  }
  if (format != "csv") return;

  if (report.data) {
    const auto& d = *report.data;
    const ConstraintFields fields = constraint_fields(d);
    CsvTable constraints;
    constraints.columns = {"rho", "a", "r", "kappa_rho", "kappa_T", "R", "mu", "J_rad",
                           "dec_margin"};
    constraints.data = {d.rho(), d.a_samples(), d.r_samples(), d.kappa_rho_samples(),
                        d.kappa_T_samples(), fields.R, fields.mu, fields.J_rad,
                        fields.dec_margin};
    write_csv(out_dir / "constraints.csv", constraints);

    CsvTable slices;
    slices.columns = {"rho", "H", "trK_sigma", "theta_plus", "theta_minus", "class"};
    std::vector<std::vector<double>> cols(5);
    std::vector<double> cls;
    for (const auto& s : slice_table(d)) {
      cols[0].push_back(s.rho);
      cols[1].push_back(s.H);
      cols[2].push_back(s.trK_sigma);
      cols[3].push_back(s.theta_plus);
      cols[4].push_back(s.theta_minus);
      cls.push_back(static_cast<double>(s.classification));
    }
    slices.data = {cols[0], cols[1], cols[2], cols[3], cols[4], cls};
    write_csv(out_dir / "slices.csv", slices);
  }
  if (report.jang_solution) {
    const auto& sol = *report.jang_solution;
    CsvTable jang;
    jang.columns = {"rho", "u", "du", "f", "ghat_a", "X_rad", "sy_margin"};
    jang.data = {sol.rho, sol.u, sol.du, sol.f_lapse, sol.ghat_a, sol.X_rad, sol.sy_margin};
    write_csv(out_dir / "jang.csv", jang);
  }
}

}  // namespace untrapped
