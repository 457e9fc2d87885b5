#include "untrapped/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "untrapped/dirac_spectrum.hpp"
#include "untrapped/errors.hpp"

namespace untrapped {

namespace {

std::string format_value(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

bool close_rel(double x, double y, double tol) {
  return std::abs(x - y) <= tol * std::max({std::abs(x), std::abs(y), 1e-300});
}

}  // namespace

bool BoundReport::all_bounds_hold() const {
  const double eps = equality_tol;
  bool ok = true;
  if (lower_spacetime) ok = ok && *lower_spacetime <= lambda1 * (1.0 + eps);
  if (lower_riemannian) ok = ok && *lower_riemannian <= lambda1 * (1.0 + eps);
  if (upper && upper_applicable) ok = ok && lambda1 <= *upper * (1.0 + eps);
  ok = ok && lambda1 * lambda1 >= baer * baer * (1.0 - eps);
  if (!friedrich_vacuous) ok = ok && lambda1 * lambda1 >= friedrich * friedrich * (1.0 - eps);
  return ok;
}

nlohmann::json BoundReport::to_json() const {
  nlohmann::json j;
  j["lambda1"] = {{"value", lambda1}, {"method", lambda1_method}};
  if (lambda1_cross_check) j["lambda1"]["cross_check"] = *lambda1_cross_check;
  nlohmann::json b;
  if (lower_spacetime) b["lower_spacetime"] = *lower_spacetime;
  if (lower_riemannian) b["lower_riemannian"] = *lower_riemannian;
  if (upper) b["upper"] = {{"value", *upper}, {"applicable", upper_applicable}};
  b["baer"] = baer;
  b["friedrich"] = {{"value", friedrich}, {"vacuous", friedrich_vacuous}};
  j["bounds"] = b;
  j["flags"] = {
      {"lower_holds", flags.lower_holds},
      {"upper_holds", flags.upper_holds},
      {"equality_lower", flags.equality_lower},
      {"equality_upper", flags.equality_upper},
      {"rigidity_round_sphere", flags.rigidity_round_sphere},
  };
  nlohmann::json gaps;
  if (lower_spacetime) gaps["lower"] = lambda1 - *lower_spacetime;
  if (upper) gaps["upper"] = *upper - lambda1;
  gaps["baer"] = lambda1 * lambda1 - baer * baer;
  if (!friedrich_vacuous) gaps["friedrich"] = lambda1 * lambda1 - friedrich * friedrich;
  j["gaps"] = gaps;
  j["tolerances"] = {{"equality", equality_tol}};
  nlohmann::json hyps = nlohmann::json::array();
  for (const auto& h : hypotheses)
    hyps.push_back({{"name", h.name}, {"satisfied", h.satisfied}, {"witness", h.witness}});
  j["hypotheses"] = hyps;
  return j;
}

double lower_bound_spacetime(const SphereSlice& s) {
  if (s.classification != SliceClass::untrapped)
    throw PreconditionViolation("untrapped boundary",
                                "slice at rho = " + format_value(s.rho) + " is " +
                                    slice_class_name(s.classification));
  return 0.5 * std::sqrt(s.h_norm_sq);
}

double lower_bound_riemannian(std::span<const double> H_field,
                              std::span<const double> X_dot_N_field) {
  if (H_field.empty() || H_field.size() != X_dot_N_field.size())
    throw InvalidParameter("mismatched boundary fields");
  double inf = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < H_field.size(); ++i) {
    const double v = H_field[i] + X_dot_N_field[i];
    if (v < -1e-12 * std::max(1.0, std::abs(H_field[i])))
      throw PreconditionViolation("H + g(X,N) nonnegative",
                                  "violated with value " + format_value(v));
    inf = std::min(inf, v);
  }
  return 0.5 * inf;
}

double upper_bound(const SphereSlice& s) {
  if (s.h_norm_sq < 0.0)
    throw PreconditionViolation("spacelike mean curvature vector",
                                "theta+ theta- < 0 at rho = " + format_value(s.rho));
  return 0.5 * std::sqrt(s.h_norm_sq);
}

BoundReport assemble_bounds(const SphericalDataSet& d, double rho_b,
                            const JangSolution& jang, bool numeric_cross_check,
                            int spectrum_n, double equality_tol) {
  BoundReport rep;
  rep.equality_tol = equality_tol;
  const SphereSlice outer = slice(d, rho_b);

  rep.hypotheses.push_back({"untrapped boundary",
                            outer.classification == SliceClass::untrapped,
                            "theta+ = " + format_value(outer.theta_plus) +
                                ", theta- = " + format_value(outer.theta_minus)});
  if (outer.classification != SliceClass::untrapped)
    throw PreconditionViolation("untrapped boundary",
                                "boundary slice is " + slice_class_name(outer.classification));

  // the induced boundary metric is round of radius r(rho_b)
  const double rb = outer.area_radius;
  rep.lambda1 = 1.0 / rb;
  rep.lambda1_method = "analytic-round";
  if (numeric_cross_check)
    rep.lambda1_cross_check = dirac_spectrum(sphere_profile(rb), 2.5, spectrum_n).lambda1;

  rep.lower_spacetime = lower_bound_spacetime(outer);

  // Riemannian bound on the Jang-deformed domain; the lhs of the boundary
  // identity is Hhat + ghat(X, N_inward), constant over the round slice.
  const double Hhat_b = 2.0 * d.dr(rho_b) / (jang.ghat_a.back() * d.r(rho_b));
  const double H_field[1] = {Hhat_b};
  const double X_dot_N[1] = {-jang.X_rad.back()};
  rep.lower_riemannian = lower_bound_riemannian(H_field, X_dot_N);
  rep.hypotheses.push_back({"deformed scalar curvature condition", jang.min_sy_margin >= -1e-4,
                            "min Schoen-Yau margin = " + format_value(jang.min_sy_margin)});

  rep.upper = upper_bound(outer);
  rep.hypotheses.push_back({"Tr_Sigma(K) constant", true, "spherically symmetric slice"});
  const bool minkowski =
      d.family() == Family::euclidean || d.family() == Family::hyperbolic_unit;
  rep.upper_applicable = minkowski;
  rep.hypotheses.push_back({"ambient Minkowski slice", minkowski,
                            "family " + family_name(d.family())});

  rep.baer = std::sqrt(4.0 * std::numbers::pi / (4.0 * std::numbers::pi * rb * rb));
  const double infK = 1.0 / (rb * rb);  // round boundary: constant curvature
  rep.friedrich_vacuous = infK < 0.0;
  rep.friedrich = rep.friedrich_vacuous ? 0.0 : std::sqrt(infK);

  rep.flags.lower_holds = *rep.lower_spacetime <= rep.lambda1 * (1.0 + rep.equality_tol);
  rep.flags.upper_holds =
      rep.upper_applicable && rep.lambda1 <= *rep.upper * (1.0 + rep.equality_tol);
  rep.flags.equality_lower = close_rel(*rep.lower_spacetime, rep.lambda1, rep.equality_tol);
  rep.flags.equality_upper =
      rep.upper_applicable && close_rel(*rep.upper, rep.lambda1, rep.equality_tol);
  rep.flags.rigidity_round_sphere = rep.flags.equality_lower;  // boundary is exactly round
  return rep;
}

BoundReport intrinsic_bounds(const RevolutionSurface& s, double k_max, int n) {
  BoundReport rep;
  const Spectrum spec = dirac_spectrum(s, k_max, n);
  rep.lambda1 = spec.lambda1;
  rep.lambda1_method = "numeric";

  rep.baer = std::sqrt(4.0 * std::numbers::pi / area(s));
  const auto [kmin, kmax_curv] = gauss_curvature_range(s);
  rep.friedrich_vacuous = kmin < 0.0;
  rep.friedrich = rep.friedrich_vacuous ? 0.0 : std::sqrt(kmin);

  const bool baer_ok = rep.lambda1 * rep.lambda1 >= rep.baer * rep.baer * (1.0 - rep.equality_tol);
  const bool friedrich_ok = rep.friedrich_vacuous ||
      rep.lambda1 * rep.lambda1 >= rep.friedrich * rep.friedrich * (1.0 - rep.equality_tol);
  rep.hypotheses.push_back({"Baer bound", baer_ok,
                            "lambda1^2 Area / 4pi = " +
                                format_value(rep.lambda1 * rep.lambda1 * area(s) /
                                             (4.0 * std::numbers::pi))});
  rep.hypotheses.push_back({"Friedrich bound", friedrich_ok,
                            "inf K_Sigma = " + format_value(kmin)});
  rep.flags.lower_holds = baer_ok && friedrich_ok;

  // rigidity only when the Baer bound is saturated and the curvature is constant
  const bool round_metric =
      (kmax_curv - kmin) <= 1e-3 * std::max(std::abs(kmax_curv), std::abs(kmin));
  rep.flags.equality_lower =
      close_rel(rep.lambda1 * rep.lambda1 * area(s), 4.0 * std::numbers::pi, rep.equality_tol);
  rep.flags.rigidity_round_sphere = rep.flags.equality_lower && round_metric;
  return rep;
}

}  // namespace untrapped
