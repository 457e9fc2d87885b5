#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "untrapped/jang.hpp"
#include "untrapped/revolution_surface.hpp"
#include "untrapped/sphere_slices.hpp"

namespace untrapped {

struct Hypothesis {
  std::string name;
  bool satisfied;
  std::string witness;
};

/// Assembled eigenvalue bounds for one scenario, with the measured lambda_1,
/// gaps, and equality / rigidity flags.
struct BoundReport {
  double lambda1 = 0.0;
  std::string lambda1_method;                 // "analytic-round" or "numeric"
  std::optional<double> lambda1_cross_check;  // numeric value when both exist

  std::optional<double> lower_spacetime;   // 1/2 inf sqrt(H^2 - TrSigmaK^2)
  std::optional<double> lower_riemannian;  // 1/2 inf (Hhat + ghat(X, N_inward))
  std::optional<double> upper;             // 1/2 sup sqrt(H^2 - TrSigmaK^2)
  bool upper_applicable = false;           // ambient-Minkowski scenarios only
  double baer = 0.0;                       // sqrt(4 pi / Area)
  double friedrich = 0.0;                  // sqrt(max(0, inf K_Sigma))
  bool friedrich_vacuous = false;

  struct Flags {
    bool lower_holds = false;
    bool upper_holds = false;
    bool equality_lower = false;
    bool equality_upper = false;
    bool rigidity_round_sphere = false;
  } flags;

  double equality_tol = 1e-3;  // relative gap for the equality flags
  std::vector<Hypothesis> hypotheses;

  bool all_bounds_hold() const;
  nlohmann::json to_json() const;
};

/// 1/2 sqrt(theta+ theta-); requires an untrapped slice.
double lower_bound_spacetime(const SphereSlice& s);

/// 1/2 inf (H + g(X, N)) with N the inward normal; requires the integrand
/// nonnegative pointwise.
double lower_bound_riemannian(std::span<const double> H_field,
                              std::span<const double> X_dot_N_field);

/// 1/2 sup sqrt(H^2 - TrSigmaK^2); requires Tr_Sigma(K) constant over the
/// slice (automatic in spherical symmetry).
double upper_bound(const SphereSlice& s);

/// Bound assembly for a spherically symmetric data scenario. The boundary
/// metric is exactly round, so lambda1 = 1/r(rho_b) analytically; the numeric
/// spectrum, when requested, is recorded as a cross-check.
BoundReport assemble_bounds(const SphericalDataSet& d, double rho_b,
                            const JangSolution& jang, bool numeric_cross_check,
                            int spectrum_n = 512, double equality_tol = 1e-3);

/// Intrinsic-only assembly for a revolution surface (Baer / Friedrich bounds
/// against the numeric spectrum).
BoundReport intrinsic_bounds(const RevolutionSurface& s, double k_max = 3.5, int n = 1024);

}  // namespace untrapped
