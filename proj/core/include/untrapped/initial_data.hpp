#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "untrapped/spline.hpp"

namespace untrapped {

enum class Family {
  euclidean,
  hyperbolic_unit,
  schwarzschild_isotropic,
  maximal_slice_custom,
  custom,
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct Grid {
  double rho_min;
  double rho_max;
  int n;  // intervals; the grid carries n+1 nodes
};

/// Spherically symmetric initial data (g, K) with
///   g = a(rho)^2 drho^2 + r(rho)^2 dOmega^2,
/// K stored by its orthonormal eigenvalues (kappa_rho, kappa_T). Built-in
/// families evaluate fields and their derivatives in closed form; custom data
/// goes through cubic splines of the samples.
class SphericalDataSet {
 public:
  using Fn = std::function<double(double)>;

  static SphericalDataSet make(Family family, nlohmann::json params,
                               std::vector<double> rho,
                               Fn a, Fn da, Fn r, Fn dr, Fn d2r,
                               Fn kappa_rho, Fn kappa_T, Fn dkappa_T);

  Family family() const { return family_; }
  const nlohmann::json& params() const { return params_; }

  const std::vector<double>& rho() const { return rho_; }
  const std::vector<double>& a_samples() const { return a_; }
  const std::vector<double>& r_samples() const { return r_; }
  const std::vector<double>& kappa_rho_samples() const { return kr_; }
  const std::vector<double>& kappa_T_samples() const { return kt_; }
  double rho_min() const { return rho_.front(); }
  double rho_max() const { return rho_.back(); }

  double a(double rho) const { return a_fn_(rho); }
  double da(double rho) const { return da_fn_(rho); }
  double r(double rho) const { return r_fn_(rho); }
  double dr(double rho) const { return dr_fn_(rho); }
  double d2r(double rho) const { return d2r_fn_(rho); }
  double kappa_rho(double rho) const { return kr_fn_(rho); }
  double kappa_T(double rho) const { return kt_fn_(rho); }
  double dkappa_T(double rho) const { return dkt_fn_(rho); }

  /// Orthonormal-frame identities Tr K = kappa_rho + 2 kappa_T,
  /// |K|^2 = kappa_rho^2 + 2 kappa_T^2.
  double trK(double rho) const;
  double K_norm2(double rho) const;

  /// Scalar curvature of g at one point (closed-form warped reduction).
  double scalar_curvature_at(double rho) const;

  bool r_strictly_increasing() const;

  nlohmann::json to_json() const;

 private:
  Family family_ = Family::custom;
  nlohmann::json params_;
  std::vector<double> rho_, a_, r_, kr_, kt_;
  Fn a_fn_, da_fn_, r_fn_, dr_fn_, d2r_fn_, kr_fn_, kt_fn_, dkt_fn_;
};

std::vector<double> uniform_grid(const Grid& grid);

SphericalDataSet make_family(Family family, const nlohmann::json& params, const Grid& grid);

/// Custom data from sampled fields (spline-backed evaluators).
SphericalDataSet make_custom(std::vector<double> rho, std::vector<double> a,
                             std::vector<double> r, std::vector<double> kappa_rho,
                             std::vector<double> kappa_T,
                             Family tag = Family::custom);

struct ConstraintFields {
  std::vector<double> R;          // scalar curvature of g
  std::vector<double> mu;         // energy density
  std::vector<double> J_rad;      // radial orthonormal momentum density
  std::vector<double> dec_margin; // mu - |J|
};

std::vector<double> scalar_curvature(const SphericalDataSet& d);
ConstraintFields constraint_fields(const SphericalDataSet& d);

struct DecReport {
  bool satisfied;
  double min_margin;
  double at_rho;
};

/// Dominant energy condition mu >= |J| up to a -1e-8 floor.
DecReport check_dec(const SphericalDataSet& d);

}  // namespace untrapped
