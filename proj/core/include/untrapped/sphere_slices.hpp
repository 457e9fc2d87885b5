#pragma once

#include <string>
#include <vector>

#include "untrapped/initial_data.hpp"

namespace untrapped {

enum class SliceClass {
  untrapped,
  future_trapped,
  past_trapped,
  apparent_horizon,
  degenerate,
};

std::string slice_class_name(SliceClass c);

/// Extrinsic data of the coordinate sphere Sigma_rho. Sign convention anchored
/// by the Euclidean unit sphere having H = +2 (outward-increasing area).
struct SphereSlice {
  double rho = 0.0;
  double area_radius = 0.0;
  double H = 0.0;           // mean curvature of Sigma in the slice
  double trK_sigma = 0.0;   // Tr_Sigma(K) = 2 kappa_T
  double theta_plus = 0.0;  // H + Tr_Sigma(K)
  double theta_minus = 0.0; // H - Tr_Sigma(K)
  double h_norm_sq = 0.0;   // |mean curvature vector|^2 = theta+ theta-
  SliceClass classification = SliceClass::untrapped;
  bool edge_warning = false;  // rho within one grid cell of the data boundary
};

SliceClass classify(double theta_plus, double theta_minus, double tol);

SphereSlice slice(const SphericalDataSet& d, double rho);

/// All sign changes of theta_+ and theta_- over [lo, hi], refined by bisection
/// to 1e-10 in rho; double roots are merged. An empty list certifies the
/// no-apparent-horizon hypothesis on the interval up to grid resolution.
std::vector<double> horizon_scan(const SphericalDataSet& d, double lo, double hi);

/// Slice table over the data grid, for CSV emission and sweeps.
std::vector<SphereSlice> slice_table(const SphericalDataSet& d);

}  // namespace untrapped
