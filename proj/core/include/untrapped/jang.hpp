#pragma once

#include <span>
#include <vector>

#include "untrapped/initial_data.hpp"

namespace untrapped {

/// Pointwise energy / momentum densities from the closed-form reduction.
double energy_density_at(const SphericalDataSet& d, double rho);
double momentum_density_at(const SphericalDataSet& d, double rho);

struct JangParams {
  int n = 1024;              // solve-grid intervals on [rho_min, rho_b]
  double tol = 1e-9;         // Newton sup-norm target (scaled by the K field size)
  int max_iterations = 60;
  int max_backtracks = 20;   // line-search halvings
};

/// Solution of the reduced Jang equation with u(rho_b) = 0 and the
/// regular-center inner condition u'(rho_min) = kappa_T a rho (exact for the
/// umbilic and time-symmetric model families).
struct JangSolution {
  std::vector<double> rho;       // uniform solve grid ending at rho_b
  std::vector<double> u;
  std::vector<double> du;
  std::vector<double> f_lapse;   // 1/sqrt(1 + |grad u|^2), in (0, 1]
  std::vector<double> ghat_a;    // sqrt(a^2 + u'^2): radial coefficient of ghat
  std::vector<double> X_rad;     // outward ghat-orthonormal component of X
  std::vector<double> sy_margin; // slack of the deformed scalar-curvature inequality
  std::vector<double> residual;
  double residual_norm = 0.0;
  double min_sy_margin = 0.0;
  int iterations = 0;
};

/// Reduced Jang operator applied to a height field sampled on the data grid.
std::vector<double> jang_residual(const SphericalDataSet& d, std::span<const double> u);

JangSolution solve_jang_dirichlet(const SphericalDataSet& d, double rho_b,
                                  const JangParams& params = {});

/// X = omega - grad_ghat log f along the graph (recomputed from the solution).
std::vector<double> jang_vector_field(const SphericalDataSet& d, const JangSolution& sol);

/// Scalar curvature of the deformed metric ghat = ghat_a^2 drho^2 + r^2 dOmega^2.
std::vector<double> deformed_scalar_curvature(const SphericalDataSet& d,
                                              const JangSolution& sol);

std::vector<double> schoen_yau_margin(const SphericalDataSet& d, const JangSolution& sol);

struct BoundaryIdentity {
  double lhs;        // Hhat - ghat(X, Nhat), outward normal
  double rhs_plus;   // f^{-1} H - |grad u| Tr_Sigma(K)
  double rhs_minus;  // f^{-1} H + |grad u| Tr_Sigma(K)
  int sigma;         // matching sign (+1 / -1; 0 when both match)
  double bound;      // sqrt(H^2 - Tr_Sigma(K)^2) of the undeformed boundary slice
};

/// Requires an untrapped boundary slice.
BoundaryIdentity boundary_identity_check(const SphericalDataSet& d, const JangSolution& sol);

}  // namespace untrapped
