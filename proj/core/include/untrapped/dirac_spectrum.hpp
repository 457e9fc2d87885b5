#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "untrapped/revolution_surface.hpp"

namespace untrapped {

/// Fourier mode index k in Z + 1/2, stored as the odd numerator of k = num/2.
/// The spin structure on the fiber circle is the antiperiodic one, so integer
/// modes are rejected.
class ModeIndex {
 public:
  explicit ModeIndex(int numerator);
  static ModeIndex from_value(double k);

  int numerator() const { return num_; }
  double value() const { return num_ / 2.0; }
  std::string label() const;  // "1/2", "-3/2", ...

  bool operator<(const ModeIndex& o) const { return num_ < o.num_; }
  bool operator==(const ModeIndex& o) const { return num_ == o.num_; }

 private:
  int num_;
};

/// Reduced mode operator: a symmetric tridiagonal 2n x 2n matrix on a staggered
/// interior grid (no sample at t = 0 or t = L). The two spinor-density
/// components interleave on the fine grid tau_m = m L/(2n+1); couplings are
/// evaluated at edge midpoints, which makes the matrix symmetric by
/// construction.
struct ModeProblem {
  ModeIndex k;
  int n;
  std::vector<double> diag;     // size 2n (identically zero for this operator)
  std::vector<double> offdiag;  // size 2n-1

  Eigen::MatrixXd dense() const;
};

ModeProblem build_mode_problem(const RevolutionSurface& s, ModeIndex k, int n);

/// All 2n eigenvalues of the mode problem, ascending.
std::vector<double> mode_eigenvalues(const ModeProblem& problem);

struct Spectrum {
  std::vector<double> eigenvalues;                  // union over modes, ascending
  std::map<ModeIndex, std::vector<double>> per_mode;
  double lambda1 = 0.0;        // smallest positive eigenvalue
  double min_abs = 0.0;        // margin of the spectrum away from zero
  double error_estimate = 0.0; // relative lambda1 shift between n and 2n
};

/// Union of per-mode spectra for |k| <= k_max (count_per_mode eigenvalues kept
/// per sign and mode). Also solves at 2n to record a discretization-error
/// estimate.
Spectrum dirac_spectrum(const RevolutionSurface& s, double k_max, int n,
                        int count_per_mode = 8);

/// First positive eigenvalue by a resolution ladder: n doubles until two
/// successive estimates agree to 1e-4 relative (at most 5 refinements).
double lambda1(const RevolutionSurface& s, double k_max = 3.5);

/// Cluster positive eigenvalues into distinct levels (relative gap threshold).
std::vector<double> distinct_levels(const std::vector<double>& positives,
                                    double rel_gap = 5e-3);

}  // namespace untrapped
