#pragma once

#include <filesystem>
#include <utility>
#include <vector>

#include "untrapped/spline.hpp"

namespace untrapped {

/// Topological 2-sphere of revolution with metric dt^2 + f(t)^2 dtheta^2,
/// t in [0, L]. The profile is sampled (endpoints carry f = 0) and evaluated
/// through a clamped cubic spline whose end slopes are the pole slopes.
class RevolutionSurface {
 public:
  RevolutionSurface(std::vector<double> t, std::vector<double> f,
                    std::pair<double, double> pole_slopes);

  double length() const { return t_.back(); }
  const std::vector<double>& grid() const { return t_; }
  const std::vector<double>& samples() const { return f_; }
  std::pair<double, double> pole_slopes() const { return pole_slopes_; }

  double profile(double t) const { return spline_(t); }
  double profile_d1(double t) const { return spline_.derivative(t); }
  double profile_d2(double t) const { return spline_.second_derivative(t); }
  const CubicSpline& spline() const { return spline_; }

  /// Scale the surface by c > 0 (f -> c f, L -> c L); eigenvalues scale by 1/c.
  RevolutionSurface scaled(double c) const;

 private:
  std::vector<double> t_, f_;
  std::pair<double, double> pole_slopes_;
  CubicSpline spline_;
};

/// Round sphere of radius r: L = pi r, f(t) = r sin(t/r).
RevolutionSurface sphere_profile(double r, int n = 2048);

/// Arclength-reparametrized spheroid x^2/a^2 + y^2/a^2 + z^2/c^2 = 1.
RevolutionSurface spheroid_profile(double a, double c, int n);

/// Area 2 pi \int_0^L f dt, integrated on the sample grid.
double area(const RevolutionSurface& s);

/// Gauss curvature -f''(t)/f(t) at an interior point. Within one grid cell of a
/// pole this is ill-conditioned and throws PoleProximity unless the caller opts
/// into the one-sided extrapolated value.
double gauss_curvature(const RevolutionSurface& s, double t,
                       bool allow_pole_extrapolation = false);

/// Min/max of the Gauss curvature over the valid interior sample range.
std::pair<double, double> gauss_curvature_range(const RevolutionSurface& s);

/// Profile I/O: CSV with two columns (t, f).
RevolutionSurface load_profile_csv(const std::filesystem::path& path);
void save_profile_csv(const std::filesystem::path& path, const RevolutionSurface& s);

}  // namespace untrapped
