#include "untrapped/revolution_surface.hpp"

#include <cmath>
#include <numbers>

#include "untrapped/csv.hpp"
#include "untrapped/finite_diff.hpp"
#include "untrapped/errors.hpp"

namespace untrapped {

RevolutionSurface::RevolutionSurface(std::vector<double> t, std::vector<double> f,
                                     std::pair<double, double> pole_slopes)
    : t_(std::move(t)), f_(std::move(f)), pole_slopes_(pole_slopes) {
  if (t_.size() < 8 || t_.size() != f_.size())
    throw InvalidParameter("profile needs >= 8 matching samples");
  if (t_.front() != 0.0) throw InvalidParameter("profile grid must start at t = 0");
  for (std::size_t i = 1; i < t_.size(); ++i)
    if (!(t_[i] > t_[i - 1])) throw InvalidParameter("profile grid must be strictly increasing");
  if (!(t_.back() > 0.0)) throw InvalidParameter("profile length must be positive");
  for (std::size_t i = 1; i + 1 < f_.size(); ++i)
    if (!(f_[i] > 0.0)) throw InvalidParameter("interior profile samples must be positive");
  const double tol = 1e-6;
  if (std::abs(pole_slopes_.first - 1.0) > tol || std::abs(pole_slopes_.second + 1.0) > tol)
    throw InvalidParameter("pole slopes must be (+1, -1) for a smooth closed sphere");
  spline_ = CubicSpline(t_, f_, pole_slopes_.first, pole_slopes_.second);
}

RevolutionSurface RevolutionSurface::scaled(double c) const {
  if (!(c > 0.0)) throw InvalidParameter("scale factor must be positive");
  std::vector<double> ts(t_), fs(f_);
  for (auto& v : ts) v *= c;
  for (auto& v : fs) v *= c;
  return RevolutionSurface(std::move(ts), std::move(fs), pole_slopes_);
}

RevolutionSurface sphere_profile(double r, int n) {
  if (!(r > 0.0)) throw InvalidParameter("sphere radius must be positive");
  if (n < 16) throw InvalidParameter("sphere profile needs n >= 16");
  const double L = std::numbers::pi * r;
  std::vector<double> t(n + 1), f(n + 1);
  for (int i = 0; i <= n; ++i) {
    t[i] = L * i / n;
    f[i] = r * std::sin(t[i] / r);
  }
  f.front() = 0.0;
  f.back() = 0.0;
  return RevolutionSurface(std::move(t), std::move(f), {1.0, -1.0});
}

RevolutionSurface spheroid_profile(double a, double c, int n) {
  if (!(a > 0.0) || !(c > 0.0)) throw InvalidParameter("spheroid semi-axes must be positive");
  if (n < 16) throw InvalidParameter("spheroid profile needs n >= 16");

  // meridian (a sin phi, c cos phi), phi in [0, pi]; arclength by composite
  // Simpson on each phi interval (8 panels apiece)
  auto speed = [&](double phi) {
    const double cs = std::cos(phi), sn = std::sin(phi);
    return std::sqrt(a * a * cs * cs + c * c * sn * sn);
  };
  const double pi = std::numbers::pi;
  std::vector<double> t(n + 1), f(n + 1);
  t[0] = 0.0;
  f[0] = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double p0 = pi * (i - 1) / n, p1 = pi * i / n;
    const int panels = 8;
    const double h = (p1 - p0) / panels;
    double s = speed(p0) + speed(p1);
    for (int j = 1; j < panels; ++j) s += (j % 2 ? 4.0 : 2.0) * speed(p0 + j * h);
    t[i] = t[i - 1] + s * h / 3.0;
    f[i] = a * std::sin(p1);
  }
  f[n] = 0.0;
  return RevolutionSurface(std::move(t), std::move(f), {1.0, -1.0});
}

double area(const RevolutionSurface& s) {
  return 2.0 * std::numbers::pi * s.spline().integral(0.0, s.length());
}

double gauss_curvature(const RevolutionSurface& s, double t, bool allow_pole_extrapolation) {
  const auto& grid = s.grid();
  if (!(t > 0.0) || !(t < s.length())) throw InvalidParameter("curvature point must be interior");
  const bool near_pole = (t < grid[1]) || (t > grid[grid.size() - 2]);
  if (near_pole && !allow_pole_extrapolation)
    throw PoleProximity("curvature evaluation within one grid cell of a pole");
  const double tt = near_pole ? std::clamp(t, grid[1], grid[grid.size() - 2]) : t;
  return -s.profile_d2(tt) / s.profile(tt);
}

std::pair<double, double> gauss_curvature_range(const RevolutionSurface& s) {
  const auto& grid = s.grid();
  double lo = gauss_curvature(s, grid[1]);
  double hi = lo;
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const double k = gauss_curvature(s, grid[i]);
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  }
  return {lo, hi};
}

RevolutionSurface load_profile_csv(const std::filesystem::path& path) {
  const CsvTable table = read_csv(path);
  if (table.columns.size() != 2) throw ParseError(path.string(), "profile CSV needs two columns (t, f)");
  std::vector<double> t = table.data[0], f = table.data[1];
  const std::size_t n = t.size();
  if (n < 8) throw ParseError(path.string(), "profile CSV needs >= 8 samples");
  // pole slopes from one-sided five-point fits (first differences are too
  // crude to meet the smooth-closure tolerance)
  auto end_slope = [&](bool left) {
    std::vector<double> nodes(5), vals(5);
    for (int i = 0; i < 5; ++i) {
      const std::size_t j = left ? i : n - 5 + i;
      nodes[i] = t[j];
      vals[i] = f[j];
    }
    const auto w = fd_weights(left ? t.front() : t.back(), nodes, 1);
    double s = 0.0;
    for (int i = 0; i < 5; ++i) s += w[i] * vals[i];
    return s;
  };
  return RevolutionSurface(std::move(t), std::move(f), {end_slope(true), end_slope(false)});
}

void save_profile_csv(const std::filesystem::path& path, const RevolutionSurface& s) {
  CsvTable table;
  table.columns = {"t", "f"};
  table.data = {s.grid(), s.samples()};
  write_csv(path, table);
}

}  // namespace untrapped
