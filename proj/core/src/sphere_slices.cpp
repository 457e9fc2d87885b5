#include "untrapped/sphere_slices.hpp"

#include <algorithm>
#include <cmath>

#include "untrapped/errors.hpp"
#include "untrapped/finite_diff.hpp"

namespace untrapped {

std::string slice_class_name(SliceClass c) {
  switch (c) {
    case SliceClass::untrapped: return "untrapped";
    case SliceClass::future_trapped: return "future_trapped";
    case SliceClass::past_trapped: return "past_trapped";
    case SliceClass::apparent_horizon: return "apparent_horizon";
    case SliceClass::degenerate: return "degenerate";
  }
  return "untrapped";
}

SliceClass classify(double theta_plus, double theta_minus, double tol) {
  if (!(tol > 0.0)) throw InvalidParameter("classification tolerance must be positive");
  if (std::abs(theta_plus) <= tol || std::abs(theta_minus) <= tol)
    return SliceClass::apparent_horizon;
  const bool future = theta_plus < -tol;
  const bool past = theta_minus < -tol;
  if (future && past) return SliceClass::degenerate;
  if (future) return SliceClass::future_trapped;
  if (past) return SliceClass::past_trapped;
  return SliceClass::untrapped;
}

SphereSlice slice(const SphericalDataSet& d, double rho) {
  if (rho < d.rho_min() - 1e-12 || rho > d.rho_max() + 1e-12)
    throw InvalidParameter("slice radius outside the data grid");
  SphereSlice s;
  s.rho = rho;
  s.area_radius = d.r(rho);
  s.H = 2.0 * d.dr(rho) / (d.a(rho) * d.r(rho));
  s.trK_sigma = 2.0 * d.kappa_T(rho);
  s.theta_plus = s.H + s.trK_sigma;
  s.theta_minus = s.H - s.trK_sigma;
  s.h_norm_sq = s.theta_plus * s.theta_minus;
  const double tol = 1e-8 * std::max({std::abs(s.theta_plus), std::abs(s.theta_minus), 1.0});
  s.classification = classify(s.theta_plus, s.theta_minus, tol);
  const auto& grid = d.rho();
  s.edge_warning = rho < grid[1] || rho > grid[grid.size() - 2];
  return s;
}

std::vector<double> horizon_scan(const SphericalDataSet& d, double lo, double hi) {
  if (lo < d.rho_min() - 1e-12 || hi > d.rho_max() + 1e-12 || !(hi > lo))
    throw InvalidParameter("horizon scan interval must lie inside the grid");

  auto theta = [&](double x, double sign) {
    return 2.0 * d.dr(x) / (d.a(x) * d.r(x)) + sign * 2.0 * d.kappa_T(x);
  };

  // sample on the data grid restricted to [lo, hi] plus the endpoints
  std::vector<double> xs;
  xs.push_back(lo);
  for (double x : d.rho())
    if (x > lo && x < hi) xs.push_back(x);
  xs.push_back(hi);

  std::vector<double> roots;
  for (double sign : {+1.0, -1.0}) {
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      const double f0 = theta(xs[i], sign), f1 = theta(xs[i + 1], sign);
      if (f0 == 0.0) roots.push_back(xs[i]);
      if ((f0 < 0.0) != (f1 < 0.0))
        roots.push_back(bisect([&](double x) { return theta(x, sign); }, xs[i], xs[i + 1], 1e-12));
    }
  }
  std::sort(roots.begin(), roots.end());
  // merge double roots (both expansions vanishing together)
  std::vector<double> merged;
  for (double r : roots)
    if (merged.empty() || r - merged.back() > 1e-9) merged.push_back(r);
  return merged;
}

std::vector<SphereSlice> slice_table(const SphericalDataSet& d) {
  std::vector<SphereSlice> out;
  out.reserve(d.rho().size());
  for (double x : d.rho()) out.push_back(slice(d, x));
  return out;
}

}  // namespace untrapped
