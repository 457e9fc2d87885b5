#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "untrapped/errors.hpp"
#include "untrapped/initial_data.hpp"

namespace testutil {

// ---------------------------------------------------------------------------
// adaptive Simpson quadrature (independent oracle for arclengths and areas)
// ---------------------------------------------------------------------------
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-12, int depth = 24) {
  struct Impl {
    const std::function<double(double)>& f;
    double recurse(double a, double m, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
      const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
      const double flm = f(lm), frm = f(rm);
      const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
      const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
      if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
      return recurse(a, lm, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
             recurse(m, rm, b, fm, frm, fb, right, tol / 2.0, depth - 1);
    }
  } impl{f};
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return impl.recurse(a, m, b, fa, fm, fb, whole, tol, depth);
}

// ---------------------------------------------------------------------------
// closed-form spheroid surface areas
// ---------------------------------------------------------------------------
inline double prolate_area(double a, double c) {  // c > a
  const double e = std::sqrt(1.0 - (a * a) / (c * c));
  const double pi = 3.14159265358979323846;
  return 2.0 * pi * a * a * (1.0 + (c / (a * e)) * std::asin(e));
}

inline double oblate_area(double a, double c) {  // a > c
  const double e = std::sqrt(1.0 - (c * c) / (a * a));
  const double pi = 3.14159265358979323846;
  return 2.0 * pi * a * a + (pi * c * c / e) * std::log((1.0 + e) / (1.0 - e));
}

// round-sphere Dirac eigenvalue ladder: per mode k the positive eigenvalues are
// (|k| + 1/2 + j) / r, j >= 0; the union carries +-(q+1)/r with multiplicity 2(q+1)
inline double sphere_mode_eigenvalue(double k, int j, double r) {
  return (std::abs(k) + 0.5 + j) / r;
}

// ---------------------------------------------------------------------------
// independent scalar-curvature oracle: central finite differences of the full
// 3D metric in Cartesian-like coordinates, Richardson extrapolated
// ---------------------------------------------------------------------------
inline double cartesian_scalar_curvature(const untrapped::SphericalDataSet& d, double rho0,
                                         double h = 4e-3) {
  using Mat3 = std::array<std::array<double, 3>, 3>;
  auto metric = [&](const std::array<double, 3>& x) {
    const double rho = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    const double rr = d.r(rho), aa = d.a(rho);
    Mat3 g{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const double nij = x[i] * x[j] / (rho * rho);
        g[i][j] = (rr * rr / (rho * rho)) * ((i == j ? 1.0 : 0.0) - nij) + aa * aa * nij;
      }
    return g;
  };
  auto invert = [](const Mat3& g) {
    Mat3 inv{};
    const double det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                       g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                       g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    inv[0][0] = (g[1][1] * g[2][2] - g[1][2] * g[2][1]) / det;
    inv[0][1] = (g[0][2] * g[2][1] - g[0][1] * g[2][2]) / det;
    inv[0][2] = (g[0][1] * g[1][2] - g[0][2] * g[1][1]) / det;
    inv[1][0] = (g[1][2] * g[2][0] - g[1][0] * g[2][2]) / det;
    inv[1][1] = (g[0][0] * g[2][2] - g[0][2] * g[2][0]) / det;
    inv[1][2] = (g[0][2] * g[1][0] - g[0][0] * g[1][2]) / det;
    inv[2][0] = (g[1][0] * g[2][1] - g[1][1] * g[2][0]) / det;
    inv[2][1] = (g[0][1] * g[2][0] - g[0][0] * g[2][1]) / det;
    inv[2][2] = (g[0][0] * g[1][1] - g[0][1] * g[1][0]) / det;
    return inv;
  };

  auto scalar_at_step = [&](double step) {
    // evaluation point off every coordinate axis
    const std::array<double, 3> dir{0.48, 0.6, 0.64};
    std::array<double, 3> x0{rho0 * dir[0], rho0 * dir[1], rho0 * dir[2]};

    auto christoffel = [&](const std::array<double, 3>& x) {
      std::array<Mat3, 3> dg{};  // dg[k][i][j] = d_k g_ij
      for (int k = 0; k < 3; ++k) {
        auto xp = x, xm = x;
        xp[k] += step;
        xm[k] -= step;
        const Mat3 gp = metric(xp), gm = metric(xm);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) dg[k][i][j] = (gp[i][j] - gm[i][j]) / (2.0 * step);
      }
      const Mat3 ginv = invert(metric(x));
      std::array<Mat3, 3> gamma{};  // gamma[k][i][j] = Gamma^k_ij
      for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int l = 0; l < 3; ++l)
              s += ginv[k][l] * (dg[i][l][j] + dg[j][l][i] - dg[l][i][j]);
            gamma[k][i][j] = 0.5 * s;
          }
      return gamma;
    };

    const auto gamma0 = christoffel(x0);
    std::array<std::array<Mat3, 3>, 3> dgamma{};  // dgamma[m][k][i][j] = d_m Gamma^k_ij
    for (int m = 0; m < 3; ++m) {
      auto xp = x0, xm = x0;
      xp[m] += step;
      xm[m] -= step;
      const auto gp = christoffel(xp), gm = christoffel(xm);
      for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            dgamma[m][k][i][j] = (gp[k][i][j] - gm[k][i][j]) / (2.0 * step);
    }
    const Mat3 ginv = invert(metric(x0));
    double R = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double ric = 0.0;
        for (int k = 0; k < 3; ++k) {
          ric += dgamma[k][k][i][j] - dgamma[j][k][i][k];
          for (int l = 0; l < 3; ++l)
            ric += gamma0[k][k][l] * gamma0[l][i][j] - gamma0[k][j][l] * gamma0[l][i][k];
        }
        R += ginv[i][j] * ric;
      }
    return R;
  };

  const double coarse = scalar_at_step(h);
  const double fine = scalar_at_step(h / 2.0);
  return (4.0 * fine - coarse) / 3.0;  // Richardson, O(h^4)
}

// ---------------------------------------------------------------------------
// random spherically symmetric data with a regular center (fields extend
// smoothly to rho = 0 with a(0) = 1, isotropic K), candidates for the
// dominant energy condition filter
// ---------------------------------------------------------------------------
inline untrapped::SphericalDataSet random_regular_center_data(std::mt19937& rng,
                                                              double rho_min, double rho_max,
                                                              int n) {
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  const double k0 = 0.45 * U(rng), k1 = 0.35 * U(rng), k2 = 0.15 * U(rng);
  const double q0 = 0.40 * U(rng), q1 = 0.20 * U(rng);
  const double a0 = 0.25 * U(rng) + 0.10, a1 = 0.15 * U(rng);

  auto kt = [=](double x) { return k0 + k1 * x * x + k2 * x * x * x * x; };
  auto dkt = [=](double x) { return 2.0 * k1 * x + 4.0 * k2 * x * x * x; };
  auto kr = [=](double x) { return kt(x) + x * x * (q0 + q1 * x * x); };
  auto a = [=](double x) { return 1.0 + x * x * (a0 + a1 * x * x); };
  auto da = [=](double x) { return 2.0 * a0 * x + 4.0 * a1 * x * x * x; };
  auto r = [](double x) { return x; };
  auto dr = [](double) { return 1.0; };
  auto d2r = [](double) { return 0.0; };

  for (double x = rho_min; x <= rho_max; x += (rho_max - rho_min) / 16.0)
    if (a(x) < 0.2) throw untrapped::InvalidParameter("degenerate random draw");

  return untrapped::SphericalDataSet::make(
      untrapped::Family::custom, nlohmann::json::object(),
      untrapped::uniform_grid({rho_min, rho_max, n}), a, da, r, dr, d2r, kr, kt, dkt);
}

// ---------------------------------------------------------------------------
// manufactured Jang solution: for the height u below, kappa_rho is chosen so
// that u solves the reduced Jang equation pointwise; every field has an exact
// closed-form derivative. Used to pin the divergence convention in the
// Schoen-Yau relation.
// ---------------------------------------------------------------------------
struct ManufacturedJang {
  untrapped::SphericalDataSet data;
  std::function<double(double)> u, du;

  static ManufacturedJang make(double rho_min, double rho_max, int n) {
    auto a = [](double x) { return 1.0 + x * x / 7.0 + x * x * x / 11.0; };
    auto da = [](double x) { return 2.0 * x / 7.0 + 3.0 * x * x / 11.0; };
    auto r = [](double x) { return x * (1.0 + x * x / 5.0); };
    auto dr = [](double x) { return 1.0 + 3.0 * x * x / 5.0; };
    auto d2r = [](double x) { return 6.0 * x / 5.0; };
    auto kt = [](double x) { return 1.0 / 3.0 + x * x / 13.0 + std::sin(x) / 9.0; };
    auto dkt = [](double x) { return 2.0 * x / 13.0 + std::cos(x) / 9.0; };
    auto u = [](double x) { return x * x / 3.0 + std::sin(3.0 * x) / 4.0; };
    auto du = [](double x) { return 2.0 * x / 3.0 + 0.75 * std::cos(3.0 * x); };
    auto d2u = [](double x) { return 2.0 / 3.0 - 2.25 * std::sin(3.0 * x); };

    auto kr = [=](double x) {
      const double p = du(x) / a(x);
      const double dp = d2u(x) / a(x) - du(x) * da(x) / (a(x) * a(x));
      const double W2 = 1.0 + p * p;
      const double W = std::sqrt(W2);
      // residual == 0 solved for kappa_rho
      return dp / (a(x) * W) + 2.0 * W2 * (dr(x) * p / (a(x) * r(x) * W) - kt(x));
    };

    auto d = untrapped::SphericalDataSet::make(
        untrapped::Family::custom, nlohmann::json::object(),
        untrapped::uniform_grid({rho_min, rho_max, n}), a, da, r, dr, d2r, kr, kt, dkt);
    return ManufacturedJang{std::move(d), u, du};
  }
};

}  // namespace testutil
