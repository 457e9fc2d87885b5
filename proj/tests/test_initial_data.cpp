#include <doctest.h>

#include <cmath>
#include <random>

#include "untrapped/errors.hpp"
#include "untrapped/finite_diff.hpp"
#include "untrapped/initial_data.hpp"
#include "test_helpers.hpp"

using namespace untrapped;

namespace {

SphericalDataSet round_s3_toy(double a0, const Grid& grid) {
  auto a = [a0](double x) { return 1.0 / std::sqrt(1.0 - x * x / (a0 * a0)); };
  auto da = [a0](double x) {
    return (x / (a0 * a0)) * std::pow(1.0 - x * x / (a0 * a0), -1.5);
  };
  auto zero = [](double) { return 0.0; };
  auto one = [](double) { return 1.0; };
  auto ident = [](double x) { return x; };
  return SphericalDataSet::make(Family::custom, nlohmann::json::object(), uniform_grid(grid),
                                a, da, ident, one, zero, zero, zero, zero);
}

}  // namespace

TEST_CASE("family construction") {
  const Grid grid{0.01, 2.0, 128};

  const auto eu = make_family(Family::euclidean, {}, grid);
  for (double x : {0.05, 0.8, 1.9}) {
    CHECK(eu.trK(x) == 0.0);
    CHECK(eu.a(x) == 1.0);
    CHECK(eu.r(x) == x);
  }

  const auto hy = make_family(Family::hyperbolic_unit, {}, grid);
  for (double x : {0.05, 0.8, 1.9}) {
    CHECK(hy.trK(x) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(hy.K_norm2(x) == doctest::Approx(3.0).epsilon(1e-14));
  }

  const auto sw = make_family(Family::schwarzschild_isotropic, {{"m", 1.0}}, grid);
  CHECK(sw.a(0.5) == doctest::Approx(4.0).epsilon(1e-14));

  CHECK_THROWS_AS(make_family(Family::schwarzschild_isotropic, {}, grid), InvalidParameter);
  CHECK_THROWS_AS(make_family(Family::schwarzschild_isotropic, {{"m", -1.0}}, grid),
                  InvalidParameter);
  CHECK_THROWS_AS(make_family(Family::euclidean, {}, Grid{-0.1, 1.0, 64}), InvalidParameter);
  CHECK_THROWS_AS(make_family(Family::euclidean, {}, Grid{0.01, 1.0, 4}), InvalidParameter);
}

TEST_CASE("scalar curvature of the built-in families") {
  const Grid grid{0.05, 1.8, 256};

  for (double R : scalar_curvature(make_family(Family::euclidean, {}, grid)))
    CHECK(std::abs(R) <= 1e-6);

  for (double R : scalar_curvature(make_family(Family::hyperbolic_unit, {}, grid)))
    CHECK(R == doctest::Approx(-6.0).epsilon(1e-4 / 6.0));

  // vacuum time-symmetric slice away from the inner margin
  const auto sw = make_family(Family::schwarzschild_isotropic, {{"m", 1.0}}, Grid{0.2, 2.0, 256});
  const auto Rs = scalar_curvature(sw);
  for (std::size_t i = 8; i < Rs.size(); ++i) CHECK(std::abs(Rs[i]) <= 1e-5);

  // round three-sphere portion: R = 6/a0^2
  const double a0 = 2.0;
  const auto toy = round_s3_toy(a0, Grid{0.05, 1.2, 256});
  for (double R : scalar_curvature(toy))
    CHECK(R == doctest::Approx(6.0 / (a0 * a0)).epsilon(1e-4));

  CHECK_THROWS_AS(scalar_curvature(make_family(Family::euclidean, {}, Grid{0.1, 1.0, 8})),
                  InvalidParameter);
}

TEST_CASE("independent curvature oracle: Cartesian finite differences") {
  const Grid grid{0.2, 1.4, 64};
  const auto families = {
      make_family(Family::euclidean, {}, grid),
      make_family(Family::hyperbolic_unit, {}, grid),
      make_family(Family::schwarzschild_isotropic, {{"m", 1.0}}, grid),
      round_s3_toy(2.0, grid),
  };
  for (const auto& d : families) {
    for (double rho : {0.4, 0.8, 1.2}) {
      const double closed_form = d.scalar_curvature_at(rho);
      const double fd = testutil::cartesian_scalar_curvature(d, rho);
      CHECK(std::abs(closed_form - fd) <= 1e-4 * std::max(1.0, std::abs(closed_form)));
    }
  }
}

TEST_CASE("constraint fields") {
  const Grid grid{0.05, 1.8, 256};

  SUBCASE("euclidean: vacuum") {
    const auto f = constraint_fields(make_family(Family::euclidean, {}, grid));
    for (std::size_t i = 0; i < f.mu.size(); ++i) {
      CHECK(std::abs(f.mu[i]) <= 1e-10);
      CHECK(std::abs(f.J_rad[i]) <= 1e-10);
    }
  }

  SUBCASE("hyperbolic: mu = (-6 - 3 + 9)/2 = 0, J = 0") {
    const auto f = constraint_fields(make_family(Family::hyperbolic_unit, {}, grid));
    for (std::size_t i = 0; i < f.mu.size(); ++i) {
      CHECK(std::abs(f.mu[i]) <= 1e-8);
      CHECK(std::abs(f.J_rad[i]) <= 1e-10);
    }
  }

  SUBCASE("round-S3 toy: mu = 3/a0^2") {
    const auto f = constraint_fields(round_s3_toy(2.0, Grid{0.05, 1.2, 256}));
    for (double mu : f.mu) CHECK(mu == doctest::Approx(0.75).epsilon(1e-4));
  }

  SUBCASE("kappa_T = 2 on the euclidean base: J from the divergence oracle") {
    auto zero = [](double) { return 0.0; };
    auto one = [](double) { return 1.0; };
    auto ident = [](double x) { return x; };
    auto two = [](double) { return 2.0; };
    const auto d = SphericalDataSet::make(Family::custom, {}, uniform_grid(Grid{0.2, 2.0, 400}),
                                          one, zero, ident, one, zero, zero, two, zero);
    const auto f = constraint_fields(d);
    // mu = (0 - 8 + 16)/2 = 4
    for (double mu : f.mu) CHECK(mu == doctest::Approx(4.0).epsilon(1e-12));
    // independent route: finite differences of the sampled stress components
    //   J = -div(K - TrK g), radial part pi_r' / a + (2 r'/(a r)) (pi_r - pi_t)
    const auto& rho = d.rho();
    std::vector<double> pi_r(rho.size()), pi_t(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) {
      pi_r[i] = -2.0 * d.kappa_T(rho[i]);
      pi_t[i] = -(d.kappa_rho(rho[i]) + d.kappa_T(rho[i]));
    }
    const auto dpi_r = fd_derivative(rho, pi_r);
    const auto dr_fd = fd_derivative(rho, d.r_samples());
    for (std::size_t i = 0; i < rho.size(); ++i) {
      const double div = dpi_r[i] / d.a(rho[i]) +
                         (2.0 * dr_fd[i] / (d.a(rho[i]) * d.r(rho[i]))) * (pi_r[i] - pi_t[i]);
      CHECK(f.J_rad[i] == doctest::Approx(-div).epsilon(1e-8));
      CHECK(f.J_rad[i] == doctest::Approx(4.0 / rho[i]).epsilon(1e-10));
    }
    // DEC: mu - |J| = 4 - 4/rho, negative inside rho < 1
    const auto dec = check_dec(d);
    CHECK(!dec.satisfied);
    CHECK(dec.at_rho == doctest::Approx(0.2));
    CHECK(dec.min_margin == doctest::Approx(4.0 - 4.0 / 0.2).epsilon(1e-10));
  }
}

TEST_CASE("check_dec on the model families") {
  const Grid grid{0.05, 1.8, 128};
  const auto eu = check_dec(make_family(Family::euclidean, {}, grid));
  CHECK(eu.satisfied);
  CHECK(std::abs(eu.min_margin) <= 1e-10);
  const auto hy = check_dec(make_family(Family::hyperbolic_unit, {}, grid));
  CHECK(hy.satisfied);
  CHECK(std::abs(hy.min_margin) <= 1e-8);
}

TEST_CASE("orthonormal accessor identities on random fields") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double kr = 3.0 * U(rng), kt = 3.0 * U(rng);
    auto one = [](double) { return 1.0; };
    auto zero = [](double) { return 0.0; };
    auto ident = [](double x) { return x; };
    const auto d = SphericalDataSet::make(Family::custom, {}, uniform_grid(Grid{0.1, 1.0, 16}),
                                          one, zero, ident, one, zero,
                                          [kr](double) { return kr; },
                                          [kt](double) { return kt; }, zero);
    CHECK(d.trK(0.5) == kr + 2.0 * kt);
    CHECK(d.K_norm2(0.5) == kr * kr + 2.0 * kt * kt);
  }
}

TEST_CASE("time-symmetric and umbilic reductions") {
  // K = 0 => mu = R/2, J = 0
  const auto sw = make_family(Family::schwarzschild_isotropic, {{"m", 0.7}}, Grid{0.5, 2.0, 128});
  const auto fields = constraint_fields(sw);
  const auto R = scalar_curvature(sw);
  for (std::size_t i = 0; i < R.size(); ++i) {
    CHECK(fields.mu[i] == doctest::Approx(R[i] / 2.0).epsilon(1e-14));
    CHECK(fields.J_rad[i] == 0.0);
  }

  // K = beta g with constant beta => mu = R/2 + 3 beta^2, J = 0
  const double beta = 0.8;
  auto one = [](double) { return 1.0; };
  auto zero = [](double) { return 0.0; };
  auto ident = [](double x) { return x; };
  auto b = [beta](double) { return beta; };
  const auto d = SphericalDataSet::make(Family::custom, {}, uniform_grid(Grid{0.1, 1.5, 128}),
                                        one, zero, ident, one, zero, b, b, zero);
  const auto f = constraint_fields(d);
  const auto Rd = scalar_curvature(d);
  for (std::size_t i = 0; i < f.mu.size(); ++i) {
    CHECK(f.mu[i] == doctest::Approx(Rd[i] / 2.0 + 3.0 * beta * beta).epsilon(1e-12));
    CHECK(std::abs(f.J_rad[i]) <= 1e-8);
  }
}

TEST_CASE("custom data from samples and serialization") {
  const auto base = make_family(Family::hyperbolic_unit, {}, Grid{0.05, 1.5, 512});
  auto d = make_custom(base.rho(), base.a_samples(), base.r_samples(),
                       base.kappa_rho_samples(), base.kappa_T_samples());
  // spline-backed evaluators reproduce the closed forms away from the ends
  for (double x : {0.3, 0.7, 1.2}) {
    CHECK(d.a(x) == doctest::Approx(base.a(x)).epsilon(1e-9));
    CHECK(d.dr(x) == doctest::Approx(1.0).epsilon(1e-7));
  }

  const auto j = base.to_json();
  CHECK(j.at("family") == "hyperbolic_unit");
  CHECK(j.at("grid").at("n") == 512);

  // maximal-slice tag validates Tr K = 0
  std::vector<double> kt(base.rho().size(), 0.3), kr(base.rho().size(), -0.6);
  CHECK_NOTHROW(make_custom(base.rho(), base.a_samples(), base.r_samples(), kr, kt,
                            Family::maximal_slice_custom));
  kr[5] = 0.1;
  CHECK_THROWS_AS(make_custom(base.rho(), base.a_samples(), base.r_samples(), kr, kt,
                              Family::maximal_slice_custom),
                  InvalidParameter);
}

TEST_CASE("monotone area radius is diagnosed, not fatal") {
  const auto sw = make_family(Family::schwarzschild_isotropic, {{"m", 1.0}}, Grid{0.4, 2.0, 64});
  CHECK(!sw.r_strictly_increasing());
  const auto sw2 = make_family(Family::schwarzschild_isotropic, {{"m", 1.0}}, Grid{0.6, 2.0, 64});
  CHECK(sw2.r_strictly_increasing());
}
