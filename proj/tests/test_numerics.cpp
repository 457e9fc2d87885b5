#include <doctest.h>

#include <cmath>
#include <vector>

#include "untrapped/errors.hpp"
#include "untrapped/finite_diff.hpp"
#include "untrapped/spline.hpp"

using namespace untrapped;

TEST_CASE("cubic spline interpolates and integrates") {
  // clamped spline on sin over [0, pi]
  const int n = 64;
  std::vector<double> x(n + 1), y(n + 1);
  for (int i = 0; i <= n; ++i) {
    x[i] = M_PI * i / n;
    y[i] = std::sin(x[i]);
  }
  const CubicSpline sp(x, y, 1.0, -1.0);
  for (double t : {0.3, 1.1, 2.4, 3.0}) {
    CHECK(sp(t) == doctest::Approx(std::sin(t)).epsilon(1e-8));
    CHECK(sp.derivative(t) == doctest::Approx(std::cos(t)).epsilon(1e-6));
    CHECK(sp.second_derivative(t) == doctest::Approx(-std::sin(t)).epsilon(1e-3));
  }
  CHECK(sp.integral(0.0, M_PI) == doctest::Approx(2.0).epsilon(1e-7));
  CHECK(sp.integral(0.5, 2.5) ==
        doctest::Approx(std::cos(0.5) - std::cos(2.5)).epsilon(1e-7));
  CHECK(sp.integral(2.5, 0.5) ==
        doctest::Approx(-(std::cos(0.5) - std::cos(2.5))).epsilon(1e-7));

  CHECK_THROWS_AS(CubicSpline({0.0, 1.0}, {0.0, 1.0}), InvalidParameter);
  CHECK_THROWS_AS(CubicSpline({0.0, 1.0, 0.5}, {0.0, 1.0, 2.0}), InvalidParameter);
}

TEST_CASE("natural spline on a non-uniform grid") {
  std::vector<double> x{0.0, 0.13, 0.4, 0.55, 1.0, 1.3, 2.1};
  std::vector<double> y;
  for (double v : x) y.push_back(v * v * v - v);  // cubic: reproduced away from the ends
  const CubicSpline sp(x, y);
  CHECK(sp(0.7) == doctest::Approx(0.7 * 0.7 * 0.7 - 0.7).epsilon(5e-3));
}

TEST_CASE("finite-difference weights") {
  // classic central second derivative
  const std::vector<double> nodes{-1.0, 0.0, 1.0};
  const auto w = fd_weights(0.0, nodes, 2);
  CHECK(w[0] == doctest::Approx(1.0));
  CHECK(w[1] == doctest::Approx(-2.0));
  CHECK(w[2] == doctest::Approx(1.0));

  // one-sided first derivative, three points
  const std::vector<double> onesided{0.0, 1.0, 2.0};
  const auto w1 = fd_weights(0.0, onesided, 1);
  CHECK(w1[0] == doctest::Approx(-1.5));
  CHECK(w1[1] == doctest::Approx(2.0));
  CHECK(w1[2] == doctest::Approx(-0.5));

  CHECK_THROWS_AS(fd_weights(0.0, nodes, 3), InvalidParameter);
}

TEST_CASE("grid derivatives converge at the expected order") {
  auto build = [](int n) {
    std::vector<double> x(n + 1), y(n + 1);
    for (int i = 0; i <= n; ++i) {
      x[i] = 2.0 * i / n;
      y[i] = std::exp(x[i]);
    }
    return std::pair{x, y};
  };
  auto max_err = [&](int n, int order, int stencil) {
    auto [x, y] = build(n);
    const auto d = fd_derivative(x, y, order, stencil);
    double err = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
      err = std::max(err, std::abs(d[i] - std::exp(x[i])));
    return err;
  };
  // 5-point first derivative: fourth order
  const double e1 = max_err(64, 1, 5), e2 = max_err(128, 1, 5);
  CHECK(e2 < e1 / 12.0);
  // 5-point second derivative: at least third order (one-sided ends dominate)
  const double s1 = max_err(64, 2, 5), s2 = max_err(128, 2, 5);
  CHECK(s2 < s1 / 7.0);
}

TEST_CASE("bisection") {
  const double root = bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-12);
  CHECK(root == doctest::Approx(std::sqrt(2.0)).epsilon(1e-11));
}
