#pragma once

#include <optional>
#include <vector>

namespace untrapped {

/// Cubic spline interpolant on a strictly increasing (possibly non-uniform) grid.
/// End conditions are either natural (zero second derivative) or clamped to
/// prescribed end slopes.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> x, std::vector<double> y,
              std::optional<double> slope_left = std::nullopt,
              std::optional<double> slope_right = std::nullopt);

  double operator()(double x) const;
  double derivative(double x) const;
  double second_derivative(double x) const;

  /// Exact integral of the interpolant over [a, b] (clamped to the grid range).
  double integral(double a, double b) const;

  bool empty() const { return x_.empty(); }
  const std::vector<double>& knots() const { return x_; }

 private:
  std::size_t interval(double x) const;

  std::vector<double> x_, y_, m_;  // m_: second derivatives at the knots
};

}  // namespace untrapped
