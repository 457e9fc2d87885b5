#pragma once

#include <span>
#include <vector>

namespace untrapped {

/// Fornberg weights: coefficients w such that sum_i w[i] f(nodes[i]) approximates
/// the `order`-th derivative of f at x0, exact on polynomials of degree < nodes.size().
std::vector<double> fd_weights(double x0, std::span<const double> nodes, int order);

/// Derivative of sampled values on a (possibly non-uniform) strictly increasing grid.
/// Uses `stencil`-point centered stencils in the interior and one-sided at the ends;
/// stencil must be odd and >= 3.
std::vector<double> fd_derivative(std::span<const double> x, std::span<const double> y,
                                  int order = 1, int stencil = 3);

/// Root of a continuous scalar function by bisection; f(lo) and f(hi) must bracket.
template <class F>
double bisect(F&& f, double lo, double hi, double xtol) {
  double flo = f(lo);
  for (int it = 0; it < 200 && hi - lo > xtol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((flo <= 0.0) == (fm <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace untrapped
