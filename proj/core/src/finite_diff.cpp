#include "untrapped/finite_diff.hpp"

#include <algorithm>
#include <cstddef>

#include "untrapped/errors.hpp"

namespace untrapped {

// B. Fornberg, "Generation of finite difference formulas on arbitrarily spaced
// grids", Math. Comp. 51 (1988).
std::vector<double> fd_weights(double x0, std::span<const double> nodes, int order) {
  const int n = static_cast<int>(nodes.size());
  if (order < 0 || n <= order) throw InvalidParameter("fd_weights: need more nodes than order");
  std::vector<std::vector<double>> c(n, std::vector<double>(order + 1, 0.0));
  c[0][0] = 1.0;
  double c1 = 1.0;
  for (int i = 1; i < n; ++i) {
    double c2 = 1.0;
    const double xi = nodes[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double xj = nodes[j] - x0;
      const double c3 = xi - xj;
      c2 *= c3;
      if (j == i - 1) {
        for (int k = std::min(i, order); k >= 1; --k)
          c[i][k] = c1 * (k * c[i - 1][k - 1] - xj * c[i - 1][k]) / c2;
        c[i][0] = -c1 * xj * c[i - 1][0] / c2;
      }
      for (int k = std::min(i, order); k >= 1; --k)
        c[j][k] = (xi * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = xi * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = c[i][order];
  return w;
}

std::vector<double> fd_derivative(std::span<const double> x, std::span<const double> y,
                                  int order, int stencil) {
  const std::size_t n = x.size();
  if (stencil < 3 || stencil % 2 == 0) throw InvalidParameter("fd_derivative: odd stencil >= 3");
  if (n < static_cast<std::size_t>(stencil) || y.size() != n)
    throw InvalidParameter("fd_derivative: grid too small");

  const int half = stencil / 2;
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t lo = (i < static_cast<std::size_t>(half)) ? 0 : i - half;
    lo = std::min(lo, n - stencil);
    auto nodes = x.subspan(lo, stencil);
    const auto w = fd_weights(x[i], nodes, order);
    double acc = 0.0;
    for (int j = 0; j < stencil; ++j) acc += w[j] * y[lo + j];
    out[i] = acc;
  }
  return out;
}

}  // namespace untrapped
