#include "untrapped/spline.hpp"

#include <algorithm>
#include <cmath>

#include "untrapped/errors.hpp"

namespace untrapped {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y,
                         std::optional<double> slope_left,
                         std::optional<double> slope_right)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n < 3 || y_.size() != n) throw InvalidParameter("spline needs >= 3 samples");
  for (std::size_t i = 1; i < n; ++i)
    if (!(x_[i] > x_[i - 1])) throw InvalidParameter("spline grid must be strictly increasing");

  // Solve the tridiagonal system for knot second derivatives.
  std::vector<double> diag(n), off(n - 1), rhs(n);
  auto h = [&](std::size_t i) { return x_[i + 1] - x_[i]; };
  auto slope = [&](std::size_t i) { return (y_[i + 1] - y_[i]) / h(i); };

  if (slope_left) {
    diag[0] = 2.0 * h(0);
    off[0] = h(0);
    rhs[0] = 6.0 * (slope(0) - *slope_left);
  } else {
    diag[0] = 1.0;
    off[0] = 0.0;
    rhs[0] = 0.0;
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    diag[i] = 2.0 * (h(i - 1) + h(i));
    off[i] = h(i);
    rhs[i] = 6.0 * (slope(i) - slope(i - 1));
  }
  if (slope_right) {
    diag[n - 1] = 2.0 * h(n - 2);
    rhs[n - 1] = 6.0 * (*slope_right - slope(n - 2));
  } else {
    diag[n - 1] = 1.0;
    rhs[n - 1] = 0.0;
  }

  // Thomas elimination; lower entries mirror `off` except at the ends.
  std::vector<double> lower(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) lower[i] = off[i];
  if (!slope_left) off[0] = 0.0;
  if (!slope_right) lower[n - 2] = 0.0;

  m_.assign(n, 0.0);
  std::vector<double> c(n - 1), d(n);
  c[0] = off[0] / diag[0];
  d[0] = rhs[0] / diag[0];
  for (std::size_t i = 1; i < n; ++i) {
    const double denom = diag[i] - lower[i - 1] * c[i - 1];
    if (i + 1 < n) c[i] = off[i] / denom;
    d[i] = (rhs[i] - lower[i - 1] * d[i - 1]) / denom;
  }
  m_[n - 1] = d[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) m_[i] = d[i] - (i + 1 < n ? c[i] * m_[i + 1] : 0.0);
}

std::size_t CubicSpline::interval(double x) const {
  if (x <= x_.front()) return 0;
  if (x >= x_.back()) return x_.size() - 2;
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  return static_cast<std::size_t>(it - x_.begin()) - 1;
}

double CubicSpline::operator()(double x) const {
  const std::size_t i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double t = x - x_[i], s = x_[i + 1] - x;
  return (m_[i] * s * s * s + m_[i + 1] * t * t * t) / (6.0 * h) +
         (y_[i] / h - m_[i] * h / 6.0) * s + (y_[i + 1] / h - m_[i + 1] * h / 6.0) * t;
}

double CubicSpline::derivative(double x) const {
  const std::size_t i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double t = x - x_[i], s = x_[i + 1] - x;
  return (-m_[i] * s * s + m_[i + 1] * t * t) / (2.0 * h) +
         (y_[i + 1] - y_[i]) / h - (m_[i + 1] - m_[i]) * h / 6.0;
}

double CubicSpline::second_derivative(double x) const {
  const std::size_t i = interval(x);
  const double h = x_[i + 1] - x_[i];
  return (m_[i] * (x_[i + 1] - x) + m_[i + 1] * (x - x_[i])) / h;
}

double CubicSpline::integral(double a, double b) const {
  a = std::clamp(a, x_.front(), x_.back());
  b = std::clamp(b, x_.front(), x_.back());
  const double sign = (b >= a) ? 1.0 : -1.0;
  if (b < a) std::swap(a, b);

  auto piece = [&](std::size_t i, double lo, double hi) {
    const double h = x_[i + 1] - x_[i];
    auto anti = [&](double x) {
      const double t = x - x_[i], s = x_[i + 1] - x;
      return (-m_[i] * s * s * s * s + m_[i + 1] * t * t * t * t) / (24.0 * h) -
             (y_[i] / h - m_[i] * h / 6.0) * s * s / 2.0 +
             (y_[i + 1] / h - m_[i + 1] * h / 6.0) * t * t / 2.0;
    };
    return anti(hi) - anti(lo);
  };

  const std::size_t ia = interval(a), ib = interval(b);
  if (ia == ib) return sign * piece(ia, a, b);
  double sum = piece(ia, a, x_[ia + 1]);
  for (std::size_t i = ia + 1; i < ib; ++i) sum += piece(i, x_[i], x_[i + 1]);
  sum += piece(ib, x_[ib], b);
  return sign * sum;
}

}  // namespace untrapped
