#include "untrapped/dirac_spectrum.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "untrapped/errors.hpp"

namespace untrapped {

ModeIndex::ModeIndex(int numerator) : num_(numerator) {
  if (num_ % 2 == 0)
    throw InvalidMode("mode k = " + std::to_string(num_ / 2) +
                      " is an integer; the spin structure admits half-integers only");
}

ModeIndex ModeIndex::from_value(double k) {
  const double doubled = 2.0 * k;
  const double rounded = std::round(doubled);
  if (std::abs(doubled - rounded) > 1e-9 || std::lround(rounded) % 2 == 0)
    throw InvalidMode("mode k = " + std::to_string(k) + " is not a half-integer");
  return ModeIndex(static_cast<int>(std::lround(rounded)));
}

std::string ModeIndex::label() const { return std::to_string(num_) + "/2"; }

Eigen::MatrixXd ModeProblem::dense() const {
  const int size = static_cast<int>(diag.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size, size);
  for (int i = 0; i < size; ++i) m(i, i) = diag[i];
  for (int i = 0; i + 1 < size; ++i) m(i, i + 1) = m(i + 1, i) = offdiag[i];
  return m;
}

ModeProblem build_mode_problem(const RevolutionSurface& s, ModeIndex k, int n) {
  if (n < 64) throw InvalidParameter("mode problem needs n >= 64");
  const int size = 2 * n;
  const double L = s.length();
  const double delta = L / (size + 1);
  const double kval = k.value();
  const double sgn = kval > 0.0 ? 1.0 : -1.0;

  ModeProblem problem{k, n, std::vector<double>(size, 0.0), std::vector<double>(size - 1)};
  // Edge m couples fine-grid points m and m+1; the derivative part alternates
  // sign with the component parity, which flips with the sign of k so that the
  // regular branch sits against each pole.
  for (int m = 1; m < size; ++m) {
    const double mid = (m + 0.5) * delta;
    const double parity = (m % 2 == 0) ? 1.0 : -1.0;
    problem.offdiag[m - 1] = sgn * parity / (2.0 * delta) - kval / (2.0 * s.profile(mid));
  }
  return problem;
}

std::vector<double> mode_eigenvalues(const ModeProblem& problem) {
  const int size = static_cast<int>(problem.diag.size());
  Eigen::Map<const Eigen::VectorXd> diag(problem.diag.data(), size);
  Eigen::Map<const Eigen::VectorXd> off(problem.offdiag.data(), size - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("tridiagonal eigensolver failed on mode k = " + problem.k.label());
  std::vector<double> eigs(solver.eigenvalues().data(), solver.eigenvalues().data() + size);
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

namespace {

std::vector<ModeIndex> modes_up_to(double k_max) {
  if (!(k_max >= 0.5)) throw InvalidParameter("k_max must be >= 1/2");
  std::vector<ModeIndex> modes;
  for (int num = 1; num / 2.0 <= k_max + 1e-12; num += 2) {
    modes.emplace_back(num);
    modes.emplace_back(-num);
  }
  return modes;
}

// count smallest positive and count largest negative eigenvalues of one mode
std::vector<double> mode_band(const std::vector<double>& eigs, int count) {
  std::vector<double> kept;
  std::vector<double> neg, pos;
  for (double e : eigs) (e < 0.0 ? neg : pos).push_back(e);
  std::sort(pos.begin(), pos.end());
  std::sort(neg.begin(), neg.end(), std::greater<>());
  for (int i = 0; i < count && i < static_cast<int>(pos.size()); ++i) kept.push_back(pos[i]);
  for (int i = 0; i < count && i < static_cast<int>(neg.size()); ++i) kept.push_back(neg[i]);
  std::sort(kept.begin(), kept.end());
  return kept;
}

double smallest_positive(const std::vector<double>& eigs) {
  double best = std::numeric_limits<double>::infinity();
  for (double e : eigs)
    if (e > 0.0) best = std::min(best, e);
  return best;
}

}  // namespace

Spectrum dirac_spectrum(const RevolutionSurface& s, double k_max, int n, int count_per_mode) {
  Spectrum spec;
  double lambda1_fine = std::numeric_limits<double>::infinity();
  for (const ModeIndex& k : modes_up_to(k_max)) {
    const auto eigs = mode_band(mode_eigenvalues(build_mode_problem(s, k, n)), count_per_mode);
    spec.per_mode.emplace(k, eigs);
    spec.eigenvalues.insert(spec.eigenvalues.end(), eigs.begin(), eigs.end());
    // refined solve for the discretization-error estimate (positive modes
    // suffice: the negative-mode matrix has the identical spectrum)
    if (k.numerator() > 0)
      lambda1_fine = std::min(lambda1_fine,
                              smallest_positive(mode_eigenvalues(build_mode_problem(s, k, 2 * n))));
  }
  std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end());
  spec.lambda1 = smallest_positive(spec.eigenvalues);
  spec.min_abs = std::numeric_limits<double>::infinity();
  for (double e : spec.eigenvalues) spec.min_abs = std::min(spec.min_abs, std::abs(e));
  spec.error_estimate = std::abs(spec.lambda1 - lambda1_fine) / std::abs(lambda1_fine);
  return spec;
}

double lambda1(const RevolutionSurface& s, double k_max) {
  // only the two lowest |k| bands can carry the first eigenvalue, but the full
  // requested band is cheap at these sizes
  double previous = 0.0;
  int n = 256;
  for (int step = 0; step < 6; ++step, n *= 2) {
    double best = std::numeric_limits<double>::infinity();
    for (const ModeIndex& k : modes_up_to(k_max)) {
      if (k.numerator() < 0) continue;
      best = std::min(best, smallest_positive(mode_eigenvalues(build_mode_problem(s, k, n))));
    }
    if (step > 0 && std::abs(best - previous) <= 1e-4 * std::abs(best)) return best;
    previous = best;
  }
  throw NumericalFailure("lambda1 resolution ladder did not converge within 5 refinements");
}

std::vector<double> distinct_levels(const std::vector<double>& positives, double rel_gap) {
  std::vector<double> sorted;
  for (double v : positives)
    if (v > 0.0) sorted.push_back(v);
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> levels;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    double sum = 0.0;
    while (j < sorted.size() && sorted[j] <= sorted[i] * (1.0 + rel_gap)) sum += sorted[j++];
    levels.push_back(sum / (j - i));
    i = j;
  }
  return levels;
}

}  // namespace untrapped
