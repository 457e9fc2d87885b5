#include "untrapped/initial_data.hpp"

#include <cmath>
#include <memory>

#include "untrapped/errors.hpp"

namespace untrapped {

std::string family_name(Family f) {
  switch (f) {
    case Family::euclidean: return "euclidean";
    case Family::hyperbolic_unit: return "hyperbolic_unit";
    case Family::schwarzschild_isotropic: return "schwarzschild_isotropic";
    case Family::maximal_slice_custom: return "maximal_slice_custom";
    case Family::custom: return "custom";
  }
  return "custom";
}

Family family_from_name(const std::string& name) {
  if (name == "euclidean") return Family::euclidean;
  if (name == "hyperbolic_unit") return Family::hyperbolic_unit;
  if (name == "schwarzschild_isotropic") return Family::schwarzschild_isotropic;
  if (name == "maximal_slice_custom") return Family::maximal_slice_custom;
  if (name == "custom") return Family::custom;
  throw InvalidParameter("unknown family '" + name + "'");
}

std::vector<double> uniform_grid(const Grid& grid) {
  if (!(grid.rho_min > 0.0)) throw InvalidParameter("rho_min must be positive");
  if (!(grid.rho_max > grid.rho_min)) throw InvalidParameter("rho_max must exceed rho_min");
  if (grid.n < 8) throw InvalidParameter("grid needs n >= 8");
  std::vector<double> rho(grid.n + 1);
  for (int i = 0; i <= grid.n; ++i)
    rho[i] = grid.rho_min + (grid.rho_max - grid.rho_min) * i / grid.n;
  return rho;
}

SphericalDataSet SphericalDataSet::make(Family family, nlohmann::json params,
                                        std::vector<double> rho,
                                        Fn a, Fn da, Fn r, Fn dr, Fn d2r,
                                        Fn kappa_rho, Fn kappa_T, Fn dkappa_T) {
  SphericalDataSet d;
  d.family_ = family;
  d.params_ = std::move(params);
  d.rho_ = std::move(rho);
  if (d.rho_.size() < 2) throw InvalidParameter("data set needs at least 2 grid nodes");
  if (!(d.rho_.front() > 0.0)) throw InvalidParameter("rho_min must be positive");
  for (std::size_t i = 1; i < d.rho_.size(); ++i)
    if (!(d.rho_[i] > d.rho_[i - 1])) throw InvalidParameter("rho grid must be strictly increasing");
  d.a_fn_ = std::move(a);
  d.da_fn_ = std::move(da);
  d.r_fn_ = std::move(r);
  d.dr_fn_ = std::move(dr);
  d.d2r_fn_ = std::move(d2r);
  d.kr_fn_ = std::move(kappa_rho);
  d.kt_fn_ = std::move(kappa_T);
  d.dkt_fn_ = std::move(dkappa_T);
  d.a_.resize(d.rho_.size());
  d.r_.resize(d.rho_.size());
  d.kr_.resize(d.rho_.size());
  d.kt_.resize(d.rho_.size());
  for (std::size_t i = 0; i < d.rho_.size(); ++i) {
    d.a_[i] = d.a_fn_(d.rho_[i]);
    d.r_[i] = d.r_fn_(d.rho_[i]);
    d.kr_[i] = d.kr_fn_(d.rho_[i]);
    d.kt_[i] = d.kt_fn_(d.rho_[i]);
    if (!(d.a_[i] > 0.0) || !(d.r_[i] > 0.0))
      throw InvalidParameter("a and r must be positive on the grid");
  }
  return d;
}

double SphericalDataSet::trK(double rho) const { return kr_fn_(rho) + 2.0 * kt_fn_(rho); }

double SphericalDataSet::K_norm2(double rho) const {
  const double kr = kr_fn_(rho), kt = kt_fn_(rho);
  return kr * kr + 2.0 * kt * kt;
}

double SphericalDataSet::scalar_curvature_at(double rho) const {
  const double av = a_fn_(rho), rv = r_fn_(rho);
  const double w = dr_fn_(rho) / av;
  const double dw = d2r_fn_(rho) / av - dr_fn_(rho) * da_fn_(rho) / (av * av);
  return -4.0 * dw / (av * rv) + 2.0 * (1.0 - w * w) / (rv * rv);
}

bool SphericalDataSet::r_strictly_increasing() const {
  for (std::size_t i = 1; i < r_.size(); ++i)
    if (!(r_[i] > r_[i - 1])) return false;
  return true;
}

nlohmann::json SphericalDataSet::to_json() const {
  return nlohmann::json{
      {"family", family_name(family_)},
      {"params", params_},
      {"grid", {{"rho_min", rho_.front()}, {"rho_max", rho_.back()},
                {"n", static_cast<int>(rho_.size()) - 1}}},
  };
}

SphericalDataSet make_family(Family family, const nlohmann::json& params, const Grid& grid) {
  auto rho = uniform_grid(grid);
  const auto zero = [](double) { return 0.0; };
  const auto one = [](double) { return 1.0; };
  const auto ident = [](double x) { return x; };

  switch (family) {
    case Family::euclidean:
      return SphericalDataSet::make(family, nlohmann::json::object(), std::move(rho),
                                    one, zero, ident, one, zero, zero, zero, zero);
    case Family::hyperbolic_unit: {
      // umbilic K = g slice of Minkowski: unit hyperbolic space
      auto a = [](double x) { return 1.0 / std::sqrt(1.0 + x * x); };
      auto da = [](double x) { return -x * std::pow(1.0 + x * x, -1.5); };
      return SphericalDataSet::make(family, nlohmann::json::object(), std::move(rho),
                                    a, da, ident, one, zero, one, one, zero);
    }
    case Family::schwarzschild_isotropic: {
      if (!params.contains("m")) throw InvalidParameter("schwarzschild_isotropic needs params.m");
      const double m = params.at("m").get<double>();
      if (!(m > 0.0)) throw InvalidParameter("schwarzschild mass must be positive");
      auto a = [m](double x) { const double c = 1.0 + m / (2.0 * x); return c * c; };
      auto da = [m](double x) { return -(m / (x * x)) * (1.0 + m / (2.0 * x)); };
      auto r = [m](double x) { return x + m + m * m / (4.0 * x); };
      auto dr = [m](double x) { return 1.0 - m * m / (4.0 * x * x); };
      auto d2r = [m](double x) { return m * m / (2.0 * x * x * x); };
      return SphericalDataSet::make(family, nlohmann::json{{"m", m}}, std::move(rho),
                                    a, da, r, dr, d2r, zero, zero, zero);
    }
    case Family::maximal_slice_custom:
    case Family::custom:
      throw InvalidParameter("custom families are built from sampled fields, not parameters");
  }
  throw InvalidParameter("unhandled family");
}

SphericalDataSet make_custom(std::vector<double> rho, std::vector<double> a,
                             std::vector<double> r, std::vector<double> kappa_rho,
                             std::vector<double> kappa_T, Family tag) {
  if (tag != Family::custom && tag != Family::maximal_slice_custom)
    throw InvalidParameter("custom data must carry a custom family tag");
  if (tag == Family::maximal_slice_custom) {
    double scale = 1e-10;
    for (std::size_t i = 0; i < kappa_T.size(); ++i)
      scale = std::max(scale, std::abs(kappa_rho[i]) + 2.0 * std::abs(kappa_T[i]));
    for (std::size_t i = 0; i < kappa_T.size(); ++i)
      if (std::abs(kappa_rho[i] + 2.0 * kappa_T[i]) > 1e-10 * scale)
        throw InvalidParameter("maximal_slice_custom requires Tr K = 0");
  }
  auto make_eval = [](std::vector<double> x, std::vector<double> y) {
    auto sp = std::make_shared<CubicSpline>(std::move(x), std::move(y));
    auto v = [sp](double q) { return (*sp)(q); };
    auto d1 = [sp](double q) { return sp->derivative(q); };
    auto d2 = [sp](double q) { return sp->second_derivative(q); };
    return std::tuple{v, d1, d2};
  };
  auto [av, ad, a2] = make_eval(rho, a);
  auto [rv, rd, r2] = make_eval(rho, r);
  auto [krv, krd, kr2] = make_eval(rho, kappa_rho);
  auto [ktv, ktd, kt2] = make_eval(rho, kappa_T);
  return SphericalDataSet::make(tag, nlohmann::json::object(), std::move(rho),
                                av, ad, rv, rd, r2, krv, ktv, ktd);
}

std::vector<double> scalar_curvature(const SphericalDataSet& d) {
  if (d.rho().size() < 17) throw InvalidParameter("scalar curvature needs a grid with n >= 16");
  std::vector<double> R(d.rho().size());
  for (std::size_t i = 0; i < R.size(); ++i) R[i] = d.scalar_curvature_at(d.rho()[i]);
  return R;
}

ConstraintFields constraint_fields(const SphericalDataSet& d) {
  const auto& rho = d.rho();
  ConstraintFields out;
  out.R = scalar_curvature(d);
  out.mu.resize(rho.size());
  out.J_rad.resize(rho.size());
  out.dec_margin.resize(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) {
    const double x = rho[i];
    const double kr = d.kappa_rho(x), kt = d.kappa_T(x);
    out.mu[i] = 0.5 * out.R[i] + 2.0 * kr * kt + kt * kt;
    out.J_rad[i] = 2.0 * d.dkappa_T(x) / d.a(x) +
                   (2.0 * d.dr(x) / (d.a(x) * d.r(x))) * (kt - kr);
    out.dec_margin[i] = out.mu[i] - std::abs(out.J_rad[i]);
  }
  return out;
}

DecReport check_dec(const SphericalDataSet& d) {
  const auto fields = constraint_fields(d);
  DecReport report{true, fields.dec_margin.front(), d.rho().front()};
  for (std::size_t i = 0; i < fields.dec_margin.size(); ++i) {
    if (fields.dec_margin[i] < report.min_margin) {
      report.min_margin = fields.dec_margin[i];
      report.at_rho = d.rho()[i];
    }
  }
  report.satisfied = report.min_margin >= -1e-8;
  return report;
}

}  // namespace untrapped
