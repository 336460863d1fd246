#include "vlab/setup/coefficient.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vlab::setup {

CoefficientProfile CoefficientProfile::quadratic_gaussian(double amplitude, double width) {
  if (!(amplitude > 0.0) || !std::isfinite(amplitude)) {
    throw std::invalid_argument("coefficient amplitude a must be > 0");
  }
  if (!(width > 0.0) || !std::isfinite(width)) {
    throw std::invalid_argument("coefficient width sigma must be > 0");
  }
  CoefficientProfile p;
  p.name_ = "quadratic_gaussian";
  p.builtin_ = true;
  p.amplitude_ = amplitude;
  p.width_ = width;
  return p;
}

CoefficientProfile CoefficientProfile::custom(std::string name, Fn value, Fn derivative) {
  if (!value || !derivative) throw std::invalid_argument("custom profile needs value and derivative");
  CoefficientProfile p;
  p.name_ = std::move(name);
  p.value_ = std::move(value);
  p.derivative_ = std::move(derivative);
  return p;
}

double CoefficientProfile::value(double x) const {
  if (!builtin_) return value_(x);
  const double r = x / width_;
  return amplitude_ * x * x * std::exp(-r * r);
}

double CoefficientProfile::derivative(double x) const {
  if (!builtin_) return derivative_(x);
  const double r = x / width_;
  return amplitude_ * (2.0 * x - 2.0 * x * x * x / (width_ * width_)) * std::exp(-r * r);
}

CoefficientSpec CoefficientSpec::product(std::vector<CoefficientProfile> profiles) {
  if (profiles.empty()) throw std::invalid_argument("product coefficient needs one profile per axis");
  CoefficientSpec s;
  s.kind_ = Kind::kProduct;
  s.profiles_ = std::move(profiles);
  return s;
}

CoefficientSpec CoefficientSpec::builtin(int dimension, double amplitude, double width) {
  std::vector<CoefficientProfile> profiles;
  for (int i = 0; i < dimension; ++i) {
    profiles.push_back(CoefficientProfile::quadratic_gaussian(amplitude, width));
  }
  return product(std::move(profiles));
}

CoefficientSpec CoefficientSpec::zero() {
  CoefficientSpec s;
  s.kind_ = Kind::kZero;
  return s;
}

CoefficientSpec CoefficientSpec::one() {
  CoefficientSpec s;
  s.kind_ = Kind::kOne;
  return s;
}

double CoefficientSpec::axis_value(int axis, double x) const {
  switch (kind_) {
    case Kind::kZero: return 0.0;
    case Kind::kOne: return 1.0;
    case Kind::kProduct: return profiles_.at(axis).value(x);
  }
  return 0.0;
}

double CoefficientSpec::axis_derivative(int axis, double x) const {
  if (kind_ != Kind::kProduct) return 0.0;
  return profiles_.at(axis).derivative(x);
}

AxisFactors axis_factors(const CoefficientSpec& spec, const spectral::GridSpec& grid) {
  const int n = grid.dimension();
  const int N = grid.points();
  if (spec.kind() == CoefficientSpec::Kind::kProduct && static_cast<int>(spec.profiles().size()) != n) {
    throw std::invalid_argument("coefficient needs exactly one profile per axis");
  }
  AxisFactors out;
  out.value.assign(n, std::vector<double>(N));
  out.derivative.assign(n, std::vector<double>(N));
  for (int a = 0; a < n; ++a) {
    for (int j = 0; j < N; ++j) {
      out.value[a][j] = spec.axis_value(a, grid.node(j));
      out.derivative[a][j] = spec.axis_derivative(a, grid.node(j));
    }
  }
  if (spec.kind() != CoefficientSpec::Kind::kProduct) return out;

  for (int a = 0; a < n; ++a) {
    const auto& vals = out.value[a];
    const double peak = *std::max_element(vals.begin(), vals.end());
    const double low = *std::min_element(vals.begin(), vals.end());
    if (!(low >= 0.0)) throw std::invalid_argument("coefficient profile must be nonnegative");
    if (vals[N / 2] != 0.0) throw std::invalid_argument("coefficient profile must vanish at the origin");
    if (!(peak > 0.0)) throw std::invalid_argument("coefficient profile must be non-constant");
    const auto& profile = spec.profiles()[a];
    const double L = grid.half_length();
    const double edge = std::max(std::abs(profile.value(L)), std::abs(profile.value(-L)));
    if (edge > 1e-12 * peak) {
      throw std::invalid_argument("coefficient profile is not negligible at the box edge; enlarge L");
    }
  }
  return out;
}

spectral::ScalarField build_coefficient(const CoefficientSpec& spec, const spectral::GridSpec& grid) {
  if (spec.kind() == CoefficientSpec::Kind::kZero) return spectral::ScalarField::zeros(grid);
  if (spec.kind() == CoefficientSpec::Kind::kOne) return spectral::ScalarField::constant(grid, 1.0);
  const auto factors = axis_factors(spec, grid);
  std::vector<double> values(grid.size());
  for (std::size_t f = 0; f < values.size(); ++f) {
    const auto idx = grid.unflatten(f);
    double v = 1.0;
    for (int a = 0; a < grid.dimension(); ++a) v *= factors.value[a][idx[a]];
    values[f] = v;
  }
  return spectral::ScalarField(grid, std::move(values));
}

}  // namespace vlab::setup
