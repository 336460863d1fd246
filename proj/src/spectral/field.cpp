#include "vlab/spectral/field.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace vlab::spectral {

ScalarField::ScalarField(GridSpec grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw std::invalid_argument("scalar field size does not match grid");
  }
}

ScalarField ScalarField::zeros(const GridSpec& grid) { return constant(grid, 0.0); }

ScalarField ScalarField::constant(const GridSpec& grid, double c) {
  return ScalarField(grid, std::vector<double>(grid.size(), c));
}

ScalarField ScalarField::sample(const GridSpec& grid,
                                const std::function<double(std::span<const double>)>& f) {
  std::vector<double> values(grid.size());
  std::array<double, GridSpec::kMaxDimension> x{};
  const std::span<const double> coords(x.data(), static_cast<std::size_t>(grid.dimension()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto idx = grid.unflatten(i);
    for (int a = 0; a < grid.dimension(); ++a) x[a] = grid.node(idx[a]);
    values[i] = f(coords);
  }
  return ScalarField(grid, std::move(values));
}

bool ScalarField::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

double ScalarField::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double ScalarField::min() const { return *std::min_element(values_.begin(), values_.end()); }
double ScalarField::max() const { return *std::max_element(values_.begin(), values_.end()); }

SpectralField::SpectralField(GridSpec grid, std::vector<Complex> coefficients)
    : grid_(grid), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != grid_.size()) {
    throw std::invalid_argument("spectral field size does not match grid");
  }
}

SpectralField SpectralField::zeros(const GridSpec& grid) {
  return SpectralField(grid, std::vector<Complex>(grid.size()));
}

Complex SpectralField::at(std::span<const int> k) const {
  const int n = grid_.points();
  std::array<int, GridSpec::kMaxDimension> idx{0, 0, 0};
  for (int a = 0; a < grid_.dimension(); ++a) {
    if (k[a] < -n / 2 || k[a] >= n / 2) throw std::out_of_range("wavenumber outside grid band");
    idx[a] = k[a] >= 0 ? k[a] : k[a] + n;
  }
  return coefficients_[grid_.flatten(idx)];
}

double SpectralField::conjugate_asymmetry() const {
  const int n = grid_.points();
  double scale = 0.0;
  for (const auto& c : coefficients_) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  std::array<int, GridSpec::kMaxDimension> mirror{0, 0, 0};
  for (std::size_t f = 0; f < coefficients_.size(); ++f) {
    const auto idx = grid_.unflatten(f);
    bool nyquist = false;
    for (int a = 0; a < grid_.dimension(); ++a) {
      if (idx[a] == n / 2) nyquist = true;
      mirror[a] = idx[a] == 0 ? 0 : n - idx[a];
    }
    if (nyquist) continue;
    const Complex diff = coefficients_[f] - std::conj(coefficients_[grid_.flatten(mirror)]);
    worst = std::max(worst, std::abs(diff));
  }
  return worst / scale;
}

VectorField::VectorField(std::vector<ScalarField> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("vector field needs at least one component");
  for (const auto& c : components_) {
    if (!(c.grid() == components_.front().grid())) {
      throw std::invalid_argument("vector field components must share one grid");
    }
  }
}

}  // namespace vlab::spectral
