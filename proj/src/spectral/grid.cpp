#include "vlab/spectral/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace vlab::spectral {

GridSpec::GridSpec(int dimension, int points_per_axis, double half_length)
    : dim_(dimension), points_(points_per_axis), half_length_(half_length), size_(1) {
  if (dimension < 1 || dimension > kMaxDimension) {
    throw std::invalid_argument("grid dimension must be 1, 2 or 3, got " + std::to_string(dimension));
  }
  if (points_per_axis < 8 || points_per_axis % 2 != 0) {
    throw std::invalid_argument("points per axis must be even and >= 8, got " +
                                std::to_string(points_per_axis));
  }
  if (!(half_length > 0.0) || !std::isfinite(half_length)) {
    throw std::invalid_argument("half length must be positive and finite");
  }
  for (int i = 0; i < dim_; ++i) size_ *= static_cast<std::size_t>(points_);
}

double GridSpec::node(int j) const {
  return half_length_ * static_cast<double>(2 * j - points_) / static_cast<double>(points_);
}

double GridSpec::wavenumber(int idx) const {
  return std::numbers::pi / half_length_ * static_cast<double>(wavenumber_index(idx));
}

std::array<int, GridSpec::kMaxDimension> GridSpec::unflatten(std::size_t flat) const {
  std::array<int, kMaxDimension> index{0, 0, 0};
  for (int axis = dim_ - 1; axis >= 0; --axis) {
    index[axis] = static_cast<int>(flat % static_cast<std::size_t>(points_));
    flat /= static_cast<std::size_t>(points_);
  }
  return index;
}

std::size_t GridSpec::flatten(std::span<const int> index) const {
  std::size_t flat = 0;
  for (int axis = 0; axis < dim_; ++axis) {
    flat = flat * static_cast<std::size_t>(points_) + static_cast<std::size_t>(index[axis]);
  }
  return flat;
}

std::vector<double> GridSpec::squared_wavenumbers() const {
  std::vector<double> axis_sq(points_);
  for (int i = 0; i < points_; ++i) {
    const double xi = wavenumber(i);
    axis_sq[i] = xi * xi;
  }
  std::vector<double> out(size_);
  for (std::size_t f = 0; f < size_; ++f) {
    const auto idx = unflatten(f);
    double sum = 0.0;
    for (int a = 0; a < dim_; ++a) sum += axis_sq[idx[a]];
    out[f] = sum;
  }
  return out;
}

}  // namespace vlab::spectral
