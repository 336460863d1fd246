#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace vlab::spectral {

/// Uniform periodic discretization of the box [-L, L)^n.
///
/// Nodes along each axis are x_j = L (2j - N) / N for j = 0..N-1, so the node
/// j = N/2 is exactly 0 and the grid is exactly symmetric about it. Discrete
/// wavenumbers are xi_k = (pi / L) k with k in [-N/2, N/2 - 1].
class GridSpec {
 public:
  static constexpr int kMaxDimension = 3;

  /// Throws std::invalid_argument unless 1 <= n <= 3, N even, N >= 8, L > 0.
  GridSpec(int dimension, int points_per_axis, double half_length);

  int dimension() const { return dim_; }
  int points() const { return points_; }
  double half_length() const { return half_length_; }
  double spacing() const { return 2.0 * half_length_ / points_; }
  std::size_t size() const { return size_; }

  double node(int j) const;
  /// Integer wavenumber stored at FFT index `idx` (0..N-1).
  int wavenumber_index(int idx) const { return idx < points_ / 2 ? idx : idx - points_; }
  /// Physical wavenumber at FFT index `idx`.
  double wavenumber(int idx) const;

  /// Row-major multi-index of a flat index; unused trailing axes are zero.
  std::array<int, kMaxDimension> unflatten(std::size_t flat) const;
  std::size_t flatten(std::span<const int> index) const;

  /// |xi|^2 for every flat spectral index, in storage order.
  std::vector<double> squared_wavenumbers() const;

  bool operator==(const GridSpec& other) const = default;

 private:
  int dim_;
  int points_;
  double half_length_;
  std::size_t size_;
};

}  // namespace vlab::spectral
