#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "vlab/spectral/grid.hpp"

namespace vlab::spectral {

using Complex = std::complex<double>;

/// Real samples at the grid nodes, row-major in axis order (x_1 slowest).
class ScalarField {
 public:
  ScalarField(GridSpec grid, std::vector<double> values);

  /// Zero field on `grid`.
  static ScalarField zeros(const GridSpec& grid);
  static ScalarField constant(const GridSpec& grid, double c);
  /// Samples f(x) where x holds the node coordinates (length n).
  static ScalarField sample(const GridSpec& grid, const std::function<double(std::span<const double>)>& f);

  const GridSpec& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

  bool all_finite() const;
  double max_abs() const;
  double min() const;
  double max() const;

 private:
  GridSpec grid_;
  std::vector<double> values_;
};

/// Fourier coefficients in FFT storage order per axis (0, 1, .., N/2-1, -N/2, .., -1).
///
/// Forward convention: F(k) = sum_j f(x_j) exp(-i xi_k . x_j) with no scaling;
/// the inverse divides by N^n. A constant c therefore has zero mode c N^n.
class SpectralField {
 public:
  SpectralField(GridSpec grid, std::vector<Complex> coefficients);

  static SpectralField zeros(const GridSpec& grid);

  const GridSpec& grid() const { return grid_; }
  std::span<const Complex> coefficients() const { return coefficients_; }
  std::size_t size() const { return coefficients_.size(); }
  Complex operator[](std::size_t i) const { return coefficients_[i]; }

  /// Coefficient of the integer wavenumber tuple k (each in [-N/2, N/2-1]).
  Complex at(std::span<const int> k) const;

  /// Largest |F(k) - conj(F(-k))| relative to max |F|; zero for real fields.
  /// Modes whose mirror falls outside the grid (any k_i = -N/2) are skipped.
  double conjugate_asymmetry() const;

 private:
  GridSpec grid_;
  std::vector<Complex> coefficients_;
};

/// n components on a shared grid; houses v = grad u.
class VectorField {
 public:
  explicit VectorField(std::vector<ScalarField> components);

  const GridSpec& grid() const { return components_.front().grid(); }
  int dimension() const { return static_cast<int>(components_.size()); }
  const ScalarField& operator[](int i) const { return components_[i]; }
  const std::vector<ScalarField>& components() const { return components_; }

 private:
  std::vector<ScalarField> components_;
};

}  // namespace vlab::spectral
