#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <span>

#include "vlab/spectral/field.hpp"
#include "vlab/spectral/grid.hpp"

namespace testing_support {

inline constexpr double kPi = std::numbers::pi;

/// Real trigonometric polynomial with random amplitudes on modes |k_i| <= kmax.
inline vlab::spectral::ScalarField random_band_limited(const vlab::spectral::GridSpec& grid, int kmax,
                                                       std::mt19937_64& rng, double decay = 0.0) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  const int n = grid.dimension();
  const double w = kPi / grid.half_length();
  struct Mode {
    int k[3];
    double amp;
    double ph;
  };
  std::vector<Mode> modes;
  const int span = 2 * kmax + 1;
  int total = 1;
  for (int d = 0; d < n; ++d) total *= span;
  for (int m = 0; m < total; ++m) {
    Mode mode{{0, 0, 0}, 0.0, phase(rng)};
    int r = m;
    double k2 = 0.0;
    for (int d = 0; d < n; ++d) {
      mode.k[d] = r % span - kmax;
      r /= span;
      k2 += double(mode.k[d]) * mode.k[d];
    }
    mode.amp = normal(rng) / std::pow(1.0 + k2, decay / 2.0);
    modes.push_back(mode);
  }
  return vlab::spectral::ScalarField::sample(grid, [&](std::span<const double> x) {
    double s = 0.0;
    for (const auto& m : modes) {
      double arg = m.ph;
      for (int d = 0; d < n; ++d) arg += w * m.k[d] * x[d];
      s += m.amp * std::cos(arg);
    }
    return s;
  });
}

inline double max_abs_diff(const vlab::spectral::ScalarField& a, const vlab::spectral::ScalarField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace testing_support
