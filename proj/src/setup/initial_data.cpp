#include "vlab/setup/initial_data.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vlab::setup {

spectral::ScalarField build_initial_data(const InitialDataSpec& spec, const spectral::GridSpec& grid) {
  if (!std::isfinite(spec.amplitude)) throw std::invalid_argument("initial amplitude must be finite");
  const double A = spec.amplitude;
  switch (spec.kind) {
    case InitialDataSpec::Kind::kGaussianSum:
      return spectral::ScalarField::sample(grid, [A](std::span<const double> x) {
        double sum = 0.0;
        for (double xi : x) sum += std::exp(-xi * xi);
        return -0.5 * A * sum;
      });
    case InitialDataSpec::Kind::kCosine: {
      const double f = spec.frequency;
      const double periods = f * grid.half_length() / std::numbers::pi;
      if (!(f > 0.0) || std::abs(periods - std::round(periods)) > 1e-9) {
        throw std::invalid_argument("cosine frequency times L / pi must be a positive integer");
      }
      return spectral::ScalarField::sample(grid, [A, f](std::span<const double> x) {
        double sum = 0.0;
        for (double xi : x) sum += std::cos(f * xi);
        return A * sum;
      });
    }
  }
  throw std::invalid_argument("unknown initial data family");
}

}  // namespace vlab::setup
