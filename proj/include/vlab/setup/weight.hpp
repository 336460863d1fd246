#pragma once

#include "vlab/spectral/field.hpp"

namespace vlab::setup {

/// Exponent of the singular weight w_i(x) = sign(x)(|x|^{-kappa} - 1) on (-1, 1).
struct WeightSpec {
  /// Throws std::invalid_argument unless 0 < kappa < 1.
  explicit WeightSpec(double kappa);

  double kappa;
};

/// Pointwise weight component; 0 outside (-1, 1) and at x = 0.
double weight_component(double kappa, double x);

/// Samples w on the grid. The node x_i = 0 stores 0 as a sentinel; the
/// quadrature never reads it.
spectral::VectorField build_weight(const WeightSpec& ws, const spectral::GridSpec& grid);

/// Per-axis L1 norm of w_i: 2 kappa / (1 - kappa).
double weight_l1_norm(double kappa);

}  // namespace vlab::setup
