#pragma once

#include <vector>

#include "vlab/spectral/field.hpp"

namespace vlab::virial {

/// Weights the line quadrature integrates against exactly.
enum class LineWeight {
  kUnit,           ///< 1 (plain piecewise-linear rule on [-1,1])
  kWeight,         ///< w(x) = sign(x)(|x|^{-kappa} - 1)
  kWeightSquared,  ///< w(x)^2
  kSingular,       ///< |x|^{-kappa-1}
};

/// Zeroth and first moments of a weight over an interval.
struct CellMoments {
  double m0 = 0.0;  ///< int omega(x) dx
  double m1 = 0.0;  ///< int x omega(x) dx
};

/// int_a^b x^p dx for 0 <= a <= b; +inf when the integral diverges at 0.
double power_integral(double p, double a, double b);

/// Closed-form moments of `weight` over [a, b], where [a, b] lies inside
/// [-1, 0] or [0, 1]. Moments that diverge at 0 come back as +-inf.
CellMoments cell_moments(LineWeight weight, double kappa, double a, double b);

/// Node weights q_j = int_{-1}^{1} hat_j(x) omega(x) dx for the piecewise-linear
/// reconstruction on one grid axis. The weight of the node at 0 may be
/// infinite; the product with a vanishing sample is then taken as 0.
struct LineRule {
  std::vector<double> weights;
  int zero_node = 0;
  int first_active = 0;  ///< nodes outside [first_active, last_active] carry weight 0
  int last_active = 0;

  static LineRule build(const spectral::GridSpec& grid, double kappa, LineWeight weight);
};

/// Product quadrature over [-1,1]^n: exact integration against the chosen
/// weight along one axis, piecewise-linear (trapezoid with clipped end cells)
/// along the others.
class ProductQuadrature {
 public:
  static constexpr double kMaxSpacing = 0.25;

  /// Throws std::invalid_argument if the grid spacing exceeds 0.25, the box
  /// does not contain [-1,1]^n, or kappa is outside (0,1).
  ProductQuadrature(const spectral::GridSpec& grid, double kappa);

  const spectral::GridSpec& grid() const { return grid_; }
  double kappa() const { return kappa_; }

  /// int_{[-1,1]^n} g(x) omega(x_axis) dx. Returns +inf when omega is not
  /// integrable at the origin and g does not vanish there.
  double integrate(const spectral::ScalarField& g, int axis, LineWeight weight) const;

  const LineRule& rule(LineWeight weight) const;

 private:
  spectral::GridSpec grid_;
  double kappa_;
  LineRule unit_;
  LineRule weight_;
  LineRule weight_sq_;
  LineRule singular_;
};

}  // namespace vlab::virial
