#pragma once

#include <span>
#include <vector>

#include "vlab/setup/coefficient.hpp"
#include "vlab/setup/weight.hpp"
#include "vlab/spectral/field.hpp"
#include "vlab/spectral/snapshot.hpp"
#include "vlab/virial/quadrature.hpp"

namespace vlab::virial {

/// Terms of dI/dt = A + B for v = grad u, all integrated over [-1,1]^n.
///
///   I  = sum_i int v_i b w_i
///   A  = sum_i int (Delta v_i) b w_i
///   B  = sum_i int d_i(|v|^2 b) b w_i
///   I2 = (kappa/2) int |v|^2 |b w|^2
///   I3 = -int |v|^2 b sum_i (d_i b) w_i
///   per_axis_I1[i] = kappa int |v|^2 b^2 |x_i|^{-kappa-1}
///
/// In the continuum B = sum_i per_axis_I1[i] + I3 and I1_i >= (kappa/2) int
/// |v|^2 b^2 w_i^2.
struct VirialBreakdown {
  double I = 0.0;
  double A = 0.0;
  double B = 0.0;
  double I2 = 0.0;
  double I3 = 0.0;
  std::vector<double> per_axis_I1;
  /// (kappa/2) int |v|^2 b^2 w_i^2, the lower bound for per_axis_I1[i].
  std::vector<double> per_axis_I1_bound;
};

/// Quadrature, coefficient and its axis derivatives bundled for repeated
/// evaluation along a trajectory.
///
/// With `dealias` set, |v|^2 b is truncated by the two-thirds rule before it
/// is differentiated for B, matching the solver's nonlinear term.
class VirialContext {
 public:
  VirialContext(const spectral::GridSpec& grid, const setup::CoefficientSpec& coefficient,
                const setup::WeightSpec& ws, bool dealias = true);
  /// Coefficient given only by samples; d_i b is taken spectrally.
  VirialContext(const spectral::ScalarField& b, const setup::WeightSpec& ws, bool dealias = true);

  const spectral::GridSpec& grid() const { return quadrature_.grid(); }
  const spectral::ScalarField& coefficient() const { return b_; }
  double kappa() const { return quadrature_.kappa(); }
  const ProductQuadrature& quadrature() const { return quadrature_; }

  double I(const spectral::VectorField& v) const;
  VirialBreakdown breakdown(const spectral::VectorField& v) const;

 private:
  ProductQuadrature quadrature_;
  spectral::ScalarField b_;
  std::vector<spectral::ScalarField> db_;  // d_i b per axis
  bool dealias_;
  bool zero_;
};

double virial_I(const spectral::VectorField& v, const spectral::ScalarField& b, const setup::WeightSpec& ws);

VirialBreakdown identity_terms(const spectral::VectorField& v, const spectral::ScalarField& b,
                               const setup::WeightSpec& ws, bool dealias = false);

struct IdentityCheck {
  double max_residual = 0.0;
  std::vector<double> times;      ///< interior snapshot times
  std::vector<double> residuals;  ///< |dI/dt - (A + B)| / (|A| + |B| + 1)
};

/// Central difference of I over uniformly spaced snapshots against A + B at
/// each interior snapshot. Throws std::invalid_argument for fewer than three
/// snapshots or non-uniform spacing.
IdentityCheck check_identity(std::span<const spectral::FieldSnapshot> snapshots, const VirialContext& ctx);

}  // namespace vlab::virial
