#pragma once

#include <span>
#include <vector>

#include "vlab/dynamics/types.hpp"
#include "vlab/spectral/field.hpp"

namespace vlab::dynamics {

struct PicardOptions {
  double T = 0.1;
  int slices = 16;      ///< M >= 8 uniform time slices
  int iterations = 8;   ///< K >= 3 iterates after u^(0)
  double s = 4.0;       ///< norm index of E_T = C([0,T]; H^s)
  bool dealias = true;
};

/// Picard iteration on the mild form
///   u^(m+1)(t) = h_t * u0 + int_0^t h_{t-tau} * (|grad u^(m)|^2 b)(tau) dtau
/// over the slices t_j = j T / M, starting from u^(0)(t) = h_t * u0. The heat
/// kernel is applied exactly per slice and the tau integral uses the
/// trapezoid rule.
///
/// sup_differences[m] = max_j ||u^(m+1)(t_j) - u^(m)(t_j)||_{H^s}.
/// contraction_factor is exp of the least-squares slope of log differences
/// (0 when the first difference already vanishes). C1_hat is
/// sup_j ||h_{t_j} u0|| / ||u0||. CB_hat is the largest of the observed
/// bilinear ratios ||B(u,u)|| / ||u||^2 and
/// ||B(u,u) - B(u',u')|| / (||u - u'|| (||u|| + ||u'||)) over consecutive
/// iterates, B being the Duhamel integral term. Divergence is flagged when
/// the differences grow three times in a row or become non-finite.
PicardReport picard_iterate(const spectral::ScalarField& u0, const spectral::ScalarField& b,
                            const PicardOptions& options);

/// Least-squares fit y ~ alpha T + beta sqrt(T) with alpha, beta >= 0.
struct ShapeFit {
  double alpha = 0.0;
  double beta = 0.0;
  double r_squared = 0.0;
};

ShapeFit fit_time_shape(std::span<const double> T, std::span<const double> y);

}  // namespace vlab::dynamics
