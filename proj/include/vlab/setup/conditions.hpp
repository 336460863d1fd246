#pragma once

#include "vlab/setup/weight.hpp"
#include "vlab/spectral/field.hpp"

namespace vlab::setup {

/// Blow-up preconditions for an initial datum.
///
/// With nu = ||u0||_{H^s} and p = nu for nu <= 1, p = nu^2 otherwise:
///   cond1:      I0 > 0
///   cond2:      I0^2 >= frakC p
///   positivity: I0 sqrt(c1) - sqrt(c2) > 0, with c1 = kappa / 2^{n+1} and c2 = frakC p.
struct ConditionsReport {
  double I0 = 0.0;
  double u0_sobolev = 0.0;
  double s = 0.0;
  double frakC = 0.0;
  double m_star = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  bool cond1_holds = false;
  bool cond2_holds = false;
  bool positivity_holds = false;

  bool all_hold() const { return cond1_holds && cond2_holds && positivity_holds; }
};

/// Throws std::invalid_argument for frakC <= 0, m_star <= 0, s < 0 or
/// mismatched grids.
ConditionsReport check_blowup_conditions(const spectral::ScalarField& u0, const spectral::ScalarField& b,
                                         const WeightSpec& ws, double s, double frakC, double m_star);

}  // namespace vlab::setup
