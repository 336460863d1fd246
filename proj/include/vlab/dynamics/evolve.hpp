#pragma once

#include <functional>

#include "vlab/dynamics/types.hpp"
#include "vlab/spectral/field.hpp"

namespace vlab::dynamics {

/// State handed to observers after every accepted step (and at t = 0).
struct StepView {
  const spectral::ScalarField& u;
  const spectral::VectorField& v;  ///< grad u
};

struct EvolveHooks {
  /// Virial functional I evaluated on v = grad u; I is recorded as 0 if unset.
  std::function<double(const spectral::VectorField&)> virial;
  /// Called once per record, in order.
  std::function<void(const TrajectoryRecord&, const StepView&)> on_record;
};

/// Fraction of sum |u| carried by nodes within L/8 of the box boundary.
double tail_mass(const spectral::ScalarField& u);

/// Integrates u_t = Delta u + |grad u|^2 b from u0 up to cfg.t_end.
///
/// Step sizes follow dt <- dt * clamp(safety * delta_target / delta, 1/2,
/// growth_cap), delta being the relative per-step change of ||grad u||_inf.
/// A record is kept at t = 0 and after every accepted step. The run ends as
///  - completed when t reaches t_end,
///  - blowup_detected when ||u||_{H^s} > norm_blowup or ||grad u||_inf >
///    gradient_blowup (detection names the norm that crossed first), or when
///    the step collapses below dt_min while ||grad u||_inf has grown on each of
///    the last ten steps (detection = step_collapse),
///  - dt_underflow when the step drops below dt_min otherwise, or the step
///    budget runs out,
///  - diverged when a step produces a non-finite value.
RunResult evolve(const spectral::ScalarField& u0, const spectral::ScalarField& b, const SolverConfig& cfg,
                 const EvolveHooks& hooks = {});

}  // namespace vlab::dynamics
