#include "vlab/dynamics/types.hpp"

#include <cmath>
#include <stdexcept>

namespace vlab::dynamics {

std::string to_string(Integrator integrator) {
  return integrator == Integrator::kIFRK4 ? "ifrk4" : "etd2";
}

std::string to_string(RunStatus status) {
  switch (status) {
    case RunStatus::kCompleted: return "completed";
    case RunStatus::kBlowupDetected: return "blowup_detected";
    case RunStatus::kDtUnderflow: return "dt_underflow";
    case RunStatus::kDiverged: return "diverged";
  }
  return "unknown";
}

std::string to_string(Detection detection) {
  switch (detection) {
    case Detection::kNone: return "none";
    case Detection::kNormThreshold: return "norm_threshold";
    case Detection::kGradientThreshold: return "gradient_threshold";
    case Detection::kStepCollapse: return "step_collapse";
  }
  return "unknown";
}

void SolverConfig::validate(int dimension) const {
  auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
  if (!(dt0 > 0.0) || !std::isfinite(dt0)) fail("solver.dt0 must be > 0");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) fail("solver.t_end must be > 0");
  if (!(s > 0.5 * dimension + 3.0)) fail("diagnostics.s must exceed n/2 + 3");
  if (!(adapt.dt_min > 0.0) || !(adapt.dt_min < dt0)) fail("solver.dt_min must satisfy 0 < dt_min < dt0");
  if (!(adapt.safety > 0.0)) fail("solver.safety must be > 0");
  if (!(adapt.growth_cap >= 1.0)) fail("solver.growth_cap must be >= 1");
  if (!(adapt.delta_target > 0.0)) fail("solver.delta_target must be > 0");
  if (!(thresholds.norm_blowup > 1.0)) fail("solver.norm_blowup must be > 1");
  if (!(thresholds.gradient_blowup > 1.0)) fail("solver.gradient_blowup must be > 1");
  if (!(sample_interval >= 0.0)) fail("solver.sample_interval must be >= 0");
  if (max_steps == 0) fail("solver.max_steps must be > 0");
}

}  // namespace vlab::dynamics
