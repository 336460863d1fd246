#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "vlab/spectral/snapshot.hpp"

namespace vlab::dynamics {

enum class Integrator { kIFRK4, kETD2 };

std::string to_string(Integrator integrator);

struct AdaptConfig {
  bool enabled = true;
  double safety = 0.9;
  double growth_cap = 1.5;
  double dt_min = 1e-10;
  /// Target relative change of ||grad u||_inf per step.
  double delta_target = 1e-3;
};

struct Thresholds {
  double norm_blowup = 1e6;      ///< on ||u||_{H^s}
  double gradient_blowup = 1e5;  ///< on ||grad u||_inf
};

struct SolverConfig {
  double dt0 = 1e-3;
  double t_end = 1.0;
  Integrator integrator = Integrator::kIFRK4;
  bool dealias = true;
  /// Diagnostic Sobolev index; must exceed n/2 + 3.
  double s = 4.0;
  AdaptConfig adapt;
  Thresholds thresholds;
  /// Steps are shortened to land on multiples of this interval, where a field
  /// snapshot is stored. 0 disables sampling.
  double sample_interval = 0.0;
  std::size_t max_steps = 5'000'000;

  /// Throws std::invalid_argument naming the offending field.
  void validate(int dimension) const;
};

enum class RunStatus { kCompleted, kBlowupDetected, kDtUnderflow, kDiverged };

std::string to_string(RunStatus status);

/// Which signal ended a blow-up run.
enum class Detection { kNone, kNormThreshold, kGradientThreshold, kStepCollapse };

std::string to_string(Detection detection);

struct TrajectoryRecord {
  double t = 0.0;
  double I = 0.0;
  double hs_norm = 0.0;
  double grad_sup = 0.0;
  double dt = 0.0;
  double tail_mass = 0.0;
};

struct RunResult {
  RunStatus status = RunStatus::kCompleted;
  Detection detection = Detection::kNone;
  double t_final = 0.0;
  /// Step size proposed after the last accepted step; below dt_min on a collapse.
  double dt_next = 0.0;
  std::vector<TrajectoryRecord> samples;
  /// Fields at t = 0 and every multiple of SolverConfig::sample_interval.
  std::vector<spectral::FieldSnapshot> snapshots;
  std::optional<spectral::ScalarField> final_field;
};

struct PicardReport {
  double T = 0.0;
  int iterates = 0;
  std::vector<double> sup_differences;
  double contraction_factor = 0.0;
  double C1_hat = 0.0;
  double CB_hat = 0.0;
  double u0_norm = 0.0;
  double smallness = 0.0;
  bool diverged = false;
};

}  // namespace vlab::dynamics
