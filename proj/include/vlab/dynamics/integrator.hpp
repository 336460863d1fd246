#pragma once

#include <vector>

#include "vlab/dynamics/types.hpp"
#include "vlab/spectral/field.hpp"

namespace vlab::dynamics {

using Coefficients = std::vector<spectral::Complex>;

/// Exponential integrators for u_hat' = -|xi|^2 u_hat + F_hat(u), with
/// F = |grad u|^2 b evaluated pseudo-spectrally.
///
/// The state is the coefficient vector in the spectral-core convention. All
/// methods are const and allocate their own work buffers, so one stepper can
/// be shared by concurrent trajectories.
class SpectralStepper {
 public:
  SpectralStepper(const spectral::ScalarField& coefficient, Integrator integrator, bool dealias);

  const spectral::GridSpec& grid() const { return grid_; }
  Integrator integrator() const { return integrator_; }
  bool dealias() const { return dealias_; }

  /// F_hat(u); dealiased when configured.
  Coefficients nonlinear(const Coefficients& U) const;

  /// One step of the configured scheme. The linear part is integrated exactly.
  Coefficients step(const Coefficients& U, double dt) const;

  /// Physical components of grad u, one vector per axis.
  std::vector<std::vector<double>> gradient(const Coefficients& U) const;

 private:
  Coefficients step_ifrk4(const Coefficients& U, double dt) const;
  Coefficients step_etd2(const Coefficients& U, double dt) const;

  spectral::GridSpec grid_;
  Integrator integrator_;
  bool dealias_;
  bool coefficient_zero_;
  std::vector<double> coefficient_;
  std::vector<double> ksq_;
  std::vector<std::vector<spectral::Complex>> ik_;  // i xi_a per flat index, Nyquist zeroed
  std::vector<char> retained_;                      // two-thirds rule mask
};

/// |grad u|^2 b in physical space from the spectral gradient.
spectral::ScalarField nonlinear_term(const spectral::ScalarField& u, const spectral::ScalarField& b,
                                     bool dealias = false);

struct StepResult {
  spectral::ScalarField u;
  bool diverged = false;
};

/// Throws std::invalid_argument for dt <= 0 or mismatched grids.
StepResult step(const spectral::ScalarField& u, const spectral::ScalarField& b, double dt,
                Integrator integrator = Integrator::kIFRK4, bool dealias = false);

}  // namespace vlab::dynamics
