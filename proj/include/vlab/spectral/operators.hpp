#pragma once

#include "vlab/spectral/field.hpp"

namespace vlab::spectral {

/// Multiplies by i xi_axis. The Nyquist plane k_axis = -N/2 is zeroed so the
/// derivative of a real field stays real.
SpectralField derivative(const SpectralField& F, int axis);

VectorField gradient(const ScalarField& u);
ScalarField laplacian(const ScalarField& u);
SpectralField laplacian(const SpectralField& F);
ScalarField divergence(const VectorField& v);

/// Heat semigroup e^{t Delta}, realized as the multiplier exp(-|xi|^2 t).
/// Throws std::invalid_argument for t < 0.
ScalarField heat_propagate(const ScalarField& u, double t);
SpectralField heat_propagate(const SpectralField& F, double t);

/// sqrt( sum (1+|xi|^2)^s |F|^2 (2L)^n / N^{2n} ), the Parseval-consistent
/// H^s norm on the box. Throws for s < 0.
double sobolev_norm(const ScalarField& u, double s);
double sobolev_norm(const SpectralField& F, double s);

/// Largest retained |k_i| under the two-thirds rule, (N - 1) / 3.
int dealias_cutoff(int points);

/// Zeroes every coefficient with some |k_i| above dealias_cutoff. Idempotent.
SpectralField dealias(const SpectralField& F);

ScalarField multiply(const ScalarField& a, const ScalarField& b);

/// Trigonometric interpolant of F resampled on a grid with `factor` times as
/// many points per axis. Exact for the represented trigonometric polynomial.
SpectralField zero_pad(const SpectralField& F, int factor);

}  // namespace vlab::spectral
