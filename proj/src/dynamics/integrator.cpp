#include "vlab/dynamics/integrator.hpp"

#include <cmath>
#include <stdexcept>

#include "vlab/spectral/operators.hpp"
#include "vlab/spectral/transform.hpp"

namespace vlab::dynamics {

using spectral::Complex;

namespace {

// phi1(z) = (e^z - 1)/z and phi2(z) = (e^z - 1 - z)/z^2, with Taylor series
// below |z| = 1e-4 where the closed forms cancel.
double phi1(double z) {
  if (std::abs(z) < 1e-4) return 1.0 + z / 2.0 + z * z / 6.0 + z * z * z / 24.0;
  return std::expm1(z) / z;
}

double phi2(double z) {
  if (std::abs(z) < 1e-4) return 0.5 + z / 6.0 + z * z / 24.0 + z * z * z / 120.0;
  return (std::expm1(z) - z) / (z * z);
}

}  // namespace

SpectralStepper::SpectralStepper(const spectral::ScalarField& coefficient, Integrator integrator,
                                 bool dealias)
    : grid_(coefficient.grid()),
      integrator_(integrator),
      dealias_(dealias),
      coefficient_(coefficient.values().begin(), coefficient.values().end()),
      ksq_(grid_.squared_wavenumbers()) {
  coefficient_zero_ = true;
  for (double v : coefficient_) coefficient_zero_ = coefficient_zero_ && v == 0.0;

  const int n = grid_.dimension();
  const int nyquist = grid_.points() / 2;
  const int kc = spectral::dealias_cutoff(grid_.points());
  ik_.assign(n, std::vector<Complex>(grid_.size()));
  retained_.assign(grid_.size(), 1);
  for (std::size_t f = 0; f < grid_.size(); ++f) {
    const auto idx = grid_.unflatten(f);
    for (int a = 0; a < n; ++a) {
      ik_[a][f] = idx[a] == nyquist ? Complex(0.0) : Complex(0.0, grid_.wavenumber(idx[a]));
      if (std::abs(grid_.wavenumber_index(idx[a])) > kc) retained_[f] = 0;
    }
  }
}

std::vector<std::vector<double>> SpectralStepper::gradient(const Coefficients& U) const {
  std::vector<std::vector<double>> out(grid_.dimension());
  Coefficients work(U.size());
  for (int a = 0; a < grid_.dimension(); ++a) {
    for (std::size_t f = 0; f < U.size(); ++f) work[f] = U[f] * ik_[a][f];
    spectral::inverse_transform(grid_, work);
    out[a].resize(U.size());
    for (std::size_t f = 0; f < U.size(); ++f) out[a][f] = work[f].real();
  }
  return out;
}

Coefficients SpectralStepper::nonlinear(const Coefficients& U) const {
  Coefficients result(U.size());
  if (coefficient_zero_) return result;
  std::vector<double> grad_sq(U.size(), 0.0);
  Coefficients work(U.size());
  for (int a = 0; a < grid_.dimension(); ++a) {
    for (std::size_t f = 0; f < U.size(); ++f) work[f] = U[f] * ik_[a][f];
    spectral::inverse_transform(grid_, work);
    for (std::size_t f = 0; f < U.size(); ++f) grad_sq[f] += work[f].real() * work[f].real();
  }
  for (std::size_t f = 0; f < U.size(); ++f) result[f] = grad_sq[f] * coefficient_[f];
  spectral::forward_transform(grid_, result);
  if (dealias_) {
    for (std::size_t f = 0; f < U.size(); ++f) {
      if (!retained_[f]) result[f] = 0.0;
    }
  }
  return result;
}

Coefficients SpectralStepper::step(const Coefficients& U, double dt) const {
  if (!(dt > 0.0)) throw std::invalid_argument("step size must be > 0");
  if (U.size() != grid_.size()) throw std::invalid_argument("state size does not match grid");
  return integrator_ == Integrator::kIFRK4 ? step_ifrk4(U, dt) : step_etd2(U, dt);
}

// Classical RK4 on the integrating-factor variable exp(|xi|^2 t) u_hat.
Coefficients SpectralStepper::step_ifrk4(const Coefficients& U, double dt) const {
  const std::size_t m = U.size();
  std::vector<double> E(m), E2(m);
  for (std::size_t f = 0; f < m; ++f) {
    E[f] = std::exp(-ksq_[f] * dt);
    E2[f] = std::exp(-ksq_[f] * dt * 0.5);
  }
  Coefficients out(m);
  if (coefficient_zero_) {
    for (std::size_t f = 0; f < m; ++f) out[f] = E[f] * U[f];
    return out;
  }
  const Coefficients k1 = nonlinear(U);
  Coefficients stage(m);
  for (std::size_t f = 0; f < m; ++f) stage[f] = E2[f] * (U[f] + 0.5 * dt * k1[f]);
  const Coefficients k2 = nonlinear(stage);
  for (std::size_t f = 0; f < m; ++f) stage[f] = E2[f] * U[f] + 0.5 * dt * k2[f];
  const Coefficients k3 = nonlinear(stage);
  for (std::size_t f = 0; f < m; ++f) stage[f] = E[f] * U[f] + dt * E2[f] * k3[f];
  const Coefficients k4 = nonlinear(stage);
  for (std::size_t f = 0; f < m; ++f) {
    out[f] = E[f] * U[f] + dt / 6.0 * (E[f] * k1[f] + 2.0 * E2[f] * (k2[f] + k3[f]) + k4[f]);
  }
  return out;
}

// Cox-Matthews ETD2RK.
Coefficients SpectralStepper::step_etd2(const Coefficients& U, double dt) const {
  const std::size_t m = U.size();
  Coefficients out(m);
  const Coefficients n0 = nonlinear(U);
  Coefficients a(m);
  std::vector<double> p2(m);
  for (std::size_t f = 0; f < m; ++f) {
    const double z = -ksq_[f] * dt;
    a[f] = std::exp(z) * U[f] + dt * phi1(z) * n0[f];
    p2[f] = phi2(z);
  }
  if (coefficient_zero_) return a;
  const Coefficients n1 = nonlinear(a);
  for (std::size_t f = 0; f < m; ++f) out[f] = a[f] + dt * p2[f] * (n1[f] - n0[f]);
  return out;
}

spectral::ScalarField nonlinear_term(const spectral::ScalarField& u, const spectral::ScalarField& b,
                                     bool dealias) {
  if (!(u.grid() == b.grid())) throw std::invalid_argument("nonlinear term needs a shared grid");
  const SpectralStepper stepper(b, Integrator::kIFRK4, dealias);
  const auto U = spectral::to_spectral(u);
  const Coefficients Uc(U.coefficients().begin(), U.coefficients().end());
  return spectral::to_physical(spectral::SpectralField(u.grid(), stepper.nonlinear(Uc)));
}

StepResult step(const spectral::ScalarField& u, const spectral::ScalarField& b, double dt,
                Integrator integrator, bool dealias) {
  if (!(u.grid() == b.grid())) throw std::invalid_argument("step needs a shared grid");
  const SpectralStepper stepper(b, integrator, dealias);
  const auto U = spectral::to_spectral(u);
  const Coefficients next = stepper.step(Coefficients(U.coefficients().begin(), U.coefficients().end()), dt);
  auto field = spectral::to_physical(spectral::SpectralField(u.grid(), next));
  const bool diverged = !field.all_finite();
  return StepResult{std::move(field), diverged};
}

}  // namespace vlab::dynamics
