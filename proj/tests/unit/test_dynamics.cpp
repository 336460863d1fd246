#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vlab/dynamics/evolve.hpp"
#include "vlab/dynamics/integrator.hpp"
#include "vlab/dynamics/picard.hpp"
#include "vlab/setup/coefficient.hpp"
#include "vlab/spectral/operators.hpp"
#include "vlab/spectral/transform.hpp"

using namespace vlab;
using namespace vlab::dynamics;
using spectral::GridSpec;
using spectral::ScalarField;
using testing_support::kPi;
using testing_support::max_abs_diff;

namespace {

ScalarField cos_x(const GridSpec& g, double a = 1.0) {
  return ScalarField::sample(g, [a](std::span<const double> x) { return a * std::cos(x[0]); });
}

ScalarField integrate_fixed(const ScalarField& u0, const ScalarField& b, double T, int steps, Integrator integ) {
  const SpectralStepper stepper(b, integ, false);
  const auto U0 = spectral::to_spectral(u0);
  Coefficients U(U0.coefficients().begin(), U0.coefficients().end());
  for (int k = 0; k < steps; ++k) U = stepper.step(U, T / steps);
  return spectral::to_physical(spectral::SpectralField(u0.grid(), U));
}

// Classical RK4 on the method-of-lines system u' = Delta u + |grad u|^2 b.
ScalarField dense_rk4(const ScalarField& u0, const ScalarField& b, double T, int substeps) {
  auto rhs = [&](const ScalarField& u) {
    const auto lap = spectral::laplacian(u);
    const auto nl = nonlinear_term(u, b);
    std::vector<double> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = lap[i] + nl[i];
    return out;
  };
  auto axpy = [&](const ScalarField& u, const std::vector<double>& k, double h) {
    std::vector<double> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] + h * k[i];
    return ScalarField(u.grid(), std::move(out));
  };
  ScalarField u = u0;
  const double h = T / substeps;
  for (int s = 0; s < substeps; ++s) {
    const auto k1 = rhs(u);
    const auto k2 = rhs(axpy(u, k1, h / 2));
    const auto k3 = rhs(axpy(u, k2, h / 2));
    const auto k4 = rhs(axpy(u, k3, h));
    std::vector<double> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] + h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    u = ScalarField(u.grid(), std::move(out));
  }
  return u;
}

}  // namespace

TEST(Nonlinear, TrivialCases) {
  const GridSpec g(1, 64, kPi);
  EXPECT_EQ(nonlinear_term(cos_x(g), ScalarField::zeros(g)).max_abs(), 0.0);
  EXPECT_LT(nonlinear_term(ScalarField::constant(g, 3.0), ScalarField::constant(g, 1.0)).max_abs(), 1e-14);
}

TEST(Nonlinear, SinSquared) {
  const GridSpec g(1, 64, kPi);
  const auto nl = nonlinear_term(cos_x(g), ScalarField::constant(g, 1.0));
  const auto expect = ScalarField::sample(g, [](std::span<const double> x) { return 0.5 - 0.5 * std::cos(2 * x[0]); });
  EXPECT_LT(max_abs_diff(nl, expect), 1e-12);
}

TEST(Step, LinearCaseIsExactHeatFlow) {
  std::mt19937_64 rng(11);
  const GridSpec g(2, 32, 2.0);
  const auto u = testing_support::random_band_limited(g, 5, rng);
  for (auto integ : {Integrator::kIFRK4, Integrator::kETD2}) {
    const auto r = step(u, ScalarField::zeros(g), 0.05, integ);
    EXPECT_FALSE(r.diverged);
    EXPECT_LT(max_abs_diff(r.u, spectral::heat_propagate(u, 0.05)), 1e-13);
  }
  EXPECT_THROW(step(u, ScalarField::zeros(g), 0.0), std::invalid_argument);
}

TEST(Step, SelfConvergenceOrder) {
  const GridSpec g(1, 64, 2.0 * kPi);
  const auto b = setup::build_coefficient(setup::CoefficientSpec::builtin(1, 1.0, 1.0), g);
  const auto u0 = ScalarField::sample(g, [](std::span<const double> x) { return -2.0 * std::exp(-x[0] * x[0]); });
  const double T = 0.2;
  struct Case {
    Integrator integ;
    int base;
    double min_ratio;
  };
  for (const Case c : {Case{Integrator::kIFRK4, 4, 12.0}, Case{Integrator::kETD2, 16, 3.5}}) {
    const auto ref = integrate_fixed(u0, b, T, c.base * 16, c.integ);
    const double e1 = max_abs_diff(integrate_fixed(u0, b, T, c.base, c.integ), ref);
    const double e2 = max_abs_diff(integrate_fixed(u0, b, T, c.base * 2, c.integ), ref);
    EXPECT_GE(e1 / e2, c.min_ratio) << to_string(c.integ) << " e1=" << e1 << " e2=" << e2;
  }
}

TEST(Step, Etd2MatchesDenseRk4) {
  const GridSpec g(1, 64, kPi);
  const auto u = cos_x(g);
  const auto b = ScalarField::constant(g, 1.0);
  const auto r = step(u, b, 1e-4, Integrator::kETD2);
  EXPECT_LT(max_abs_diff(r.u, dense_rk4(u, b, 1e-4, 100)), 1e-8);
}

TEST(Evolve, HeatDecay) {
  const GridSpec g(1, 64, kPi);
  SolverConfig cfg;
  const auto r = evolve(cos_x(g), ScalarField::zeros(g), cfg);
  EXPECT_EQ(r.status, RunStatus::kCompleted);
  EXPECT_EQ(r.t_final, 1.0);
  const auto expect = cos_x(g, std::exp(-1.0));
  EXPECT_LT(max_abs_diff(*r.final_field, expect), 1e-6);
}

TEST(Evolve, SamplesLandOnMultiples) {
  const GridSpec g(1, 64, kPi);
  SolverConfig cfg;
  cfg.t_end = 0.5;
  cfg.sample_interval = 0.1;
  const auto r = evolve(cos_x(g, 0.1), ScalarField::constant(g, 1.0), cfg);
  ASSERT_EQ(r.snapshots.size(), 6u);
  for (std::size_t k = 0; k < r.snapshots.size(); ++k) EXPECT_NEAR(r.snapshots[k].time, 0.1 * k, 1e-15);
}

TEST(Evolve, ValidationNamesTheKey) {
  const GridSpec g(1, 64, kPi);
  SolverConfig cfg;
  cfg.dt0 = -1.0;
  try {
    evolve(cos_x(g), ScalarField::zeros(g), cfg);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("solver.dt0"), std::string::npos);
  }
  SolverConfig low_s;
  low_s.s = 3.0;
  EXPECT_THROW(evolve(cos_x(g), ScalarField::zeros(g), low_s), std::invalid_argument);
}

TEST(Evolve, ThresholdDetection) {
  const GridSpec g(1, 64, kPi);
  SolverConfig cfg;
  cfg.thresholds.norm_blowup = 2.0;
  const auto r = evolve(cos_x(g, 10.0), ScalarField::zeros(g), cfg);
  EXPECT_EQ(r.status, RunStatus::kBlowupDetected);
  EXPECT_EQ(r.detection, Detection::kNormThreshold);
  EXPECT_EQ(r.t_final, 0.0);
}

TEST(Evolve, TailMassOfConcentratedField) {
  const GridSpec g(1, 256, 4.0 * kPi);
  const auto u = ScalarField::sample(g, [](std::span<const double> x) { return std::exp(-x[0] * x[0]); });
  EXPECT_LT(tail_mass(u), 1e-12);
  EXPECT_NEAR(tail_mass(ScalarField::constant(g, 1.0)), 0.125, 0.01);
}

TEST(Picard, LinearProblemIsFixedPoint) {
  const GridSpec g(1, 64, kPi);
  PicardOptions opt;
  const auto r = picard_iterate(cos_x(g), ScalarField::zeros(g), opt);
  ASSERT_FALSE(r.sup_differences.empty());
  for (double d : r.sup_differences) EXPECT_LT(d, 1e-10);
  EXPECT_FALSE(r.diverged);
}

TEST(Picard, SmallDataContracts) {
  const GridSpec g(1, 128, 8.0 * kPi);
  const auto b = setup::build_coefficient(setup::CoefficientSpec::builtin(1, 1.0, 4.0), g);
  const auto u0 = ScalarField::sample(g, [](std::span<const double> x) { return 2.0 * std::cos(x[0] / 8.0); });
  PicardOptions opt;
  opt.T = 0.2;
  opt.slices = 32;
  opt.iterations = 10;
  const auto r = picard_iterate(u0, b, opt);
  ASSERT_LT(r.smallness, 1.0);
  EXPECT_FALSE(r.diverged);
  EXPECT_GT(r.contraction_factor, 0.0);
  EXPECT_LE(r.contraction_factor, 1.1 * r.smallness / 2.0);
  for (std::size_t k = 1; k < 5; ++k) EXPECT_LT(r.sup_differences[k], r.sup_differences[k - 1]);
}

TEST(Picard, ShapeFitRecoversExactShape) {
  const std::vector<double> T = {0.05, 0.1, 0.2, 0.4, 0.6, 0.8};
  std::vector<double> y;
  for (double t : T) y.push_back(0.7 * t + 0.3 * std::sqrt(t));
  const auto fit = fit_time_shape(T, y);
  EXPECT_NEAR(fit.alpha, 0.7, 1e-10);
  EXPECT_NEAR(fit.beta, 0.3, 1e-10);
  EXPECT_NEAR(fit.r_squared, 1.0, 1e-12);
}
