#include <gtest/gtest.h>

#include "../oracles/oracle_values.hpp"
#include "test_support.hpp"
#include "vlab/dynamics/evolve.hpp"
#include "vlab/setup/coefficient.hpp"
#include "vlab/setup/weight.hpp"
#include "vlab/spectral/operators.hpp"
#include "vlab/virial/functional.hpp"
#include "vlab/virial/quadrature.hpp"
#include "vlab/virial/riccati.hpp"

using namespace vlab;
using namespace vlab::virial;
using spectral::GridSpec;
using spectral::ScalarField;
using spectral::VectorField;
using testing_support::kPi;

namespace {

VectorField gaussian_gradient(const GridSpec& g) {
  return VectorField({ScalarField::sample(g, [](std::span<const double> x) { return x[0] * std::exp(-x[0] * x[0]); })});
}

}  // namespace

TEST(Quadrature, PowerIntegral) {
  EXPECT_NEAR(power_integral(2.0, 0.0, 1.0), 1.0 / 3.0, 1e-15);
  EXPECT_TRUE(std::isinf(power_integral(-1.5, 0.0, 1.0)));
  EXPECT_NEAR(power_integral(-0.5, 0.0, 1.0), 2.0, 1e-15);
}

TEST(Quadrature, RejectsCoarseGrid) {
  EXPECT_THROW(ProductQuadrature(GridSpec(1, 16, 2.0 * kPi), 0.5), std::invalid_argument);
  EXPECT_THROW(ProductQuadrature(GridSpec(1, 64, 0.5), 0.5), std::invalid_argument);
}

TEST(Virial, EvenGradientGivesZero) {
  const GridSpec g(1, 256, 2.0 * kPi);
  const auto b = setup::build_coefficient(setup::CoefficientSpec::builtin(1, 1.0, 1.0), g);
  const VectorField v({ScalarField::sample(g, [](std::span<const double> x) { return std::exp(-x[0] * x[0]); })});
  EXPECT_NEAR(virial_I(v, b, setup::WeightSpec(0.5)), 0.0, 1e-14);
}

TEST(Virial, MatchesAdaptiveQuadratureAndConvergesAtSecondOrder) {
  double prev_err = 0.0;
  for (int N : {256, 512, 1024, 2048, 4096}) {
    const GridSpec g(1, N, 2.0 * kPi);
    const auto b = setup::build_coefficient(setup::CoefficientSpec::builtin(1, 1.0, 1.0), g);
    const double err = std::abs(virial_I(gaussian_gradient(g), b, setup::WeightSpec(0.5)) - oracle::kVirial1D);
    if (N == 4096) EXPECT_LT(err, 1e-6);
    if (prev_err > 0.0) EXPECT_GE(prev_err / err, 4.0) << "N = " << N;
    prev_err = err;
  }
}

TEST(Virial, ZeroCoefficientGivesZeroTerms) {
  const GridSpec g(1, 128, 2.0 * kPi);
  const auto t = identity_terms(gaussian_gradient(g), ScalarField::zeros(g), setup::WeightSpec(0.5));
  EXPECT_EQ(t.I, 0.0);
  EXPECT_EQ(t.A, 0.0);
  EXPECT_EQ(t.B, 0.0);
  EXPECT_EQ(t.I2, 0.0);
  EXPECT_EQ(t.I3, 0.0);
}

TEST(Virial, BSplitsIntoI1PlusI3) {
  const GridSpec g(1, 1024, 2.0 * kPi);
  const VirialContext ctx(g, setup::CoefficientSpec::builtin(1, 1.0, 1.0), setup::WeightSpec(0.5), false);
  const auto t = ctx.breakdown(gaussian_gradient(g));
  EXPECT_NEAR(t.B, t.per_axis_I1[0] + t.I3, 1e-4 * std::abs(t.B));
  EXPECT_GE(t.per_axis_I1[0], t.per_axis_I1_bound[0]);
}

TEST(Virial, IdentityOnZeroCoefficientRun) {
  const GridSpec g(1, 128, 2.0 * kPi);
  const auto u0 = ScalarField::sample(g, [](std::span<const double> x) { return std::exp(-x[0] * x[0]); });
  dynamics::SolverConfig cfg;
  cfg.t_end = 0.1;
  cfg.sample_interval = 0.01;
  const auto r = dynamics::evolve(u0, ScalarField::zeros(g), cfg);
  const VirialContext ctx(g, setup::CoefficientSpec::zero(), setup::WeightSpec(0.5));
  EXPECT_LE(check_identity(r.snapshots, ctx).max_residual, 1e-8);
  EXPECT_THROW(check_identity(std::span(r.snapshots).first(2), ctx), std::invalid_argument);
}

TEST(Riccati, C1Formula) {
  EXPECT_EQ(riccati_c1(1, 0.5), 0.125);
  EXPECT_EQ(riccati_c1(3, 0.5), 0.03125);
  EXPECT_LT(riccati_c1(1, 1e-12), 1e-12);
  EXPECT_THROW(riccati_c1(1, 1.0), std::invalid_argument);
}

TEST(Riccati, ClosedForm) {
  EXPECT_EQ(riccati_J({1.0, 1.0, 2.0}, 0.0), 2.0);
  EXPECT_NEAR(riccati_J({1.0, 1.0, 0.0}, 1.0), -oracle::kTanh1, 1e-12);
  const RiccatiParams p{1.0, 1.0, 2.0};
  const double h = 1e-5;
  const double t = 0.2;
  const double d = (riccati_J(p, t + h) - riccati_J(p, t - h)) / (2.0 * h);
  EXPECT_NEAR(d, p.c1 * std::pow(riccati_J(p, t), 2) - p.c2, 1e-7);
}

TEST(Riccati, BlowupTime) {
  EXPECT_NEAR(blowup_time({1.0, 1.0, 2.0}), oracle::kHalfLog3, 1e-12);
  EXPECT_EQ(blowup_time({1.0, 0.0, 2.0}), 0.5);
  EXPECT_THROW(blowup_time({1.0, 1.0, 1.0}), PositivityError);
  try {
    blowup_time({1.0, 1.0, 1.0});
  } catch (const PositivityError& e) {
    EXPECT_NE(std::string(e.what()).find("I(0)√c1 − √c2 must be positive"), std::string::npos);
  }
  EXPECT_THROW(riccati_J({1.0, 1.0, 2.0}, 0.6), std::domain_error);
}

TEST(Riccati, ComparisonOnExactSolution) {
  const RiccatiParams p{0.5, 0.3, 2.0};
  std::vector<dynamics::TrajectoryRecord> series;
  for (int k = 0; k < 50; ++k) {
    dynamics::TrajectoryRecord r;
    r.t = 0.01 * k;
    r.I = riccati_J(p, r.t);
    series.push_back(r);
  }
  const auto v = comparison_check(series, p);
  EXPECT_EQ(v.checked, 50u);
  EXPECT_TRUE(v.ok());
}

TEST(Riccati, ComparisonOnSubEquilibriumBranch) {
  const RiccatiParams p{1.0, 2.0, 1.0};  // c1 I0^2 < c2: J decreases
  std::vector<dynamics::TrajectoryRecord> series;
  for (int k = 0; k < 20; ++k) series.push_back({0.05 * k, 1.0});
  EXPECT_TRUE(comparison_check(series, p).ok());
  series[0].I = 1.5;
  EXPECT_THROW(comparison_check(series, p), std::invalid_argument);
}

TEST(Riccati, FitC2HatOnExactSolution) {
  const RiccatiParams p{0.5, 0.3, 2.0};
  std::vector<dynamics::TrajectoryRecord> series;
  for (int k = 0; k < 100; ++k) {
    dynamics::TrajectoryRecord r;
    r.t = 0.005 * k * (1.0 + 0.01 * k);
    r.I = riccati_J(p, r.t);
    series.push_back(r);
  }
  EXPECT_NEAR(fit_c2_hat(series, p.c1), p.c2, 1e-4);
}
