#include <gtest/gtest.h>

#include "../oracles/oracle_values.hpp"
#include "test_support.hpp"
#include "vlab/setup/coefficient.hpp"
#include "vlab/setup/conditions.hpp"
#include "vlab/setup/initial_data.hpp"
#include "vlab/setup/weight.hpp"
#include "vlab/virial/riccati.hpp"

using namespace vlab;
using namespace vlab::setup;
using testing_support::kPi;

TEST(Coefficient, BuiltinValues) {
  const auto p = CoefficientProfile::quadratic_gaussian(1.0, 1.0);
  EXPECT_DOUBLE_EQ(p.value(1.0), std::exp(-1.0));
  EXPECT_EQ(p.value(0.0), 0.0);
  const auto spec = CoefficientSpec::builtin(2, 1.0, 1.0);
  EXPECT_DOUBLE_EQ(spec.axis_value(0, 1.0) * spec.axis_value(1, 1.0), std::exp(-2.0));
  EXPECT_THROW(CoefficientProfile::quadratic_gaussian(0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(CoefficientProfile::quadratic_gaussian(1.0, -1.0), std::invalid_argument);
}

TEST(Coefficient, BuiltFieldNonnegativeAndZeroAtOrigin) {
  for (int n = 1; n <= 3; ++n) {
    const spectral::GridSpec g(n, n == 3 ? 16 : 64, 2.0 * kPi);
    const auto b = build_coefficient(CoefficientSpec::builtin(n, 2.0, 1.0), g);
    EXPECT_GE(b.min(), 0.0);
    const int mid[3] = {g.points() / 2, g.points() / 2, g.points() / 2};
    EXPECT_EQ(b[g.flatten(std::span<const int>(mid, n))], 0.0);
  }
}

TEST(Coefficient, RejectsInadmissibleProfiles) {
  const spectral::GridSpec g(1, 64, 2.0 * kPi);
  const auto shifted = CoefficientProfile::custom(
      "shifted", [](double x) { return std::exp(-x * x); }, [](double x) { return -2.0 * x * std::exp(-x * x); });
  EXPECT_THROW(build_coefficient(CoefficientSpec::product({shifted}), g), std::invalid_argument);
  const auto wide = CoefficientSpec::builtin(1, 1.0, 4.0);
  EXPECT_THROW(build_coefficient(wide, g), std::invalid_argument);  // not small at the box edge
  EXPECT_THROW(build_coefficient(CoefficientSpec::builtin(2, 1.0, 1.0), g), std::invalid_argument);
}

TEST(Weight, PointValues) {
  EXPECT_DOUBLE_EQ(weight_component(0.5, 0.25), 1.0);
  EXPECT_DOUBLE_EQ(weight_component(0.5, -0.25), -1.0);
  EXPECT_EQ(weight_component(0.5, 1.5), 0.0);
  EXPECT_EQ(weight_component(0.5, 0.0), 0.0);
  EXPECT_THROW(WeightSpec(1.0), std::invalid_argument);
  EXPECT_THROW(WeightSpec(0.0), std::invalid_argument);
}

TEST(Weight, L1NormMatchesQuadrature) {
  const double kappas[] = {0.1, 0.3, 0.5, 0.7, 0.9};
  const double oracle[] = {oracle::kWeightL1_1, oracle::kWeightL1_3, oracle::kWeightL1_5, oracle::kWeightL1_7,
                           oracle::kWeightL1_9};
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(weight_l1_norm(kappas[i]), oracle[i], 1e-8);
  EXPECT_EQ(weight_l1_norm(0.5), 2.0);
  EXPECT_NEAR(weight_l1_norm(0.9), 18.0, 1e-12);
  // 2 kappa / (1 - kappa) at kappa = 5e-4 is 1.0005e-3, just above 1e-3.
  EXPECT_NEAR(weight_l1_norm(5e-4), 1e-3 / (1.0 - 5e-4), 1e-18);
  EXPECT_LT(weight_l1_norm(1e-6), 3e-6);
}

TEST(InitialData, GaussianSum) {
  const spectral::GridSpec g(1, 64, 2.0 * kPi);
  EXPECT_EQ(build_initial_data({InitialDataSpec::Kind::kGaussianSum, 0.0, 1.0}, g).max_abs(), 0.0);
  const auto u = build_initial_data({InitialDataSpec::Kind::kGaussianSum, 1.0, 1.0}, g);
  EXPECT_DOUBLE_EQ(u[32], -0.5);
  EXPECT_THROW(build_initial_data({InitialDataSpec::Kind::kCosine, 1.0, 0.3}, g), std::invalid_argument);
}

TEST(Conditions, ZeroDatumFailsCond1) {
  const spectral::GridSpec g(1, 256, 2.0 * kPi);
  const auto b = build_coefficient(CoefficientSpec::builtin(1, 1.0, 1.0), g);
  const auto r = check_blowup_conditions(spectral::ScalarField::zeros(g), b, WeightSpec(0.5), 4.0, 1e-4, 1.0);
  EXPECT_EQ(r.I0, 0.0);
  EXPECT_FALSE(r.cond1_holds);
  EXPECT_FALSE(r.all_hold());
  EXPECT_EQ(r.c1, 0.125);
}

TEST(Conditions, LargeAmplitudePasses) {
  // With a = 1 the pairing is too weak against frakC ||u0||^2 for any A; a = 10 clears it.
  const spectral::GridSpec g(1, 256, 2.0 * kPi);
  const auto b = build_coefficient(CoefficientSpec::builtin(1, 10.0, 1.0), g);
  const auto u0 = build_initial_data({InitialDataSpec::Kind::kGaussianSum, 100.0, 1.0}, g);
  const auto r = check_blowup_conditions(u0, b, WeightSpec(0.5), 4.0, 1e-4, 1.0);
  EXPECT_GT(r.I0, 0.0);
  EXPECT_TRUE(r.all_hold());
  EXPECT_EQ(r.c1, virial::riccati_c1(1, 0.5));
  EXPECT_THROW(check_blowup_conditions(u0, b, WeightSpec(0.5), 4.0, 0.0, 1.0), std::invalid_argument);
}
