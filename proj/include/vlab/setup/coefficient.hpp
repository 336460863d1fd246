#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vlab/spectral/field.hpp"

namespace vlab::setup {

/// One axis factor b_i of the product coefficient b(x) = prod_i b_i(x_i).
///
/// The builtin family is b_i(x) = a x^2 exp(-x^2 / sigma^2): nonnegative,
/// zero at the origin, non-constant and Schwartz. Custom profiles are accepted
/// through `custom` and validated on the grid when the coefficient is built.
class CoefficientProfile {
 public:
  using Fn = std::function<double(double)>;

  /// Throws std::invalid_argument unless a > 0 and sigma > 0.
  static CoefficientProfile quadratic_gaussian(double amplitude, double width);
  static CoefficientProfile custom(std::string name, Fn value, Fn derivative);

  const std::string& name() const { return name_; }
  double amplitude() const { return amplitude_; }
  double width() const { return width_; }
  bool is_builtin() const { return builtin_; }

  double value(double x) const;
  double derivative(double x) const;

 private:
  CoefficientProfile() = default;

  std::string name_;
  bool builtin_ = false;
  double amplitude_ = 0.0;
  double width_ = 0.0;
  Fn value_;
  Fn derivative_;
};

/// Product coefficient, or one of the flagged constants used by the oracle
/// and linear modes. Zero and One do not satisfy the admissibility conditions
/// (nonnegative Schwartz factors vanishing at the origin).
class CoefficientSpec {
 public:
  enum class Kind { kProduct, kZero, kOne };

  static CoefficientSpec product(std::vector<CoefficientProfile> profiles);
  /// The same builtin profile on every axis.
  static CoefficientSpec builtin(int dimension, double amplitude, double width);
  static CoefficientSpec zero();
  static CoefficientSpec one();

  Kind kind() const { return kind_; }
  bool admissible() const { return kind_ == Kind::kProduct; }
  const std::vector<CoefficientProfile>& profiles() const { return profiles_; }

  /// Value b_i(x) of the axis factor; 0 or 1 for the flagged constants.
  double axis_value(int axis, double x) const;
  double axis_derivative(int axis, double x) const;

 private:
  Kind kind_ = Kind::kZero;
  std::vector<CoefficientProfile> profiles_;
};

/// Per-axis samples b_i(x_j) and b_i'(x_j), indexed [axis][node].
struct AxisFactors {
  std::vector<std::vector<double>> value;
  std::vector<std::vector<double>> derivative;
};

/// Samples prod_i b_i(x_i) on the grid.
///
/// Product specs are checked against the grid: one profile per axis, values
/// nonnegative and zero at the origin, and |b_i(+-L)| below 1e-12 of the axis
/// maximum so the periodized coefficient is effectively compactly supported.
/// Throws std::invalid_argument on any violation.
spectral::ScalarField build_coefficient(const CoefficientSpec& spec, const spectral::GridSpec& grid);

AxisFactors axis_factors(const CoefficientSpec& spec, const spectral::GridSpec& grid);

}  // namespace vlab::setup
