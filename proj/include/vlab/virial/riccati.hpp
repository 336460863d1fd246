#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vlab/dynamics/types.hpp"

namespace vlab::virial {

/// kappa / 2^{n+1}. Throws std::invalid_argument for n < 1 or kappa outside (0,1).
double riccati_c1(int dimension, double kappa);

/// J' = c1 J^2 - c2 with J(0) = I0.
struct RiccatiParams {
  double c1 = 1.0;
  double c2 = 0.0;
  double I0 = 0.0;

  /// Throws std::invalid_argument unless c1 > 0 and c2 >= 0 (all finite).
  void validate() const;
  /// I0 sqrt(c1) - sqrt(c2); J blows up in finite time iff this is positive.
  double margin() const;
};

/// Raised when blow-up is requested but I0 sqrt(c1) - sqrt(c2) <= 0.
class PositivityError : public std::domain_error {
 public:
  explicit PositivityError(double margin);
  double margin() const { return margin_; }

 private:
  double margin_;
};

/// Below this c2 the c2 -> 0 limit formulas are used.
inline constexpr double kTinyC2 = 1e-300;

/// Closed-form Riccati solution. For c2 < kTinyC2, J = I0 / (1 - c1 I0 t).
/// Throws std::domain_error for t < 0, t >= t* when J blows up, or when the
/// denominator is within 1e-14 (relative) of zero.
double riccati_J(const RiccatiParams& p, double t);

/// t* = ln((I0 sqrt(c1) + sqrt(c2)) / (I0 sqrt(c1) - sqrt(c2))) / (2 sqrt(c1 c2)),
/// or 1 / (c1 I0) for c2 < kTinyC2. Throws PositivityError when the margin is <= 0.
double blowup_time(const RiccatiParams& p);

/// c2_hat = max (c1 I^2 - dI/dt)_+ over samples with t <= early_fraction * t_last,
/// dI/dt by three-point differences on the (possibly non-uniform) samples.
double fit_c2_hat(std::span<const dynamics::TrajectoryRecord> series, double c1, double early_fraction = 0.25);

struct ComparisonVerdict {
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::optional<std::size_t> first_violation;  ///< index into the series
  std::optional<double> t_star;
  bool ok() const { return violations == 0; }
};

/// Checks I(t_k) >= J(t_k) - tol (1 + |J|) for every sample with t_k < t*.
/// Throws std::invalid_argument for an empty series or when p.I0 differs from
/// the first sample's I by more than 1e-9 (1 + |I0|).
ComparisonVerdict comparison_check(std::span<const dynamics::TrajectoryRecord> series, const RiccatiParams& p,
                                   double tol = 1e-9);

}  // namespace vlab::virial
