#pragma once

#include <vector>

#include "vlab/dynamics/types.hpp"
#include "vlab/setup/coefficient.hpp"
#include "vlab/spectral/field.hpp"

namespace vlab::oracles {

/// Exact heat evolution of a pure Fourier mode: the coefficients of +-k are
/// multiplied by exp(-|xi_k|^2 t). Throws std::invalid_argument when u0 has
/// spectral support outside one conjugate pair {k, -k}, or t < 0.
spectral::ScalarField heat_exact(const spectral::ScalarField& u0, double t);

/// log(h_t * exp(u0)), the exact solution of u_t = Delta u + |grad u|^2.
/// Throws std::invalid_argument when ||u0||_inf > 30 or t < 0, and
/// std::runtime_error if the propagated exponential is not strictly positive.
spectral::ScalarField cole_hopf(const spectral::ScalarField& u0, double t);

inline constexpr double kColeHopfBound = 30.0;

/// Reference problem with a closed-form solution.
class OracleCase {
 public:
  enum class Kind { kHeatMode, kColeHopf };

  /// heat_mode needs the Zero coefficient and cole_hopf the One coefficient;
  /// the initial field is validated for the chosen kind.
  OracleCase(Kind kind, const setup::CoefficientSpec& coefficient, spectral::ScalarField u0, double horizon);

  Kind kind() const { return kind_; }
  const spectral::ScalarField& initial() const { return u0_; }
  double horizon() const { return horizon_; }

  spectral::ScalarField exact(double t) const;

 private:
  Kind kind_;
  spectral::ScalarField u0_;
  double horizon_;
};

struct OracleErrorReport {
  std::vector<double> times;
  std::vector<double> linf;  ///< max |u - u_exact|
  std::vector<double> hs;    ///< ||u - u_exact||_{H^s}
  double max_linf = 0.0;
  double max_hs = 0.0;
};

/// Compares every stored snapshot of `numerical` with the exact solution.
/// Throws std::invalid_argument when there are no snapshots, a grid differs,
/// or a snapshot lies past the case horizon.
OracleErrorReport oracle_error(const OracleCase& oracle, const dynamics::RunResult& numerical, double s);

}  // namespace vlab::oracles
