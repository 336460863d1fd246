#pragma once

#include "vlab/spectral/field.hpp"

namespace vlab::setup {

/// Initial-data families.
///
///  - kGaussianSum: u0(x) = -(A/2) sum_i exp(-x_i^2). Its gradient
///    A x_i exp(-x_i^2) has the sign of w_i on (-1,1), so the virial pairing is
///    positive for A > 0 with any admissible coefficient.
///  - kCosine: u0(x) = A sum_i cos(f x_i); f L / pi must be an integer so the
///    field is periodic on the box.
struct InitialDataSpec {
  enum class Kind { kGaussianSum, kCosine };

  Kind kind = Kind::kGaussianSum;
  double amplitude = 0.0;
  double frequency = 1.0;
};

/// Throws std::invalid_argument for a non-periodic cosine or non-finite A.
spectral::ScalarField build_initial_data(const InitialDataSpec& spec, const spectral::GridSpec& grid);

}  // namespace vlab::setup
