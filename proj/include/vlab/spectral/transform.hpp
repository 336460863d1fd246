#pragma once

#include <vector>

#include "vlab/spectral/field.hpp"

namespace vlab::spectral {

/// In-place forward transform of complex samples (physical phase convention,
/// unnormalized). Plans are cached per grid shape and safe to share between
/// threads; execution is reentrant.
void forward_transform(const GridSpec& grid, std::vector<Complex>& data);

/// In-place inverse transform, dividing by N^n.
void inverse_transform(const GridSpec& grid, std::vector<Complex>& data);

SpectralField to_spectral(const ScalarField& f);

/// Real part of the inverse transform.
ScalarField to_physical(const SpectralField& F);

}  // namespace vlab::spectral
