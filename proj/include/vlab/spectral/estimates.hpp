#pragma once

#include "vlab/spectral/field.hpp"

namespace vlab::spectral {

/// ||e^{t Delta} phi||_{H^{s1+s2}} / ((1 + t^{-s2}) ||phi||_{H^{s1}}).
///
/// The heat-smoothing estimate asserts this ratio is bounded uniformly in
/// phi and t; with s2 = 0 it never exceeds 1/2. Throws for t <= 0, negative
/// indices, or a zero field.
double check_smoothing_estimate(const ScalarField& phi, double t, double s1, double s2);

/// ||f g||_{H^s} / (||f||_{H^s} ||g||_{H^s}) for s > n/2.
///
/// Both factors are first truncated by the two-thirds rule; their product is
/// then formed on a grid refined by two, where it is represented exactly, so
/// the numerator is the true norm of the product of the retained parts.
double check_algebra(const ScalarField& f, const ScalarField& g, double s);

/// Exact H^s norm of the product of the trigonometric interpolants of f, g.
double exact_product_norm(const SpectralField& f, const SpectralField& g, double s);

}  // namespace vlab::spectral
