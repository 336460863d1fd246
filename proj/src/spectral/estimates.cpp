#include "vlab/spectral/estimates.hpp"

#include <cmath>
#include <stdexcept>

#include "vlab/spectral/operators.hpp"
#include "vlab/spectral/transform.hpp"

namespace vlab::spectral {

double check_smoothing_estimate(const ScalarField& phi, double t, double s1, double s2) {
  if (!(t > 0.0)) throw std::invalid_argument("smoothing check needs t > 0");
  if (!(s1 >= 0.0) || !(s2 >= 0.0)) throw std::invalid_argument("Sobolev indices must be >= 0");
  const auto Phi = to_spectral(phi);
  const double base = sobolev_norm(Phi, s1);
  if (base == 0.0) throw std::invalid_argument("smoothing check rejects the zero field");
  const double smoothed = sobolev_norm(heat_propagate(Phi, t), s1 + s2);
  return smoothed / ((1.0 + std::pow(t, -s2)) * base);
}

double exact_product_norm(const SpectralField& f, const SpectralField& g, double s) {
  if (!(f.grid() == g.grid())) throw std::invalid_argument("product needs a shared grid");
  // Products of modes up to N/2 reach N; doubling the grid holds them all.
  const auto pf = to_physical(zero_pad(f, 2));
  const auto pg = to_physical(zero_pad(g, 2));
  return sobolev_norm(multiply(pf, pg), s);
}

double check_algebra(const ScalarField& f, const ScalarField& g, double s) {
  const int n = f.grid().dimension();
  if (!(s > 0.5 * n)) throw std::invalid_argument("algebra check needs s > n/2");
  const auto F = dealias(to_spectral(f));
  const auto G = dealias(to_spectral(g));
  const double nf = sobolev_norm(F, s);
  const double ng = sobolev_norm(G, s);
  if (nf == 0.0 || ng == 0.0) throw std::invalid_argument("algebra check rejects a zero field");
  return exact_product_norm(F, G, s) / (nf * ng);
}

}  // namespace vlab::spectral
