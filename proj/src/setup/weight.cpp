#include "vlab/setup/weight.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace vlab::setup {
namespace {

void require_kappa(double kappa) {
  if (!(kappa > 0.0 && kappa < 1.0)) {
    throw std::invalid_argument("weight exponent kappa must lie in (0,1)");
  }
}

}  // namespace

WeightSpec::WeightSpec(double k) : kappa(k) { require_kappa(k); }

double weight_component(double kappa, double x) {
  const double ax = std::abs(x);
  if (x == 0.0 || ax >= 1.0) return 0.0;
  const double mag = std::pow(ax, -kappa) - 1.0;
  return x > 0.0 ? mag : -mag;
}

spectral::VectorField build_weight(const WeightSpec& ws, const spectral::GridSpec& grid) {
  require_kappa(ws.kappa);
  std::vector<double> axis(grid.points());
  for (int j = 0; j < grid.points(); ++j) axis[j] = weight_component(ws.kappa, grid.node(j));
  std::vector<spectral::ScalarField> comps;
  for (int a = 0; a < grid.dimension(); ++a) {
    std::vector<double> values(grid.size());
    for (std::size_t f = 0; f < values.size(); ++f) values[f] = axis[grid.unflatten(f)[a]];
    comps.emplace_back(grid, std::move(values));
  }
  return spectral::VectorField(std::move(comps));
}

double weight_l1_norm(double kappa) {
  require_kappa(kappa);
  return 2.0 * kappa / (1.0 - kappa);
}

}  // namespace vlab::setup
