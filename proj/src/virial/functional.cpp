#include "vlab/virial/functional.hpp"

#include <cmath>
#include <stdexcept>

#include "vlab/spectral/operators.hpp"
#include "vlab/spectral/transform.hpp"

namespace vlab::virial {

using spectral::ScalarField;
using spectral::VectorField;

namespace {

ScalarField pointwise(const ScalarField& a, const ScalarField& b, double scale = 1.0) {
  std::vector<double> out(a.size());
  for (std::size_t f = 0; f < out.size(); ++f) out[f] = scale * a[f] * b[f];
  return ScalarField(a.grid(), std::move(out));
}

ScalarField squared_magnitude(const VectorField& v) {
  std::vector<double> out(v.grid().size(), 0.0);
  for (const auto& c : v.components()) {
    for (std::size_t f = 0; f < out.size(); ++f) out[f] += c[f] * c[f];
  }
  return ScalarField(v.grid(), std::move(out));
}

bool all_zero(const ScalarField& b) {
  for (double x : b.values()) {
    if (x != 0.0) return false;
  }
  return true;
}

void check_vector(const VectorField& v, const spectral::GridSpec& grid) {
  if (!(v.grid() == grid) || v.dimension() != grid.dimension()) {
    throw std::invalid_argument("vector field does not match the virial grid");
  }
}

}  // namespace

VirialContext::VirialContext(const spectral::GridSpec& grid, const setup::CoefficientSpec& coefficient,
                             const setup::WeightSpec& ws, bool dealias)
    : quadrature_(grid, ws.kappa),
      b_(setup::build_coefficient(coefficient, grid)),
      dealias_(dealias),
      zero_(coefficient.kind() == setup::CoefficientSpec::Kind::kZero) {
  const int n = grid.dimension();
  if (coefficient.kind() != setup::CoefficientSpec::Kind::kProduct) {
    db_.assign(n, ScalarField::zeros(grid));
    return;
  }
  const auto factors = setup::axis_factors(coefficient, grid);
  for (int i = 0; i < n; ++i) {
    std::vector<double> d(grid.size());
    for (std::size_t f = 0; f < d.size(); ++f) {
      const auto idx = grid.unflatten(f);
      double p = factors.derivative[i][idx[i]];
      for (int j = 0; j < n; ++j) {
        if (j != i) p *= factors.value[j][idx[j]];
      }
      d[f] = p;
    }
    db_.emplace_back(grid, std::move(d));
  }
}

VirialContext::VirialContext(const ScalarField& b, const setup::WeightSpec& ws, bool dealias)
    : quadrature_(b.grid(), ws.kappa), b_(b), dealias_(dealias), zero_(all_zero(b)) {
  db_ = spectral::gradient(b).components();
}

double VirialContext::I(const VectorField& v) const {
  check_vector(v, grid());
  if (zero_) return 0.0;
  double sum = 0.0;
  for (int i = 0; i < v.dimension(); ++i) {
    sum += quadrature_.integrate(pointwise(v[i], b_), i, LineWeight::kWeight);
  }
  return sum;
}

VirialBreakdown VirialContext::breakdown(const VectorField& v) const {
  check_vector(v, grid());
  const int n = v.dimension();
  VirialBreakdown out;
  out.per_axis_I1.assign(n, 0.0);
  out.per_axis_I1_bound.assign(n, 0.0);
  if (zero_) return out;

  const double kappa = quadrature_.kappa();
  const ScalarField v2 = squared_magnitude(v);
  const ScalarField v2b = pointwise(v2, b_);
  const ScalarField v2b2 = pointwise(v2b, b_);

  auto flux = spectral::to_spectral(v2b);
  if (dealias_) flux = spectral::dealias(flux);

  for (int i = 0; i < n; ++i) {
    out.I += quadrature_.integrate(pointwise(v[i], b_), i, LineWeight::kWeight);
    const ScalarField lap = spectral::laplacian(v[i]);
    out.A += quadrature_.integrate(pointwise(lap, b_), i, LineWeight::kWeight);
    const ScalarField dflux = spectral::to_physical(spectral::derivative(flux, i));
    out.B += quadrature_.integrate(pointwise(dflux, b_), i, LineWeight::kWeight);
    out.I2 += quadrature_.integrate(v2b2, i, LineWeight::kWeightSquared);
    out.I3 -= quadrature_.integrate(pointwise(v2b, db_[i]), i, LineWeight::kWeight);
    out.per_axis_I1[i] = kappa * quadrature_.integrate(v2b2, i, LineWeight::kSingular);
    out.per_axis_I1_bound[i] = 0.5 * kappa * quadrature_.integrate(v2b2, i, LineWeight::kWeightSquared);
  }
  out.I2 *= 0.5 * kappa;
  return out;
}

double virial_I(const VectorField& v, const ScalarField& b, const setup::WeightSpec& ws) {
  return VirialContext(b, ws).I(v);
}

VirialBreakdown identity_terms(const VectorField& v, const ScalarField& b, const setup::WeightSpec& ws,
                               bool dealias) {
  return VirialContext(b, ws, dealias).breakdown(v);
}

IdentityCheck check_identity(std::span<const spectral::FieldSnapshot> snapshots, const VirialContext& ctx) {
  if (snapshots.size() < 3) throw std::invalid_argument("identity check needs at least three snapshots");
  const double h = snapshots[1].time - snapshots[0].time;
  if (!(h > 0.0)) throw std::invalid_argument("snapshot times must increase");
  for (std::size_t k = 1; k < snapshots.size(); ++k) {
    const double step = snapshots[k].time - snapshots[k - 1].time;
    if (std::abs(step - h) > 1e-9 * h) throw std::invalid_argument("snapshots must be uniformly spaced in time");
  }
  std::vector<double> I(snapshots.size());
  for (std::size_t k = 0; k < snapshots.size(); ++k) I[k] = ctx.I(spectral::gradient(snapshots[k].field));

  IdentityCheck out;
  for (std::size_t k = 1; k + 1 < snapshots.size(); ++k) {
    const auto terms = ctx.breakdown(spectral::gradient(snapshots[k].field));
    const double dI = (I[k + 1] - I[k - 1]) / (snapshots[k + 1].time - snapshots[k - 1].time);
    const double r = std::abs(dI - (terms.A + terms.B)) / (std::abs(terms.A) + std::abs(terms.B) + 1.0);
    out.times.push_back(snapshots[k].time);
    out.residuals.push_back(r);
    out.max_residual = std::max(out.max_residual, r);
  }
  return out;
}

}  // namespace vlab::virial
