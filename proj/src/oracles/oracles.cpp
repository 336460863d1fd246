#include "vlab/oracles/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "vlab/spectral/operators.hpp"
#include "vlab/spectral/transform.hpp"

namespace vlab::oracles {

using spectral::ScalarField;

namespace {

// Flat index of the mirror wavenumber -k, or npos when -k is off the grid.
std::size_t mirror(const spectral::GridSpec& grid, std::size_t f) {
  const auto idx = grid.unflatten(f);
  std::array<int, spectral::GridSpec::kMaxDimension> m{0, 0, 0};
  for (int a = 0; a < grid.dimension(); ++a) {
    const int k = grid.wavenumber_index(idx[a]);
    if (k == -grid.points() / 2) return static_cast<std::size_t>(-1);
    m[a] = (grid.points() - idx[a]) % grid.points();
  }
  return grid.flatten(std::span<const int>(m.data(), grid.dimension()));
}

}  // namespace

ScalarField heat_exact(const ScalarField& u0, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("time must be >= 0");
  const auto& grid = u0.grid();
  const auto F = spectral::to_spectral(u0);
  const auto c = F.coefficients();
  double peak = 0.0;
  for (const auto& z : c) peak = std::max(peak, std::abs(z));
  std::vector<spectral::Complex> out(c.begin(), c.end());
  if (peak == 0.0) return u0;

  const double floor = 1e-12 * peak;
  std::size_t mode = static_cast<std::size_t>(-1);
  std::size_t partner = static_cast<std::size_t>(-1);
  for (std::size_t f = 0; f < c.size(); ++f) {
    if (std::abs(c[f]) <= floor) {
      out[f] = 0.0;
      continue;
    }
    if (mode == static_cast<std::size_t>(-1)) {
      mode = f;
      partner = mirror(grid, f);
    } else if (f != partner) {
      throw std::invalid_argument("heat_exact needs a single Fourier mode");
    }
  }
  const double decay = std::exp(-grid.squared_wavenumbers()[mode] * t);
  for (auto& z : out) z *= decay;
  return spectral::to_physical(spectral::SpectralField(grid, std::move(out)));
}

ScalarField cole_hopf(const ScalarField& u0, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("time must be >= 0");
  if (!(u0.max_abs() <= kColeHopfBound)) throw std::invalid_argument("Cole-Hopf needs ||u0||_inf <= 30");
  if (t == 0.0) return u0;
  std::vector<double> e(u0.size());
  for (std::size_t f = 0; f < e.size(); ++f) e[f] = std::exp(u0[f]);
  const ScalarField heat = spectral::heat_propagate(ScalarField(u0.grid(), std::move(e)), t);
  if (!(heat.min() > 1e-300)) throw std::runtime_error("propagated exponential lost positivity");
  std::vector<double> out(heat.size());
  for (std::size_t f = 0; f < out.size(); ++f) out[f] = std::log(heat[f]);
  return ScalarField(u0.grid(), std::move(out));
}

OracleCase::OracleCase(Kind kind, const setup::CoefficientSpec& coefficient, ScalarField u0, double horizon)
    : kind_(kind), u0_(std::move(u0)), horizon_(horizon) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) throw std::invalid_argument("oracle horizon must be > 0");
  using CK = setup::CoefficientSpec::Kind;
  if (kind == Kind::kHeatMode) {
    if (coefficient.kind() != CK::kZero) throw std::invalid_argument("heat_mode oracle needs coefficient zero");
    heat_exact(u0_, 0.0);
  } else {
    if (coefficient.kind() != CK::kOne) throw std::invalid_argument("cole_hopf oracle needs coefficient one");
    if (!(u0_.max_abs() <= kColeHopfBound)) throw std::invalid_argument("Cole-Hopf needs ||u0||_inf <= 30");
  }
}

ScalarField OracleCase::exact(double t) const {
  return kind_ == Kind::kHeatMode ? heat_exact(u0_, t) : cole_hopf(u0_, t);
}

OracleErrorReport oracle_error(const OracleCase& oracle, const dynamics::RunResult& numerical, double s) {
  if (numerical.snapshots.empty()) throw std::invalid_argument("oracle comparison needs stored snapshots");
  OracleErrorReport report;
  for (const auto& snap : numerical.snapshots) {
    if (!(snap.field.grid() == oracle.initial().grid())) throw std::invalid_argument("snapshot grid mismatch");
    if (snap.time > oracle.horizon() * (1.0 + 1e-12)) throw std::invalid_argument("snapshot past oracle horizon");
    const ScalarField ref = oracle.exact(snap.time);
    std::vector<double> diff(ref.size());
    double linf = 0.0;
    for (std::size_t f = 0; f < diff.size(); ++f) {
      diff[f] = snap.field[f] - ref[f];
      linf = std::max(linf, std::abs(diff[f]));
    }
    const double hs = spectral::sobolev_norm(ScalarField(ref.grid(), std::move(diff)), s);
    report.times.push_back(snap.time);
    report.linf.push_back(linf);
    report.hs.push_back(hs);
    report.max_linf = std::max(report.max_linf, linf);
    report.max_hs = std::max(report.max_hs, hs);
  }
  return report;
}

}  // namespace vlab::oracles
