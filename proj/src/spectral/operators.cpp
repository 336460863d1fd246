#include "vlab/spectral/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "vlab/spectral/transform.hpp"

namespace vlab::spectral {

SpectralField derivative(const SpectralField& F, int axis) {
  const auto& grid = F.grid();
  if (axis < 0 || axis >= grid.dimension()) throw std::invalid_argument("derivative axis out of range");
  std::vector<Complex> out(F.coefficients().begin(), F.coefficients().end());
  const int nyquist = grid.points() / 2;
  for (std::size_t f = 0; f < out.size(); ++f) {
    const int idx = grid.unflatten(f)[axis];
    out[f] = idx == nyquist ? Complex(0.0) : out[f] * Complex(0.0, grid.wavenumber(idx));
  }
  return SpectralField(grid, std::move(out));
}

VectorField gradient(const ScalarField& u) {
  const auto U = to_spectral(u);
  std::vector<ScalarField> comps;
  comps.reserve(u.grid().dimension());
  for (int a = 0; a < u.grid().dimension(); ++a) comps.push_back(to_physical(derivative(U, a)));
  return VectorField(std::move(comps));
}

SpectralField laplacian(const SpectralField& F) {
  const auto ksq = F.grid().squared_wavenumbers();
  std::vector<Complex> out(F.coefficients().begin(), F.coefficients().end());
  for (std::size_t f = 0; f < out.size(); ++f) out[f] *= -ksq[f];
  return SpectralField(F.grid(), std::move(out));
}

ScalarField laplacian(const ScalarField& u) { return to_physical(laplacian(to_spectral(u))); }

ScalarField divergence(const VectorField& v) {
  const auto& grid = v.grid();
  std::vector<Complex> acc(grid.size());
  for (int a = 0; a < v.dimension(); ++a) {
    const auto d = derivative(to_spectral(v[a]), a);
    for (std::size_t f = 0; f < acc.size(); ++f) acc[f] += d[f];
  }
  return to_physical(SpectralField(grid, std::move(acc)));
}

SpectralField heat_propagate(const SpectralField& F, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("heat propagation time must be >= 0");
  if (t == 0.0) return F;
  const auto ksq = F.grid().squared_wavenumbers();
  std::vector<Complex> out(F.coefficients().begin(), F.coefficients().end());
  for (std::size_t f = 0; f < out.size(); ++f) out[f] *= std::exp(-ksq[f] * t);
  return SpectralField(F.grid(), std::move(out));
}

ScalarField heat_propagate(const ScalarField& u, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("heat propagation time must be >= 0");
  if (t == 0.0) return u;
  return to_physical(heat_propagate(to_spectral(u), t));
}

double sobolev_norm(const SpectralField& F, double s) {
  if (!(s >= 0.0)) throw std::invalid_argument("Sobolev index must be >= 0");
  const auto& grid = F.grid();
  const auto ksq = grid.squared_wavenumbers();
  double sum = 0.0;
  for (std::size_t f = 0; f < F.size(); ++f) {
    const double mag = std::norm(F[f]);
    if (mag == 0.0) continue;
    sum += std::pow(1.0 + ksq[f], s) * mag;
  }
  const double n = static_cast<double>(grid.size());
  const double volume = std::pow(2.0 * grid.half_length(), grid.dimension());
  return std::sqrt(sum * volume) / n;
}

double sobolev_norm(const ScalarField& u, double s) { return sobolev_norm(to_spectral(u), s); }

int dealias_cutoff(int points) { return (points - 1) / 3; }

SpectralField dealias(const SpectralField& F) {
  const auto& grid = F.grid();
  const int kc = dealias_cutoff(grid.points());
  std::vector<Complex> out(F.coefficients().begin(), F.coefficients().end());
  for (std::size_t f = 0; f < out.size(); ++f) {
    const auto idx = grid.unflatten(f);
    for (int a = 0; a < grid.dimension(); ++a) {
      if (std::abs(grid.wavenumber_index(idx[a])) > kc) {
        out[f] = 0.0;
        break;
      }
    }
  }
  return SpectralField(grid, std::move(out));
}

ScalarField multiply(const ScalarField& a, const ScalarField& b) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("pointwise product needs a shared grid");
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
  return ScalarField(a.grid(), std::move(out));
}

SpectralField zero_pad(const SpectralField& F, int factor) {
  if (factor < 1) throw std::invalid_argument("padding factor must be >= 1");
  const auto& coarse = F.grid();
  const GridSpec fine(coarse.dimension(), coarse.points() * factor, coarse.half_length());
  const int n = coarse.points();
  const int m = fine.points();
  const double scale = std::pow(static_cast<double>(factor), coarse.dimension());
  std::vector<Complex> out(fine.size());

  // A coarse Nyquist index stands for cos(N/2 xi x); split it evenly between
  // +N/2 and -N/2 on the fine grid.
  for (std::size_t f = 0; f < F.size(); ++f) {
    if (F[f] == Complex(0.0)) continue;
    const auto idx = coarse.unflatten(f);
    int splits = 0;
    for (int a = 0; a < coarse.dimension(); ++a) splits += (idx[a] == n / 2);
    const Complex value = F[f] * scale / std::pow(2.0, splits);
    for (int mask = 0; mask < (1 << splits); ++mask) {
      int fine_idx[GridSpec::kMaxDimension] = {0, 0, 0};
      int bit = 0;
      for (int a = 0; a < coarse.dimension(); ++a) {
        int k = coarse.wavenumber_index(idx[a]);
        if (idx[a] == n / 2) {
          if ((mask >> bit) & 1) k = n / 2;
          ++bit;
        }
        fine_idx[a] = k >= 0 ? k : k + m;
      }
      out[fine.flatten(fine_idx)] += value;
    }
  }
  return SpectralField(fine, std::move(out));
}

}  // namespace vlab::spectral
