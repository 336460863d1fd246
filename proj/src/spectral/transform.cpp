#include "vlab/spectral/transform.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace vlab::spectral {
namespace {

// Plans are built once per (n, N) under a lock and only executed afterwards
// through the new-array interface, which FFTW documents as thread safe.
struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  std::vector<double> phase;  // prod_i (-1)^{k_i} per flat index

  PlanPair() = default;
  PlanPair(const PlanPair&) = delete;
  PlanPair& operator=(const PlanPair&) = delete;
  ~PlanPair() {
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
  }
};

const PlanPair& plans_for(const GridSpec& grid) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<PlanPair>> cache;

  const std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{grid.dimension(), grid.points()}];
  if (slot) return *slot;

  auto plans = std::make_unique<PlanPair>();
  int dims[GridSpec::kMaxDimension];
  for (int a = 0; a < grid.dimension(); ++a) dims[a] = grid.points();
  std::vector<Complex> scratch(grid.size());
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  plans->forward = fftw_plan_dft(grid.dimension(), dims, buf, buf, FFTW_FORWARD, flags);
  plans->backward = fftw_plan_dft(grid.dimension(), dims, buf, buf, FFTW_BACKWARD, flags);
  if (!plans->forward || !plans->backward) throw std::runtime_error("FFTW plan creation failed");

  plans->phase.resize(grid.size());
  for (std::size_t f = 0; f < grid.size(); ++f) {
    const auto idx = grid.unflatten(f);
    int parity = 0;
    for (int a = 0; a < grid.dimension(); ++a) parity += grid.wavenumber_index(idx[a]);
    plans->phase[f] = (parity % 2 == 0) ? 1.0 : -1.0;
  }
  slot = std::move(plans);
  return *slot;
}

}  // namespace

void forward_transform(const GridSpec& grid, std::vector<Complex>& data) {
  if (data.size() != grid.size()) throw std::invalid_argument("transform size mismatch");
  const auto& plans = plans_for(grid);
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plans.forward, buf, buf);
  // x_0 = -L shifts every mode by exp(i pi k).
  for (std::size_t f = 0; f < data.size(); ++f) data[f] *= plans.phase[f];
}

void inverse_transform(const GridSpec& grid, std::vector<Complex>& data) {
  if (data.size() != grid.size()) throw std::invalid_argument("transform size mismatch");
  const auto& plans = plans_for(grid);
  const double scale = 1.0 / static_cast<double>(grid.size());
  for (std::size_t f = 0; f < data.size(); ++f) data[f] *= plans.phase[f] * scale;
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plans.backward, buf, buf);
}

SpectralField to_spectral(const ScalarField& f) {
  std::vector<Complex> data(f.values().begin(), f.values().end());
  forward_transform(f.grid(), data);
  return SpectralField(f.grid(), std::move(data));
}

ScalarField to_physical(const SpectralField& F) {
  std::vector<Complex> data(F.coefficients().begin(), F.coefficients().end());
  inverse_transform(F.grid(), data);
  std::vector<double> values(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) values[i] = data[i].real();
  return ScalarField(F.grid(), std::move(values));
}

}  // namespace vlab::spectral
