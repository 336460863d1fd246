#include "vlab/dynamics/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vlab/dynamics/integrator.hpp"
#include "vlab/spectral/operators.hpp"
#include "vlab/spectral/transform.hpp"

namespace vlab::dynamics {

using spectral::Complex;
using spectral::ScalarField;
using spectral::SpectralField;

namespace {

constexpr int kGrowthWindow = 10;

ScalarField physical(const spectral::GridSpec& grid, const Coefficients& U) {
  return spectral::to_physical(SpectralField(grid, U));
}

bool finite(const Coefficients& U) {
  for (const auto& c : U) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

class Recorder {
 public:
  Recorder(const SpectralStepper& stepper, const SolverConfig& cfg, const EvolveHooks& hooks, RunResult& out)
      : stepper_(stepper), cfg_(cfg), hooks_(hooks), out_(out) {}

  const TrajectoryRecord& record(const Coefficients& U, double t, double dt) {
    const auto& grid = stepper_.grid();
    auto grads = stepper_.gradient(U);
    double grad_sup = 0.0;
    std::vector<ScalarField> comps;
    for (auto& g : grads) {
      for (double x : g) grad_sup = std::max(grad_sup, std::abs(x));
      comps.emplace_back(grid, std::move(g));
    }
    const spectral::VectorField v(std::move(comps));
    const ScalarField u = physical(grid, U);

    TrajectoryRecord rec;
    rec.t = t;
    rec.dt = dt;
    rec.grad_sup = grad_sup;
    rec.hs_norm = spectral::sobolev_norm(SpectralField(grid, U), cfg_.s);
    rec.tail_mass = tail_mass(u);
    rec.I = hooks_.virial ? hooks_.virial(v) : 0.0;
    out_.samples.push_back(rec);
    if (hooks_.on_record) hooks_.on_record(rec, StepView{u, v});
    return out_.samples.back();
  }

 private:
  const SpectralStepper& stepper_;
  const SolverConfig& cfg_;
  const EvolveHooks& hooks_;
  RunResult& out_;
};

bool gradient_grew_recently(const std::vector<TrajectoryRecord>& samples) {
  if (samples.size() < kGrowthWindow + 1) return false;
  for (std::size_t i = samples.size() - kGrowthWindow; i < samples.size(); ++i) {
    if (!(samples[i].grad_sup > samples[i - 1].grad_sup)) return false;
  }
  return true;
}

}  // namespace

double tail_mass(const ScalarField& u) {
  const auto& grid = u.grid();
  const double edge = grid.half_length() * (7.0 / 8.0);
  std::vector<char> near(grid.points());
  for (int j = 0; j < grid.points(); ++j) near[j] = std::abs(grid.node(j)) >= edge;
  double total = 0.0;
  double tail = 0.0;
  for (std::size_t f = 0; f < u.size(); ++f) {
    const double a = std::abs(u[f]);
    total += a;
    const auto idx = grid.unflatten(f);
    bool in_tail = false;
    for (int d = 0; d < grid.dimension(); ++d) in_tail = in_tail || near[idx[d]];
    if (in_tail) tail += a;
  }
  return total > 0.0 ? tail / total : 0.0;
}

RunResult evolve(const ScalarField& u0, const ScalarField& b, const SolverConfig& cfg, const EvolveHooks& hooks) {
  if (!(u0.grid() == b.grid())) throw std::invalid_argument("evolve needs u0 and b on one grid");
  cfg.validate(u0.grid().dimension());
  if (!u0.all_finite()) throw std::invalid_argument("initial data must be finite");

  const auto& grid = u0.grid();
  const SpectralStepper stepper(b, cfg.integrator, cfg.dealias);
  RunResult out;
  Recorder recorder(stepper, cfg, hooks, out);

  const auto U0 = spectral::to_spectral(u0);
  Coefficients U(U0.coefficients().begin(), U0.coefficients().end());
  double t = 0.0;
  double dt = cfg.dt0;
  const bool sampling = cfg.sample_interval > 0.0;
  std::size_t next_sample = 1;
  if (sampling) out.snapshots.push_back({"u", 0.0, u0});

  auto finish = [&](RunStatus status, Detection detection) {
    out.status = status;
    out.detection = detection;
    out.t_final = t;
    out.dt_next = dt;
    out.final_field = physical(grid, U);
    return out;
  };
  auto check_thresholds = [&](const TrajectoryRecord& rec) {
    if (rec.hs_norm > cfg.thresholds.norm_blowup) return Detection::kNormThreshold;
    if (rec.grad_sup > cfg.thresholds.gradient_blowup) return Detection::kGradientThreshold;
    return Detection::kNone;
  };

  double grad_prev = recorder.record(U, t, 0.0).grad_sup;
  if (const auto d = check_thresholds(out.samples.back()); d != Detection::kNone) {
    return finish(RunStatus::kBlowupDetected, d);
  }

  const double t_tol = 1e-13 * cfg.t_end;
  for (std::size_t steps = 0;; ++steps) {
    if (t >= cfg.t_end - t_tol) {
      t = cfg.t_end;
      return finish(RunStatus::kCompleted, Detection::kNone);
    }
    if (steps >= cfg.max_steps) return finish(RunStatus::kDtUnderflow, Detection::kNone);

    double h = std::min(dt, cfg.t_end - t);
    bool lands_on_sample = false;
    double sample_time = 0.0;
    if (sampling) {
      sample_time = static_cast<double>(next_sample) * cfg.sample_interval;
      if (sample_time <= t + h + t_tol) {
        h = sample_time - t;
        lands_on_sample = true;
      }
    }
    if (!(h > 0.0)) throw std::logic_error("non-positive step");

    Coefficients next = stepper.step(U, h);
    if (!finite(next)) return finish(RunStatus::kDiverged, Detection::kNone);
    U = std::move(next);
    t = lands_on_sample ? sample_time : t + h;
    if (t >= cfg.t_end - t_tol) t = cfg.t_end;

    const TrajectoryRecord& rec = recorder.record(U, t, h);
    if (lands_on_sample) {
      out.snapshots.push_back({"u", t, physical(grid, U)});
      ++next_sample;
    }
    if (const auto d = check_thresholds(rec); d != Detection::kNone) {
      return finish(RunStatus::kBlowupDetected, d);
    }

    if (cfg.adapt.enabled) {
      const double g = rec.grad_sup;
      double delta = 0.0;
      if (grad_prev > 0.0) {
        delta = std::abs(g - grad_prev) / grad_prev;
      } else if (g > 0.0) {
        delta = std::numeric_limits<double>::infinity();
      }
      // delta was measured over h; scale it to the nominal step.
      if (h < dt) delta *= dt / h;
      const double factor =
          delta > 0.0 ? std::clamp(cfg.adapt.safety * cfg.adapt.delta_target / delta, 0.5, cfg.adapt.growth_cap)
                      : cfg.adapt.growth_cap;
      dt *= factor;
      if (dt < cfg.adapt.dt_min) {
        return gradient_grew_recently(out.samples) ? finish(RunStatus::kBlowupDetected, Detection::kStepCollapse)
                                                   : finish(RunStatus::kDtUnderflow, Detection::kNone);
      }
    }
    grad_prev = rec.grad_sup;
  }
}

}  // namespace vlab::dynamics
