#include "vlab/dynamics/picard.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "vlab/dynamics/integrator.hpp"
#include "vlab/spectral/transform.hpp"

namespace vlab::dynamics {

using spectral::Complex;

namespace {

using Path = std::vector<Coefficients>;  // one coefficient vector per slice

class PathNorm {
 public:
  PathNorm(const spectral::GridSpec& grid, double s) {
    const auto ksq = grid.squared_wavenumbers();
    const double N = grid.points();
    const double scale = std::pow(2.0 * grid.half_length(), grid.dimension()) / std::pow(N, 2 * grid.dimension());
    weights_.resize(ksq.size());
    for (std::size_t f = 0; f < ksq.size(); ++f) weights_[f] = std::pow(1.0 + ksq[f], s) * scale;
  }

  double at(const Coefficients& U) const {
    double acc = 0.0;
    for (std::size_t f = 0; f < U.size(); ++f) acc += weights_[f] * std::norm(U[f]);
    return std::sqrt(acc);
  }

  double sup(const Path& p) const {
    double m = 0.0;
    for (const auto& U : p) m = std::max(m, at(U));
    return m;
  }

  double sup_difference(const Path& a, const Path& b) const {
    double m = 0.0;
    Coefficients d(a.front().size());
    for (std::size_t j = 0; j < a.size(); ++j) {
      for (std::size_t f = 0; f < d.size(); ++f) d[f] = a[j][f] - b[j][f];
      m = std::max(m, at(d));
    }
    return m;
  }

 private:
  std::vector<double> weights_;
};

bool path_finite(const Path& p) {
  for (const auto& U : p) {
    for (const auto& c : U) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    }
  }
  return true;
}

}  // namespace

PicardReport picard_iterate(const spectral::ScalarField& u0, const spectral::ScalarField& b,
                            const PicardOptions& opt) {
  if (!(u0.grid() == b.grid())) throw std::invalid_argument("picard needs u0 and b on one grid");
  if (!(opt.T > 0.0) || !std::isfinite(opt.T)) throw std::invalid_argument("picard.T must be > 0");
  if (opt.slices < 8) throw std::invalid_argument("picard.slices must be >= 8");
  if (opt.iterations < 3) throw std::invalid_argument("picard.iterations must be >= 3");
  if (!(opt.s >= 0.0)) throw std::invalid_argument("picard norm index must be >= 0");

  const auto& grid = u0.grid();
  const int M = opt.slices;
  const double dtau = opt.T / M;
  const std::size_t size = grid.size();
  const SpectralStepper stepper(b, Integrator::kIFRK4, opt.dealias);
  const PathNorm norm(grid, opt.s);

  const auto ksq = grid.squared_wavenumbers();
  std::vector<std::vector<double>> decay(M + 1, std::vector<double>(size));
  for (int d = 0; d <= M; ++d) {
    for (std::size_t f = 0; f < size; ++f) decay[d][f] = std::exp(-ksq[f] * dtau * d);
  }

  const auto U0s = spectral::to_spectral(u0);
  const Coefficients U0(U0s.coefficients().begin(), U0s.coefficients().end());

  Path linear(M + 1, Coefficients(size));
  for (int j = 0; j <= M; ++j) {
    for (std::size_t f = 0; f < size; ++f) linear[j][f] = decay[j][f] * U0[f];
  }

  // Duhamel term B(u)(t_m) = int_0^{t_m} h_{t_m - tau} F(u(tau)) dtau, trapezoid in tau.
  auto duhamel = [&](const Path& u) {
    Path F(M + 1);
    for (int j = 0; j <= M; ++j) F[j] = stepper.nonlinear(u[j]);
    Path out(M + 1, Coefficients(size));
    for (int m = 1; m <= M; ++m) {
      for (int j = 0; j <= m; ++j) {
        const double w = (j == 0 || j == m) ? 0.5 * dtau : dtau;
        const auto& E = decay[m - j];
        for (std::size_t f = 0; f < size; ++f) out[m][f] += w * E[f] * F[j][f];
      }
    }
    return out;
  };
  auto add = [&](const Path& a, const Path& c) {
    Path out = a;
    for (int j = 0; j <= M; ++j) {
      for (std::size_t f = 0; f < size; ++f) out[j][f] += c[j][f];
    }
    return out;
  };

  PicardReport report;
  report.T = opt.T;
  report.u0_norm = norm.at(U0);
  if (report.u0_norm > 0.0) report.C1_hat = norm.sup(linear) / report.u0_norm;

  Path current = linear;
  Path bilinear = duhamel(current);
  double current_norm = norm.sup(current);
  double cb = 0.0;
  auto bilinear_ratio = [&](const Path& u, const Path& Bu) {
    const double un = norm.sup(u);
    if (un > 0.0) cb = std::max(cb, norm.sup(Bu) / (un * un));
  };
  bilinear_ratio(current, bilinear);
  int growth_run = 0;
  for (int k = 0; k < opt.iterations; ++k) {
    Path next = add(linear, bilinear);
    ++report.iterates;
    if (!path_finite(next)) {
      report.sup_differences.push_back(std::numeric_limits<double>::infinity());
      report.diverged = true;
      break;
    }
    const double diff = norm.sup_difference(next, current);
    report.sup_differences.push_back(diff);
    const auto& d = report.sup_differences;
    growth_run = (d.size() >= 2 && d[d.size() - 1] > d[d.size() - 2]) ? growth_run + 1 : 0;
    Path next_bilinear = duhamel(next);
    const double next_norm = norm.sup(next);
    if (path_finite(next_bilinear)) {
      bilinear_ratio(next, next_bilinear);
      // B(u) - B(u') along the observed direction u - u'.
      const double scale = diff * (next_norm + current_norm);
      if (diff > 1e-8 * next_norm && scale > 0.0) {
        cb = std::max(cb, norm.sup_difference(next_bilinear, bilinear) / scale);
      }
    }
    current = std::move(next);
    bilinear = std::move(next_bilinear);
    current_norm = next_norm;
    if (growth_run >= 3 || !std::isfinite(diff)) {
      report.diverged = true;
      break;
    }
  }

  const double u_norm = current_norm;
  report.CB_hat = cb;
  report.smallness = 4.0 * report.C1_hat * report.CB_hat * report.u0_norm;

  // Geometric fit over the differences that sit above round-off.
  const auto& d = report.sup_differences;
  const double floor = 1e-13 * std::max(u_norm, 1e-300);
  std::vector<double> xs, ys;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (!(d[k] > floor) || !std::isfinite(d[k])) break;
    xs.push_back(static_cast<double>(k));
    ys.push_back(std::log(d[k]));
  }
  if (xs.size() >= 2) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    report.contraction_factor = std::exp((n * sxy - sx * sy) / (n * sxx - sx * sx));
  }
  return report;
}

ShapeFit fit_time_shape(std::span<const double> T, std::span<const double> y) {
  if (T.size() != y.size() || T.size() < 2) throw std::invalid_argument("shape fit needs >= 2 paired samples");
  for (double t : T) {
    if (!(t > 0.0)) throw std::invalid_argument("shape fit needs T > 0");
  }
  auto sse = [&](double a, double b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < T.size(); ++i) {
      const double r = y[i] - a * T[i] - b * std::sqrt(T[i]);
      acc += r * r;
    }
    return acc;
  };
  // Normal equations for the unconstrained fit, then the two one-sided fits.
  double stt = 0, sts = 0, sss = 0, sty = 0, ssy = 0;
  for (std::size_t i = 0; i < T.size(); ++i) {
    const double r = std::sqrt(T[i]);
    stt += T[i] * T[i];
    sts += T[i] * r;
    sss += r * r;
    sty += T[i] * y[i];
    ssy += r * y[i];
  }
  std::vector<std::pair<double, double>> candidates{{std::max(0.0, sty / stt), 0.0},
                                                    {0.0, std::max(0.0, ssy / sss)}};
  const double det = stt * sss - sts * sts;
  if (std::abs(det) > 1e-300) {
    const double a = (sty * sss - ssy * sts) / det;
    const double b = (ssy * stt - sty * sts) / det;
    if (a >= 0.0 && b >= 0.0) candidates.emplace_back(a, b);
  }
  ShapeFit fit;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [a, b] : candidates) {
    const double e = sse(a, b);
    if (e < best) {
      best = e;
      fit.alpha = a;
      fit.beta = b;
    }
  }
  double mean = 0.0;
  for (double v : y) mean += v;
  mean /= static_cast<double>(y.size());
  double sst = 0.0;
  for (double v : y) sst += (v - mean) * (v - mean);
  fit.r_squared = sst > 0.0 ? 1.0 - best / sst : (best == 0.0 ? 1.0 : 0.0);
  return fit;
}

}  // namespace vlab::dynamics
