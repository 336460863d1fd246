#include "vlab/virial/riccati.hpp"

#include <algorithm>
#include <cmath>

namespace vlab::virial {

double riccati_c1(int dimension, double kappa) {
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  if (!(kappa > 0.0 && kappa < 1.0)) throw std::invalid_argument("weight exponent kappa must lie in (0,1)");
  return std::ldexp(kappa, -(dimension + 1));
}

void RiccatiParams::validate() const {
  if (!(c1 > 0.0) || !std::isfinite(c1)) throw std::invalid_argument("c1 must be > 0");
  if (!(c2 >= 0.0) || !std::isfinite(c2)) throw std::invalid_argument("c2 must be >= 0");
  if (!std::isfinite(I0)) throw std::invalid_argument("I0 must be finite");
}

double RiccatiParams::margin() const { return I0 * std::sqrt(c1) - std::sqrt(c2); }

PositivityError::PositivityError(double margin)
    : std::domain_error("I(0)√c1 − √c2 must be positive (got " + std::to_string(margin) + ")"),
      margin_(margin) {}

double blowup_time(const RiccatiParams& p) {
  p.validate();
  const double m = p.margin();
  if (!(m > 0.0)) throw PositivityError(m);
  if (p.c2 < kTinyC2) return 1.0 / (p.c1 * p.I0);
  const double a = p.I0 * std::sqrt(p.c1);
  const double b = std::sqrt(p.c2);
  return std::log1p(2.0 * b / (a - b)) / (2.0 * std::sqrt(p.c1 * p.c2));
}

double riccati_J(const RiccatiParams& p, double t) {
  p.validate();
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::domain_error("riccati_J needs finite t >= 0");
  if (t == 0.0) return p.I0;
  if (p.margin() > 0.0 && t >= blowup_time(p)) throw std::domain_error("t is at or past the blow-up time");

  if (p.c2 < kTinyC2) {
    const double den = 1.0 - p.c1 * p.I0 * t;
    if (std::abs(den) <= 1e-14 * (1.0 + std::abs(p.c1 * p.I0 * t))) {
      throw std::domain_error("Riccati denominator vanishes");
    }
    return p.I0 / den;
  }
  const double r = std::sqrt(p.c2 / p.c1);
  const double plus = p.I0 + r;
  const double minus = p.I0 - r;
  // Divide through by E = exp(2 sqrt(c1 c2) t) >= 1 so large E cannot overflow.
  const double inv_e = std::exp(-2.0 * std::sqrt(p.c1 * p.c2) * t);
  const double num = plus * inv_e + minus;
  const double den = plus * inv_e - minus;
  if (std::abs(den) <= 1e-14 * (std::abs(plus * inv_e) + std::abs(minus))) {
    throw std::domain_error("Riccati denominator vanishes");
  }
  return r * num / den;
}

double fit_c2_hat(std::span<const dynamics::TrajectoryRecord> series, double c1, double early_fraction) {
  if (series.size() < 3) throw std::invalid_argument("c2 fit needs at least three samples");
  if (!(early_fraction > 0.0 && early_fraction <= 1.0)) throw std::invalid_argument("early fraction must lie in (0,1]");
  const double cutoff = early_fraction * series.back().t;
  double c2 = 0.0;
  for (std::size_t k = 1; k + 1 < series.size(); ++k) {
    if (series[k].t > cutoff) break;
    const double h0 = series[k].t - series[k - 1].t;
    const double h1 = series[k + 1].t - series[k].t;
    if (!(h0 > 0.0) || !(h1 > 0.0)) throw std::invalid_argument("sample times must increase");
    const double dI = (-h1 / (h0 * (h0 + h1))) * series[k - 1].I + ((h1 - h0) / (h0 * h1)) * series[k].I +
                      (h0 / (h1 * (h0 + h1))) * series[k + 1].I;
    c2 = std::max(c2, c1 * series[k].I * series[k].I - dI);
  }
  return c2;
}

ComparisonVerdict comparison_check(std::span<const dynamics::TrajectoryRecord> series, const RiccatiParams& p,
                                   double tol) {
  if (series.empty()) throw std::invalid_argument("comparison needs a nonempty series");
  p.validate();
  if (std::abs(p.I0 - series.front().I) > 1e-9 * (1.0 + std::abs(p.I0))) {
    throw std::invalid_argument("I0 must equal the first sample's I");
  }
  ComparisonVerdict verdict;
  if (p.margin() > 0.0) verdict.t_star = blowup_time(p);
  for (std::size_t k = 0; k < series.size(); ++k) {
    const double t = series[k].t;
    if (verdict.t_star && t >= *verdict.t_star) break;
    double J = 0.0;
    try {
      J = riccati_J(p, t);
    } catch (const std::domain_error&) {
      break;  // at the pole to working precision
    }
    ++verdict.checked;
    if (series[k].I < J - tol * (1.0 + std::abs(J))) {
      ++verdict.violations;
      if (!verdict.first_violation) verdict.first_violation = k;
    }
  }
  return verdict;
}

}  // namespace vlab::virial
