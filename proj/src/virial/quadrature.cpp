#include "vlab/virial/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vlab::virial {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// x * m with the convention 0 * inf = 0 (the hat function vanishes where the
// moment diverges).
double scaled(double x, double m) { return x == 0.0 ? 0.0 : x * m; }

CellMoments positive_moments(LineWeight weight, double kappa, double a, double b) {
  auto P = [a, b](double p) { return power_integral(p, a, b); };
  switch (weight) {
    case LineWeight::kUnit:
      return {P(0.0), P(1.0)};
    case LineWeight::kWeight:
      return {P(-kappa) - P(0.0), P(1.0 - kappa) - P(1.0)};
    case LineWeight::kWeightSquared:
      return {P(-2.0 * kappa) - 2.0 * P(-kappa) + P(0.0),
              P(1.0 - 2.0 * kappa) - 2.0 * P(1.0 - kappa) + P(1.0)};
    case LineWeight::kSingular:
      return {P(-kappa - 1.0), P(-kappa)};
  }
  return {};
}

}  // namespace

double power_integral(double p, double a, double b) {
  if (!(a >= 0.0) || !(b >= a)) throw std::invalid_argument("power_integral needs 0 <= a <= b");
  if (a == b) return 0.0;
  const double q = p + 1.0;
  if (a == 0.0) return q > 0.0 ? std::pow(b, q) / q : kInf;
  const double log_ratio = std::log(b / a);
  if (q == 0.0) return log_ratio;
  // b^q - a^q = a^q expm1(q log(b/a)) stays accurate as q -> 0.
  return std::pow(a, q) * std::expm1(q * log_ratio) / q;
}

CellMoments cell_moments(LineWeight weight, double kappa, double a, double b) {
  if (!(a <= b)) throw std::invalid_argument("cell_moments needs a <= b");
  if (a >= 0.0) return positive_moments(weight, kappa, a, b);
  if (b <= 0.0) {
    // Reflect x -> -x; w is odd, the other weights are even.
    const CellMoments mirrored = positive_moments(weight, kappa, -b, -a);
    const double parity = weight == LineWeight::kWeight ? -1.0 : 1.0;
    return {parity * mirrored.m0, -parity * mirrored.m1};
  }
  throw std::invalid_argument("cell_moments interval must not straddle 0");
}

LineRule LineRule::build(const spectral::GridSpec& grid, double kappa, LineWeight weight) {
  const int N = grid.points();
  LineRule rule;
  rule.weights.assign(N, 0.0);
  rule.zero_node = N / 2;
  rule.first_active = N;
  rule.last_active = -1;
  for (int k = 0; k + 1 < N; ++k) {
    const double left = grid.node(k);
    const double right = grid.node(k + 1);
    const double a = std::max(left, -1.0);
    const double b = std::min(right, 1.0);
    if (!(a < b)) continue;
    const double width = right - left;
    const CellMoments m = cell_moments(weight, kappa, a, b);
    rule.weights[k] += (scaled(right, m.m0) - m.m1) / width;
    rule.weights[k + 1] += (m.m1 - scaled(left, m.m0)) / width;
    rule.first_active = std::min(rule.first_active, k);
    rule.last_active = std::max(rule.last_active, k + 1);
  }
  // Contributions of the two cells adjoining 0 cancel exactly for the odd weight.
  if (weight == LineWeight::kWeight) rule.weights[rule.zero_node] = 0.0;
  return rule;
}

ProductQuadrature::ProductQuadrature(const spectral::GridSpec& grid, double kappa)
    : grid_(grid), kappa_(kappa) {
  if (!(kappa > 0.0 && kappa < 1.0)) throw std::invalid_argument("weight exponent kappa must lie in (0,1)");
  if (grid.spacing() > kMaxSpacing) {
    throw std::invalid_argument("grid spacing exceeds 0.25; too coarse to resolve [-1,1]");
  }
  if (!(grid.half_length() > 1.0)) throw std::invalid_argument("box must contain [-1,1]^n (need L > 1)");
  unit_ = LineRule::build(grid, kappa, LineWeight::kUnit);
  weight_ = LineRule::build(grid, kappa, LineWeight::kWeight);
  weight_sq_ = LineRule::build(grid, kappa, LineWeight::kWeightSquared);
  singular_ = LineRule::build(grid, kappa, LineWeight::kSingular);
}

const LineRule& ProductQuadrature::rule(LineWeight weight) const {
  switch (weight) {
    case LineWeight::kUnit: return unit_;
    case LineWeight::kWeight: return weight_;
    case LineWeight::kWeightSquared: return weight_sq_;
    case LineWeight::kSingular: return singular_;
  }
  return unit_;
}

double ProductQuadrature::integrate(const spectral::ScalarField& g, int axis, LineWeight weight) const {
  if (!(g.grid() == grid_)) throw std::invalid_argument("quadrature grid mismatch");
  const int n = grid_.dimension();
  if (axis < 0 || axis >= n) throw std::invalid_argument("quadrature axis out of range");
  const LineRule& along = rule(weight);

  std::array<const LineRule*, spectral::GridSpec::kMaxDimension> rules{};
  for (int a = 0; a < n; ++a) rules[a] = (a == axis) ? &along : &unit_;

  std::array<int, spectral::GridSpec::kMaxDimension> idx{0, 0, 0};
  for (int a = 0; a < n; ++a) idx[a] = rules[a]->first_active;

  const auto values = g.values();
  double sum = 0.0;
  while (true) {
    double w = 1.0;
    for (int a = 0; a < n; ++a) w *= rules[a]->weights[idx[a]];
    if (w != 0.0) {
      const double gv = values[grid_.flatten(idx)];
      if (std::isinf(w)) {
        if (gv != 0.0) return gv > 0.0 ? kInf : -kInf;
      } else {
        sum += gv * w;
      }
    }
    int a = n - 1;
    while (a >= 0) {
      if (++idx[a] <= rules[a]->last_active) break;
      idx[a] = rules[a]->first_active;
      --a;
    }
    if (a < 0) break;
  }
  return sum;
}

}  // namespace vlab::virial
