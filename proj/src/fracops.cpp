#include "fracfs/fracops.hpp"

#include <cmath>
#include <string>

#include "fracfs/error.hpp"
#include "fracfs/order_pattern.hpp"
#include "fracfs/special_fn.hpp"

namespace fracfs {

namespace {

// Below this lag the direct formulas are accurate to a few ulps times k^2.
constexpr std::size_t kSeriesThreshold = 8;

// sum_{m >= m0, step 2 if even_only} C(p, m) * s^m, where s may be negative.
double binomial_tail(double p, double s, bool even_only) {
  double coef = p * (p - 1.0) / 2.0;  // C(p, 2)
  double power = s * s;
  double sum = 0.0;
  for (int m = 2; m < 200; ++m) {
    const double term = coef * power;
    if (!even_only || m % 2 == 0) {
      sum += term;
      if (std::abs(term) <= 1e-18 * std::abs(sum) || coef == 0.0) break;
    }
    coef *= (p - m) / (m + 1.0);
    power *= s;
  }
  return sum;
}

// (k+1)^p - 2 k^p + (k-1)^p for k >= 1.
double second_difference(double p, std::size_t k) {
  const double kd = static_cast<double>(k);
  if (k < kSeriesThreshold) {
    return std::pow(kd + 1.0, p) - 2.0 * std::pow(kd, p) + std::pow(kd - 1.0, p);
  }
  return 2.0 * std::pow(kd, p) * binomial_tail(p, 1.0 / kd, true);
}

// (n-1)^p - (n - p) n^(p-1) for n >= 1.
double start_weight(double p, std::size_t n) {
  const double nd = static_cast<double>(n);
  if (n < kSeriesThreshold) {
    return std::pow(nd - 1.0, p) - (nd - p) * std::pow(nd, p - 1.0);
  }
  return std::pow(nd, p) * binomial_tail(p, -1.0 / nd, false);
}

}  // namespace

QuadratureWeights::QuadratureWeights(double alpha, const Grid& grid)
    : alpha_(alpha), grid_(grid) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorKind::Domain,
                "riemann_liouville_integral: order must be positive, got " + std::to_string(alpha));
  }
  const double p = alpha + 1.0;
  const std::size_t n_int = grid.n_intervals();
  scale_ = std::pow(grid.step(), alpha) / gamma(alpha + 2.0);
  lag_.resize(n_int + 1);
  start_.resize(n_int + 1);
  lag_[0] = 1.0;
  for (std::size_t k = 1; k <= n_int; ++k) {
    lag_[k] = second_difference(p, k);
    start_[k] = start_weight(p, k);
  }
}

double QuadratureWeights::weight(std::size_t n, std::size_t j) const {
  if (n == 0 || j > n) return 0.0;
  if (j == n) return scale_;
  if (j == 0) return scale_ * start_[n];
  return scale_ * lag_[n - j];
}

GridFn QuadratureWeights::apply(const GridFn& f) const {
  if (!(f.grid() == grid_)) {
    throw Error(ErrorKind::GridMismatch, "riemann_liouville_integral: grid mismatch");
  }
  const std::size_t size = grid_.size();
  const auto in = f.values();
  GridFn out(grid_);
  for (std::size_t n = 1; n < size; ++n) {
    double acc = start_[n] * in[0];
    for (std::size_t j = 1; j <= n; ++j) acc += lag_[n - j] * in[j];
    out[n] = scale_ * acc;
  }
  return out;
}

GridFn riemann_liouville_integral(double alpha, const GridFn& f) {
  return QuadratureWeights(alpha, f.grid()).apply(f);
}

double rl_integral_power(double alpha, double mu) {
  if (!(alpha > 0.0) || !(mu > 0.0)) {
    throw Error(ErrorKind::Domain, "rl_integral_power: orders must be positive");
  }
  return mu + alpha;
}

PowerDerivativeResult caputo_derivative_power(double alpha, int j) {
  if (!(alpha >= 0.0) || j < 0) {
    throw Error(ErrorKind::Domain, "caputo_derivative_power: need alpha >= 0 and j >= 0");
  }
  if (alpha == 0.0) return PowerDerivativeResult::power(j + 1.0);
  const int n = ceil_order(alpha);
  if (j <= n - 1) return PowerDerivativeResult::zero();
  return PowerDerivativeResult::power(j + 1.0 - alpha);
}

}  // namespace fracfs
