#pragma once

#include <cstddef>
#include <vector>

#include "fracfs/grid.hpp"

namespace fracfs {

// Product-trapezoidal weights for the Riemann-Liouville integral
//
//   (I^alpha f)(t_n) = 1/Gamma(alpha) * int_0^{t_n} (t_n - s)^(alpha-1) f(s) ds
//
// with f replaced by its piecewise-linear interpolant on a uniform grid and
// the kernel integrated exactly. With p = alpha + 1 and scale =
// h^alpha / Gamma(alpha + 2) the weights are
//
//   w[n][n] = scale
//   w[n][j] = scale * ((k+1)^p - 2 k^p + (k-1)^p),  k = n - j, 0 < j < n
//   w[n][0] = scale * ((n-1)^p - (n - p) n^alpha)
//
// so apart from the j = 0 column they depend on n - j only and are stored in
// convolution form. The second differences lose ~k^2 digits when evaluated
// directly, so large k use the binomial expansion instead.
class QuadratureWeights {
 public:
  QuadratureWeights(double alpha, const Grid& grid);

  double alpha() const { return alpha_; }
  const Grid& grid() const { return grid_; }

  double weight(std::size_t n, std::size_t j) const;
  double diagonal() const { return scale_; }

  GridFn apply(const GridFn& f) const;

 private:
  double alpha_;
  Grid grid_;
  double scale_;
  std::vector<double> lag_;    // lag_[k] for k = n - j, lag_[0] = 1
  std::vector<double> start_;  // start_[n] multiplies f(t_0), start_[0] unused
};

/// Discrete I^alpha f on f's grid; result[0] = 0. alpha must be positive.
GridFn riemann_liouville_integral(double alpha, const GridFn& f);

/// I^alpha phi_mu = phi_{mu + alpha}: returns the order of the result.
double rl_integral_power(double alpha, double mu);

struct PowerDerivativeResult {
  enum class Kind { Zero, Power };
  Kind kind = Kind::Zero;
  double mu = 0.0;  // valid when kind == Power; always >= 1

  static PowerDerivativeResult zero() { return {}; }
  static PowerDerivativeResult power(double mu) { return {Kind::Power, mu}; }
  bool is_zero() const { return kind == Kind::Zero; }

  friend bool operator==(const PowerDerivativeResult&, const PowerDerivativeResult&) = default;
};

/// Caputo derivative of order alpha >= 0 applied to phi_{j+1}(t) = t^j / j!.
/// alpha = 0 is the identity; otherwise the result vanishes for j < n with
/// n - 1 < alpha <= n and is phi_{j+1-alpha} for j >= n.
PowerDerivativeResult caputo_derivative_power(double alpha, int j);

}  // namespace fracfs
