#pragma once

#include <vector>

namespace fracfs {

/// Gamma function for positive arguments only.
/// Throws Error(Domain) for x <= 0 and Error(Overflow) once the result is
/// not representable as a double (x > ~171.6).
double gamma(double x);

/// Power kernel phi_mu(t) = t^(mu-1) / Gamma(mu).
/// At t = 0 the kernel is only defined for mu >= 1 (phi_1(0) = 1, else 0).
double phi(double mu, double t);

/// Two-parameter Mittag-Leffler function E_{alpha,beta}(z) by direct power
/// series with compensated summation. Intended as a reference value at
/// moderate |z| (<= 50); there is no asymptotic branch.
double mittag_leffler(double alpha, double beta, double z);

// Series evaluator with the log-Gamma coefficients tabulated once, for
// sampling E_{alpha,beta} at many arguments with |z| <= max_abs_z.
// Accumulation runs in binary128 so that the alternating series for
// negative z survives the cancellation between its large middle terms.
class MittagLefflerSeries {
 public:
  MittagLefflerSeries(double alpha, double beta, double max_abs_z);

  double operator()(double z) const;

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  double alpha_;
  double beta_;
  double max_abs_z_;
  std::vector<__float128> log_gamma_;  // lgamma(alpha*k + beta)
};

}  // namespace fracfs
