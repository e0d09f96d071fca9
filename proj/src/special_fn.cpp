#include "fracfs/special_fn.hpp"

#include <quadmath.h>

#include <cmath>
#include <string>

#include "fracfs/error.hpp"

namespace fracfs {

namespace {

constexpr double kMittagLefflerMaxArg = 50.0;
constexpr int kMittagLefflerMaxTerms = 10000;
// Once log|term| is this far below the largest term, binary128 can no longer
// resolve it against the partial sum.
constexpr double kQuadLogFloor = 80.0;

// Neumaier's variant of Kahan summation; stays accurate when a term is
// larger than the running sum, which is the normal state of an alternating
// series.
class CompensatedSum {
 public:
  void add(__float128 x) {
    const __float128 t = sum_ + x;
    if (fabsq(sum_) >= fabsq(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  __float128 value() const { return sum_ + comp_; }

 private:
  __float128 sum_ = 0;
  __float128 comp_ = 0;
};

}  // namespace

double gamma(double x) {
  if (!(x > 0.0)) {
    throw Error(ErrorKind::Domain,
                "gamma: argument must be positive, got " + std::to_string(x));
  }
  const double g = std::tgamma(x);
  if (!std::isfinite(g)) {
    throw Error(ErrorKind::Overflow,
                "gamma: result overflows for x = " + std::to_string(x));
  }
  return g;
}

double phi(double mu, double t) {
  if (!(mu > 0.0)) {
    throw Error(ErrorKind::Domain, "phi: order must be positive");
  }
  if (!(t >= 0.0)) {
    throw Error(ErrorKind::Domain, "phi: t must be nonnegative");
  }
  if (t == 0.0) {
    if (mu < 1.0) {
      throw Error(ErrorKind::Domain,
                  "phi: singular at t = 0 for order " + std::to_string(mu));
    }
    return mu == 1.0 ? 1.0 : 0.0;
  }
  if (mu == 1.0) return 1.0;
  return std::pow(t, mu - 1.0) / gamma(mu);
}

MittagLefflerSeries::MittagLefflerSeries(double alpha, double beta, double max_abs_z)
    : alpha_(alpha), beta_(beta), max_abs_z_(max_abs_z) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw Error(ErrorKind::Domain, "mittag_leffler: alpha and beta must be positive");
  }
  if (!(max_abs_z >= 0.0) || max_abs_z > kMittagLefflerMaxArg) {
    throw Error(ErrorKind::Domain, "mittag_leffler: |z| exceeds series domain (50)");
  }
  // Tabulate until the terms at max_abs_z are past their peak and have
  // fallen below the binary128 resolution of the largest one.
  const __float128 log_z = max_abs_z > 0.0 ? logq(max_abs_z) : -1e4Q;
  __float128 peak = -1e300Q;
  for (int k = 0; k < kMittagLefflerMaxTerms; ++k) {
    const __float128 lg = lgammaq(static_cast<__float128>(alpha) * k + beta);
    log_gamma_.push_back(lg);
    const __float128 log_term = k * log_z - lg;
    if (log_term > peak) peak = log_term;
    if (log_term < peak - kQuadLogFloor) return;
  }
  throw Error(ErrorKind::NonConvergence,
              "mittag_leffler: series did not converge within 10000 terms");
}

double MittagLefflerSeries::operator()(double z) const {
  if (!(std::abs(z) <= max_abs_z_)) {
    throw Error(ErrorKind::Domain, "mittag_leffler: argument outside tabulated range");
  }
  if (z == 0.0) return static_cast<double>(expq(-log_gamma_[0]));

  const __float128 log_z = logq(fabsq(static_cast<__float128>(z)));
  CompensatedSum sum;
  __float128 peak = -1e300Q;
  for (std::size_t k = 0; k < log_gamma_.size(); ++k) {
    const __float128 log_term = k * log_z - log_gamma_[k];
    const __float128 mag = expq(log_term);
    sum.add((z < 0.0 && (k % 2 == 1)) ? -mag : mag);
    if (log_term > peak) peak = log_term;
    const bool past_peak = log_term < peak;
    if (past_peak && (mag <= 1e-16Q * fabsq(sum.value()) ||
                      log_term < peak - kQuadLogFloor)) {
      return static_cast<double>(sum.value());
    }
  }
  // The table was sized for max_abs_z_ so the tail test fires before the
  // table runs out; reaching here means the table was cut at the term cap.
  throw Error(ErrorKind::NonConvergence,
              "mittag_leffler: series did not converge within 10000 terms");
}

double mittag_leffler(double alpha, double beta, double z) {
  if (!(std::abs(z) <= kMittagLefflerMaxArg)) {
    throw Error(ErrorKind::Domain, "mittag_leffler: |z| exceeds series domain (50)");
  }
  return MittagLefflerSeries(alpha, beta, std::abs(z))(z);
}

}  // namespace fracfs
