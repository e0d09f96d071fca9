#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fracfs/error.hpp"
#include "fracfs/special_fn.hpp"

using namespace fracfs;

namespace {

bool throws_kind(auto&& fn, ErrorKind kind) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("gamma at integers and one half") {
  CHECK(fracfs::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(fracfs::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-15));
  CHECK(std::abs(fracfs::gamma(0.5) - 1.7724538509055160) <= 1e-12);
  CHECK(std::abs(fracfs::gamma(0.5) - std::sqrt(std::numbers::pi)) <= 1e-12);

  double fact = 1.0;
  for (int n = 1; n <= 20; ++n) {
    fact *= n;
    CHECK(rel(fracfs::gamma(n + 1.0), fact) <= 1e-12);
  }
}

TEST_CASE("gamma recurrence on [0.1, 40]") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.1, 40.0);
  for (int i = 0; i < 500; ++i) {
    const double x = u(rng);
    CHECK(rel(fracfs::gamma(x + 1.0), x * fracfs::gamma(x)) <= 1e-12);
  }
}

TEST_CASE("gamma rejects nonpositive and overflowing arguments") {
  CHECK(throws_kind([] { fracfs::gamma(0.0); }, ErrorKind::Domain));
  CHECK(throws_kind([] { fracfs::gamma(-1.5); }, ErrorKind::Domain));
  CHECK(throws_kind([] { fracfs::gamma(std::nan("")); }, ErrorKind::Domain));
  CHECK(throws_kind([] { fracfs::gamma(200.0); }, ErrorKind::Overflow));
}

TEST_CASE("phi power kernel") {
  CHECK(phi(1.0, 7.3) == 1.0);
  CHECK(phi(3.0, 2.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(std::abs(phi(1.5, 1.0) - 1.1283791670955126) <= 1e-15);
  CHECK(phi(1.0, 0.0) == 1.0);
  CHECK(phi(2.7, 0.0) == 0.0);
  CHECK(throws_kind([] { phi(0.5, 0.0); }, ErrorKind::Domain));
  CHECK(throws_kind([] { phi(1.5, -1.0); }, ErrorKind::Domain));
  CHECK(throws_kind([] { phi(0.0, 1.0); }, ErrorKind::Domain));
}

TEST_CASE("phi times gamma reproduces the power") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> um(0.05, 6.0), ut(0.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    const double mu = um(rng), t = ut(rng);
    CHECK(rel(phi(mu, t) * fracfs::gamma(mu), std::pow(t, mu - 1.0)) <= 4e-16);
  }
}

TEST_CASE("mittag_leffler reduces to known functions") {
  CHECK(std::abs(mittag_leffler(1, 1, 1) - 2.718281828459045) <= 1e-15);
  CHECK(mittag_leffler(0.5, 1, 0) == 1.0);
  const double q = std::numbers::pi / 2.0;
  CHECK(std::abs(mittag_leffler(2, 1, -q * q)) <= 1e-12);
  // E_{2,1}(-t^2) = cos t and E_{2,2}(-t^2) = sin t / t.
  CHECK(std::abs(mittag_leffler(2, 1, -4.0) - std::cos(2.0)) <= 1e-14);
  CHECK(std::abs(mittag_leffler(2, 2, -4.0) - std::sin(2.0) / 2.0) <= 1e-14);
  // E_{1/2}(-1) = e * erfc(1).
  CHECK(std::abs(mittag_leffler(0.5, 1, -1.0) - std::exp(1.0) * std::erfc(1.0)) <= 1e-15);
}

TEST_CASE("mittag_leffler(1, 1, z) matches exp for |z| <= 20") {
  for (double z = -20.0; z <= 20.0; z += 0.37) {
    CHECK(rel(mittag_leffler(1, 1, z), std::exp(z)) <= 1e-12);
  }
  CHECK(rel(mittag_leffler(1, 1, -20.0), std::exp(-20.0)) <= 1e-12);
  CHECK(rel(mittag_leffler(1, 1, 20.0), std::exp(20.0)) <= 1e-12);
}

TEST_CASE("mittag_leffler domain") {
  CHECK(throws_kind([] { mittag_leffler(0.0, 1.0, 1.0); }, ErrorKind::Domain));
  CHECK(throws_kind([] { mittag_leffler(1.0, -1.0, 1.0); }, ErrorKind::Domain));
  CHECK(throws_kind([] { mittag_leffler(1.0, 1.0, 51.0); }, ErrorKind::Domain));
  const MittagLefflerSeries ml(0.5, 1.0, 2.0);
  CHECK(throws_kind([&] { ml(3.0); }, ErrorKind::Domain));
}
