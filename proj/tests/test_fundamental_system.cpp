#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fracfs/error.hpp"
#include "fracfs/fundamental_system.hpp"
#include "fracfs/oracle.hpp"
#include "fracfs/special_fn.hpp"

using namespace fracfs;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Problem make(std::vector<double> alphas, std::vector<CoefficientSpec> coeffs, double t_end) {
  return Problem{OrderSpec(std::move(alphas)), std::move(coeffs), t_end, std::nullopt};
}

double sup_diff(const GridFn& f, auto&& exact) {
  double worst = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    worst = std::max(worst, std::abs(f[k] - exact(f.grid().node(k))));
  }
  return worst;
}

// Seed through the other route: sum over every i of a_i times the Caputo
// derivative of phi_{j+1}, with vanishing derivatives contributing nothing.
GridFn unified_seed(const Problem& p, int j, const Grid& grid) {
  GridFn g(grid);
  for (std::size_t i = 1; i <= p.orders.m(); ++i) {
    const auto d = caputo_derivative_power(p.orders.alpha(i), j);
    if (d.is_zero()) continue;
    const GridFn a = sample(p.coefficients[i - 1], grid);
    const GridFn kernel = sample_phi(d.mu, grid);
    for (std::size_t k = 0; k < g.size(); ++k) g[k] += a[k] * kernel[k];
  }
  return g;
}

}  // namespace

TEST_CASE("seed_function examples") {
  const Grid g = make_grid(1, 8);
  const auto p3 = make({1.7, 1.3}, {PolyCoefficient{{1, 1}}}, 1);
  const auto pat3 = classify(p3.orders);
  CHECK_FALSE(seed_function(p3, pat3, 0, g));
  CHECK_FALSE(seed_function(p3, pat3, 1, g));

  const Grid g2 = make_grid(kTwoPi, 8);
  const auto osc = make({2, 0}, {ConstantCoefficient{1}}, kTwoPi);
  const auto s = seed_function(osc, classify(osc.orders), 0, g2);
  REQUIRE(s);
  CHECK(sup_diff(*s, [](double) { return 1.0; }) == 0.0);

  const double lambda = 0.35;
  const auto ml = make({0.5, 0}, {ConstantCoefficient{lambda}}, 1);
  const auto s2 = seed_function(ml, classify(ml.orders), 0, g);
  REQUIRE(s2);
  CHECK(sup_diff(*s2, [&](double) { return lambda; }) == 0.0);
}

TEST_CASE("seed from h_j equals the seed summed over all terms") {
  const std::vector<std::vector<double>> tuples = {
      {1.5, 0.7, 0}, {2.5, 1.2}, {2.8, 2.2, 1.5}, {3.4, 2.1, 0.6, 0}, {1.5, 1.2, 0}, {2.0, 1.0}};
  for (const auto& alphas : tuples) {
    std::vector<CoefficientSpec> coeffs;
    for (std::size_t i = 1; i < alphas.size(); ++i) {
      coeffs.push_back(PolyCoefficient{{0.3 * i, -0.2, 0.1 * i}});
    }
    const auto p = make(alphas, coeffs, 1.5);
    const auto pat = classify(p.orders);
    const Grid g = make_grid(1.5, 40);
    for (int j = 0; j < pat.n0(); ++j) {
      CAPTURE(alphas);
      CAPTURE(j);
      const auto s = seed_function(p, pat, j, g);
      const GridFn u = unified_seed(p, j, g);
      if (!s) {
        CHECK(sup_norm(u) == 0.0);
        continue;
      }
      if (j >= pat.n[1]) CHECK(pat.h[j] == 1);
      CHECK(*s == u);
    }
  }
}

TEST_CASE("apply_K examples") {
  const Grid g = make_grid(1, 32);
  const auto p = make({2, 0}, {ConstantCoefficient{1}}, 1);
  CHECK(sup_norm(apply_K(p, GridFn(g))) == 0.0);

  GridFn ones(g, std::vector<double>(g.size(), 1.0));
  CHECK(sup_diff(apply_K(p, ones), [](double t) { return t * t / 2; }) <= 1e-12);

  const auto p2 = make({1.5, 0.7, 0}, {ConstantCoefficient{1}, ConstantCoefficient{1}}, 1);
  CHECK(sup_diff(apply_K(p2, ones), [](double t) { return phi(1.8, t) + phi(2.5, t); }) <= 1e-12);

  CHECK_THROWS_AS(apply_K(p2, GridFn(make_grid(2, 16))), Error);
}

TEST_CASE("type III elements are the bare power kernels") {
  const auto p = make({1.7, 1.3}, {PolyCoefficient{{1, 1}}}, 1);
  const auto pat = classify(p.orders);
  const Grid g = make_grid(1, 50);
  const auto sys = build_canonical_system(p, pat, g, {});
  REQUIRE(sys.size() == 2);
  for (std::size_t k = 0; k < g.size(); ++k) {
    CHECK(sys[0].y[k] == 1.0);
    CHECK(sys[1].y[k] == g.node(k));
    CHECK(sys[0].w[k] == 0.0);
    CHECK(sys[1].w[k] == 0.0);
  }
  CHECK(sys[1].terms_used == 0);
  CHECK(sys[1].converged);
}

TEST_CASE("y'' + y = 0 gives cos and sin") {
  const auto p = make({2, 0}, {ConstantCoefficient{1}}, kTwoPi);
  const auto pat = classify(p.orders);
  double prev0 = 1e9, prev1 = 1e9;
  for (std::size_t n : {256u, 512u, 1024u}) {
    const auto sys = build_canonical_system(p, pat, make_grid(kTwoPi, n), {});
    REQUIRE(sys.size() == 2);
    CHECK(sys[0].converged);
    CHECK(sys[1].converged);
    const double e0 = sup_diff(sys[0].y, [](double t) { return std::cos(t); });
    const double e1 = sup_diff(sys[1].y, [](double t) { return std::sin(t); });
    CHECK(e0 < prev0);
    CHECK(e1 < prev1);
    prev0 = e0;
    prev1 = e1;
  }
  CHECK(prev0 < 1e-4);
  CHECK(prev1 < 1e-4);
}

TEST_CASE("y' = -t y gives a Gaussian") {
  const auto p = make({1, 0}, {PolyCoefficient{{0, 1}}}, 2);
  const auto el = build_canonical_element(p, classify(p.orders), 0, make_grid(2, 1024), {});
  CHECK(el.converged);
  CHECK(sup_diff(el.y, [](double t) { return std::exp(-t * t / 2); }) < 1e-5);
}

TEST_CASE("single initial condition for n0 = 1") {
  const auto p = make({0.5, 0}, {ConstantCoefficient{1}}, 1);
  CHECK(build_canonical_system(p, classify(p.orders), make_grid(1, 64), {}).size() == 1);
}

TEST_CASE("converged builds satisfy the fixed point and structural invariants") {
  const std::vector<std::pair<std::vector<double>, std::vector<CoefficientSpec>>> cases = {
      {{2, 0}, {ConstantCoefficient{1}}},
      {{1.5, 0.7, 0}, {PolyCoefficient{{1, -0.5}}, ConstantCoefficient{0.8}}},
      {{2.5, 1.2}, {TableCoefficient{{{0, 1}, {0.5, -1}, {1, 0.5}}}}},
      {{2.8, 2.2, 1.5}, {ConstantCoefficient{-0.7}, PolyCoefficient{{0.2, 0.9}}}},
      {{1.5, 1.2, 0}, {ConstantCoefficient{0.5}, ConstantCoefficient{-1}}},
  };
  const TruncationPolicy policy;
  for (const auto& [alphas, coeffs] : cases) {
    const auto p = make(alphas, coeffs, 1);
    const auto pat = classify(p.orders);
    for (std::size_t n : {128u, 256u, 512u}) {
      const Grid g = make_grid(1, n);
      const SystemOperator op(p, g);
      for (const auto& el : build_canonical_system(op, pat, policy)) {
        CAPTURE(alphas);
        CAPTURE(el.j);
        REQUIRE(el.converged);
        CHECK(el.y[0] == (el.j == 0 ? 1.0 : 0.0));
        const double wn = sup_norm(el.w);
        CHECK(fixed_point_residual(op, pat, el.j, el.w) <= 10 * policy.threshold(wn));

        const double t1 = g.node(1);
        const double bound = wn * std::pow(t1, alphas[0]) / fracfs::gamma(alphas[0] + 1);
        CHECK(std::abs(el.y[1] - phi(el.j + 1.0, t1)) <= bound);

        const auto& norms = el.increment_norms;
        if (norms.size() >= 3) {
          const std::size_t s = norms.size();
          CHECK(norms[s - 1] < norms[s - 2]);
          CHECK(norms[s - 2] < norms[s - 3]);
        }
      }
    }
  }
}

TEST_CASE("term cap reports non-convergence without throwing") {
  const auto p = make({2, 0}, {ConstantCoefficient{1}}, kTwoPi);
  TruncationPolicy tight;
  tight.max_terms = 2;
  const auto el = build_canonical_element(p, classify(p.orders), 0, make_grid(kTwoPi, 64), tight);
  CHECK_FALSE(el.converged);
  CHECK(el.terms_used == 2);
  CHECK(el.last_term_norm > 0.0);

  TruncationPolicy bad;
  bad.max_terms = 0;
  CHECK_THROWS_AS(build_canonical_element(p, classify(p.orders), 0, make_grid(kTwoPi, 8), bad),
                  Error);
}

TEST_CASE("assemble_ivp_solution") {
  const auto p = make({2, 0}, {ConstantCoefficient{1}}, kTwoPi);
  const Grid g = make_grid(kTwoPi, 1024);
  const auto sys = build_canonical_system(p, classify(p.orders), g, {});

  const std::vector<double> e1{0, 1};
  CHECK(assemble_ivp_solution(sys, e1) == sys[1].y);
  CHECK(sup_norm(assemble_ivp_solution(sys, std::vector<double>{0, 0})) == 0.0);

  const auto y = assemble_ivp_solution(sys, std::vector<double>{1, 1});
  CHECK(sup_diff(y, [](double t) { return std::cos(t) + std::sin(t); }) < 1e-4);

  const std::vector<double> b{0.3, -1.1}, c{2.0, 0.25}, bc{2.3, -0.85};
  const auto lhs = assemble_ivp_solution(sys, bc);
  const auto rhs = combine(1, assemble_ivp_solution(sys, b), 1, assemble_ivp_solution(sys, c));
  CHECK(sup_norm(combine(1, lhs, -1, rhs)) <= 1e-14);

  CHECK_THROWS_AS(assemble_ivp_solution(sys, std::vector<double>{1}), Error);
}

TEST_CASE("problem validation") {
  CHECK_THROWS_AS(validate(make({2, 0}, {}, 1)), Error);
  CHECK_THROWS_AS(validate(make({2, 0}, {TableCoefficient{{{0, 1}, {0.5, 1}}}}, 1)), Error);
  auto p = make({2, 0}, {ConstantCoefficient{1}}, 1);
  p.initial_values = std::vector<double>{1, 2, 3};
  try {
    validate(p);
    FAIL("expected validation error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Validation);
    CHECK(std::string(e.what()).starts_with("initial_values"));
  }
}
