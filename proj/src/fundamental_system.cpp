#include "fracfs/fundamental_system.hpp"

#include <cmath>
#include <string>

#include "fracfs/error.hpp"
#include "fracfs/special_fn.hpp"

namespace fracfs {

void validate(const Problem& problem) {
  if (!(problem.t_end > 0.0) || !std::isfinite(problem.t_end)) {
    throw Error(ErrorKind::Validation, "T: must be positive and finite");
  }
  const std::size_t m = problem.orders.m();
  if (problem.coefficients.size() != m) {
    throw Error(ErrorKind::Validation,
                "coefficients: expected " + std::to_string(m) + " coefficient" +
                    (m == 1 ? "" : "s") + ", got " + std::to_string(problem.coefficients.size()));
  }
  for (std::size_t i = 0; i < m; ++i) {
    try {
      validate(problem.coefficients[i]);
      require_coverage(problem.coefficients[i], problem.t_end);
    } catch (const Error& e) {
      throw Error(e.kind(), "coefficients[" + std::to_string(i) + "]." + e.what());
    }
  }
  if (problem.initial_values) {
    const auto n0 = static_cast<std::size_t>(ceil_order(problem.orders.highest()));
    if (problem.initial_values->size() != n0) {
      throw Error(ErrorKind::Validation,
                  "initial_values: expected " + std::to_string(n0) + " values (n0), got " +
                      std::to_string(problem.initial_values->size()));
    }
    for (std::size_t k = 0; k < n0; ++k) {
      if (!std::isfinite((*problem.initial_values)[k])) {
        throw Error(ErrorKind::Validation,
                    "initial_values[" + std::to_string(k) + "]: must be finite");
      }
    }
  }
}

void validate(const TruncationPolicy& policy) {
  if (!(policy.tol_abs > 0.0) || !(policy.tol_rel >= 0.0) || policy.max_terms < 1) {
    throw Error(ErrorKind::Validation,
                "truncation policy: need tol_abs > 0, tol_rel >= 0, max_terms >= 1");
  }
}

namespace {

std::vector<GridFn> sample_all(const Problem& problem, const Grid& grid) {
  validate(problem);
  std::vector<GridFn> out;
  out.reserve(problem.coefficients.size());
  for (const auto& c : problem.coefficients) out.push_back(sample(c, grid));
  return out;
}

std::vector<QuadratureWeights> inner_weights(const OrderSpec& orders, const Grid& grid) {
  std::vector<QuadratureWeights> out;
  for (std::size_t i = 1; i <= orders.m(); ++i) {
    out.emplace_back(orders.highest() - orders.alpha(i), grid);
  }
  return out;
}

}  // namespace

SystemOperator::SystemOperator(const Problem& problem, const Grid& grid)
    : grid_(grid),
      orders_(problem.orders),
      coeffs_(sample_all(problem, grid)),
      outer_(problem.orders.highest(), grid),
      inner_(inner_weights(problem.orders, grid)) {
  if (grid.t_end() != problem.t_end) {
    throw Error(ErrorKind::GridMismatch, "grid t_end differs from problem T");
  }
}

GridFn SystemOperator::apply_K(const GridFn& w) const {
  if (!(w.grid() == grid_)) throw Error(ErrorKind::GridMismatch, "apply_K: grid mismatch");
  GridFn out(grid_);
  for (std::size_t i = 0; i < inner_.size(); ++i) {
    const GridFn iw = inner_[i].apply(w);
    const GridFn& a = coeffs_[i];
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += a[k] * iw[k];
  }
  return out;
}

std::optional<GridFn> SystemOperator::seed(const OrderPattern& pattern, int j) const {
  if (j < 0 || j >= pattern.n0()) {
    throw Error(ErrorKind::Range, "seed: j = " + std::to_string(j) + " out of range");
  }
  const auto& h = pattern.h[static_cast<std::size_t>(j)];
  if (!h) return std::nullopt;
  GridFn g(grid_);
  for (std::size_t i = static_cast<std::size_t>(*h); i <= orders_.m(); ++i) {
    // alpha_i <= j, so the kernel order j + 1 - alpha_i is at least 1.
    const GridFn kernel = sample_phi(j + 1.0 - orders_.alpha(i), grid_);
    const GridFn& a = coeffs_[i - 1];
    for (std::size_t k = 0; k < g.size(); ++k) g[k] += a[k] * kernel[k];
  }
  return g;
}

GridFn sample_phi(double mu, const Grid& grid) {
  std::vector<double> v(grid.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = phi(mu, grid.node(k));
  return GridFn(grid, std::move(v));
}

std::optional<GridFn> seed_function(const Problem& problem, const OrderPattern& pattern, int j,
                                    const Grid& grid) {
  return SystemOperator(problem, grid).seed(pattern, j);
}

GridFn apply_K(const Problem& problem, const GridFn& w) {
  return SystemOperator(problem, w.grid()).apply_K(w);
}

CanonicalElement build_canonical_element(const SystemOperator& op, const OrderPattern& pattern,
                                         int j, const TruncationPolicy& policy) {
  validate(policy);
  const Grid& grid = op.grid();
  CanonicalElement el{j, sample_phi(j + 1.0, grid), GridFn(grid), 0, 0.0, true, {}};

  const auto g = op.seed(pattern, j);
  if (!g) return el;

  // Neumann series on the density: increment_0 = -g, increment_{k+1} =
  // -K increment_k, w = sum of increments. The outer I^{alpha_0} is applied
  // once at the end.
  GridFn increment = combine(-1.0, *g, 0.0, *g);
  GridFn& w = el.w;
  el.converged = false;
  for (int term = 0; term < policy.max_terms; ++term) {
    if (term > 0) {
      GridFn next = op.apply_K(increment);
      for (std::size_t k = 0; k < next.size(); ++k) next[k] = -next[k];
      increment = std::move(next);
    }
    for (std::size_t k = 0; k < w.size(); ++k) w[k] += increment[k];
    const double inc_norm = sup_norm(increment);
    el.increment_norms.push_back(inc_norm);
    el.terms_used = term + 1;
    el.last_term_norm = inc_norm;
    if (inc_norm <= policy.threshold(sup_norm(w))) {
      el.converged = true;
      break;
    }
  }

  const GridFn correction = op.outer().apply(w);
  for (std::size_t k = 0; k < el.y.size(); ++k) el.y[k] += correction[k];
  return el;
}

CanonicalElement build_canonical_element(const Problem& problem, const OrderPattern& pattern,
                                         int j, const Grid& grid, const TruncationPolicy& policy) {
  return build_canonical_element(SystemOperator(problem, grid), pattern, j, policy);
}

std::vector<CanonicalElement> build_canonical_system(const SystemOperator& op,
                                                     const OrderPattern& pattern,
                                                     const TruncationPolicy& policy) {
  std::vector<CanonicalElement> out;
  for (int j = 0; j < pattern.n0(); ++j) {
    out.push_back(build_canonical_element(op, pattern, j, policy));
  }
  return out;
}

std::vector<CanonicalElement> build_canonical_system(const Problem& problem,
                                                     const OrderPattern& pattern,
                                                     const Grid& grid,
                                                     const TruncationPolicy& policy) {
  return build_canonical_system(SystemOperator(problem, grid), pattern, policy);
}

GridFn assemble_ivp_solution(std::span<const CanonicalElement> system, std::span<const double> b) {
  if (system.empty()) throw Error(ErrorKind::Validation, "assemble: empty system");
  if (system.size() != b.size()) {
    throw Error(ErrorKind::Validation, "assemble: expected " + std::to_string(system.size()) +
                                           " initial values, got " + std::to_string(b.size()));
  }
  GridFn y(system.front().y.grid());
  for (std::size_t j = 0; j < system.size(); ++j) {
    require_same_grid(y, system[j].y, "assemble");
    for (std::size_t k = 0; k < y.size(); ++k) y[k] += b[j] * system[j].y[k];
  }
  return y;
}

}  // namespace fracfs
