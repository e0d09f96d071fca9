#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fracfs/fracops.hpp"
#include "fracfs/grid.hpp"
#include "fracfs/order_pattern.hpp"

namespace fracfs {

// D^{alpha_0} y = - sum_i a_i(t) D^{alpha_i} y on (0, T), Caputo derivatives,
// with optional initial values b_k = y^(k)(0), k = 0..n_0-1.
struct Problem {
  OrderSpec orders;
  std::vector<CoefficientSpec> coefficients;  // a_1..a_m
  double t_end = 1.0;
  std::optional<std::vector<double>> initial_values;

  friend bool operator==(const Problem&, const Problem&) = default;
};

// Checks coefficient count, coefficient encodings and table coverage, and
// the initial-value count. Messages carry the offending field path.
void validate(const Problem& problem);

struct TruncationPolicy {
  double tol_abs = 1e-12;
  double tol_rel = 1e-12;
  int max_terms = 200;

  double threshold(double w_norm) const { return tol_abs + tol_rel * w_norm; }
};

void validate(const TruncationPolicy& policy);

// y_j = phi_{j+1} + I^{alpha_0} w, where the density w solves w = -g_j - K w.
struct CanonicalElement {
  int j = 0;
  GridFn y;
  GridFn w;
  int terms_used = 0;
  double last_term_norm = 0.0;
  bool converged = true;
  std::vector<double> increment_norms;
};

// Coefficients sampled on one grid together with the quadrature weights for
// every order the series needs: alpha_0 for the outer integral and
// alpha_0 - alpha_i for each term of K. Build once, reuse for all j.
class SystemOperator {
 public:
  SystemOperator(const Problem& problem, const Grid& grid);

  const Grid& grid() const { return grid_; }
  const OrderSpec& orders() const { return orders_; }
  const std::vector<GridFn>& coefficients() const { return coeffs_; }
  const QuadratureWeights& outer() const { return outer_; }
  const std::vector<QuadratureWeights>& inner() const { return inner_; }

  // K w = sum_i a_i(t) (I^{alpha_0 - alpha_i} w)(t).
  GridFn apply_K(const GridFn& w) const;

  // g_j = sum_{i = h_j..m} a_i(t) phi_{j+1-alpha_i}(t); nullopt when H_j is empty.
  std::optional<GridFn> seed(const OrderPattern& pattern, int j) const;

 private:
  Grid grid_;
  OrderSpec orders_;
  std::vector<GridFn> coeffs_;
  QuadratureWeights outer_;
  std::vector<QuadratureWeights> inner_;
};

GridFn sample_phi(double mu, const Grid& grid);

std::optional<GridFn> seed_function(const Problem& problem, const OrderPattern& pattern, int j,
                                    const Grid& grid);

GridFn apply_K(const Problem& problem, const GridFn& w);

CanonicalElement build_canonical_element(const SystemOperator& op, const OrderPattern& pattern,
                                         int j, const TruncationPolicy& policy);
CanonicalElement build_canonical_element(const Problem& problem, const OrderPattern& pattern,
                                         int j, const Grid& grid, const TruncationPolicy& policy);

std::vector<CanonicalElement> build_canonical_system(const SystemOperator& op,
                                                     const OrderPattern& pattern,
                                                     const TruncationPolicy& policy);
std::vector<CanonicalElement> build_canonical_system(const Problem& problem,
                                                     const OrderPattern& pattern,
                                                     const Grid& grid,
                                                     const TruncationPolicy& policy);

/// y = sum_j b_j y_j, nodewise.
GridFn assemble_ivp_solution(std::span<const CanonicalElement> system, std::span<const double> b);

}  // namespace fracfs
