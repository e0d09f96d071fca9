#pragma once

#include <string>
#include <vector>

#include "fracfs/fundamental_system.hpp"

namespace fracfs {

struct ComparisonReport {
  double sup_error = 0.0;
  GridFn node_errors;
  std::string method_a;
  std::string method_b;
};

ComparisonReport compare(const GridFn& a, const GridFn& b, std::string method_a,
                         std::string method_b);

// sup |w + g_j + K w|. With H_j empty there is no seed and the residual is
// sup |w|, which is zero for the density the builder produces.
double fixed_point_residual(const SystemOperator& op, const OrderPattern& pattern, int j,
                            const GridFn& w);
double fixed_point_residual(const Problem& problem, const OrderPattern& pattern, int j,
                            const GridFn& w);

// Pointwise |w + g_j + K w| at every node (zeros-aware as above).
GridFn fixed_point_residual_field(const SystemOperator& op, const OrderPattern& pattern, int j,
                                  const GridFn& w);

// Direct solve of the same discrete system the Neumann series iterates,
//   w(t_n) + sum_i a_i(t_n) (I^{alpha_0 - alpha_i} w)(t_n) = -g_j(t_n),
// by forward substitution: the quadrature is lower triangular, so node n
// only needs a scalar division by 1 + sum_i a_i(t_n) * diag_i.
GridFn volterra_collocation_solve(const SystemOperator& op, const OrderPattern& pattern, int j);
GridFn volterra_collocation_solve(const Problem& problem, const OrderPattern& pattern, int j,
                                  const Grid& grid);

enum class ReferenceCase {
  MittagLeffler,  // E_alpha(-lambda t^alpha), alpha in (0, 1]
  Cos,            // y'' + y = 0, y(0) = 1, y'(0) = 0
  Sin,            // y'' + y = 0, y(0) = 0, y'(0) = 1
  ExpIntegral,    // exp(-int_0^t a), a a polynomial; y' = -a(t) y
};

ReferenceCase reference_case_from_name(const std::string& name);

struct ReferenceParams {
  double alpha = 1.0;
  double lambda = 1.0;
  std::vector<double> poly;  // low-to-high, ExpIntegral only
};

GridFn closed_form_reference(ReferenceCase which, const ReferenceParams& params, const Grid& grid);

}  // namespace fracfs
