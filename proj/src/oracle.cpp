#include "fracfs/oracle.hpp"

#include <cmath>
#include <string>

#include "fracfs/error.hpp"
#include "fracfs/special_fn.hpp"

namespace fracfs {

ComparisonReport compare(const GridFn& a, const GridFn& b, std::string method_a,
                         std::string method_b) {
  require_same_grid(a, b, "compare");
  GridFn err(a.grid());
  for (std::size_t k = 0; k < err.size(); ++k) err[k] = std::abs(a[k] - b[k]);
  const double sup = sup_norm(err);
  return {sup, std::move(err), std::move(method_a), std::move(method_b)};
}

GridFn fixed_point_residual_field(const SystemOperator& op, const OrderPattern& pattern, int j,
                                  const GridFn& w) {
  if (!(w.grid() == op.grid())) {
    throw Error(ErrorKind::GridMismatch, "fixed_point_residual: grid mismatch");
  }
  const auto g = op.seed(pattern, j);
  GridFn r(op.grid());
  if (!g) {
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = std::abs(w[k]);
    return r;
  }
  const GridFn kw = op.apply_K(w);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = std::abs(w[k] + (*g)[k] + kw[k]);
  return r;
}

double fixed_point_residual(const SystemOperator& op, const OrderPattern& pattern, int j,
                            const GridFn& w) {
  return sup_norm(fixed_point_residual_field(op, pattern, j, w));
}

double fixed_point_residual(const Problem& problem, const OrderPattern& pattern, int j,
                            const GridFn& w) {
  return fixed_point_residual(SystemOperator(problem, w.grid()), pattern, j, w);
}

GridFn volterra_collocation_solve(const SystemOperator& op, const OrderPattern& pattern, int j) {
  const auto g = op.seed(pattern, j);
  if (!g) {
    throw Error(ErrorKind::Validation,
                "volterra_collocation_solve: H_" + std::to_string(j) + " is empty");
  }
  const Grid& grid = op.grid();
  const auto& weights = op.inner();
  const auto& coeffs = op.coefficients();
  const std::size_t terms = weights.size();

  GridFn w(grid);
  // At t_0 every integral vanishes.
  w[0] = -(*g)[0];
  for (std::size_t n = 1; n < grid.size(); ++n) {
    double rhs = -(*g)[n];
    double diag = 1.0;
    for (std::size_t i = 0; i < terms; ++i) {
      double history = 0.0;
      for (std::size_t jj = 0; jj < n; ++jj) history += weights[i].weight(n, jj) * w[jj];
      rhs -= coeffs[i][n] * history;
      diag += coeffs[i][n] * weights[i].diagonal();
    }
    if (diag == 0.0) {
      throw Error(ErrorKind::SingularStep,
                  "volterra_collocation_solve: singular step at node " + std::to_string(n));
    }
    w[n] = rhs / diag;
  }
  return w;
}

GridFn volterra_collocation_solve(const Problem& problem, const OrderPattern& pattern, int j,
                                  const Grid& grid) {
  return volterra_collocation_solve(SystemOperator(problem, grid), pattern, j);
}

ReferenceCase reference_case_from_name(const std::string& name) {
  if (name == "ML") return ReferenceCase::MittagLeffler;
  if (name == "COS") return ReferenceCase::Cos;
  if (name == "SIN") return ReferenceCase::Sin;
  if (name == "EXP_INT") return ReferenceCase::ExpIntegral;
  throw Error(ErrorKind::Validation, "closed_form_reference: unknown case id '" + name + "'");
}

GridFn closed_form_reference(ReferenceCase which, const ReferenceParams& params, const Grid& grid) {
  std::vector<double> v(grid.size());
  switch (which) {
    case ReferenceCase::MittagLeffler: {
      if (!(params.alpha > 0.0) || params.alpha > 1.0) {
        throw Error(ErrorKind::Domain, "closed_form_reference: ML needs alpha in (0, 1]");
      }
      const double z_max = std::abs(params.lambda) * std::pow(grid.t_end(), params.alpha);
      const MittagLefflerSeries ml(params.alpha, 1.0, z_max);
      for (std::size_t k = 0; k < v.size(); ++k) {
        const double t = grid.node(k);
        v[k] = ml(-params.lambda * std::pow(t, params.alpha));
      }
      break;
    }
    case ReferenceCase::Cos:
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = std::cos(grid.node(k));
      break;
    case ReferenceCase::Sin:
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = std::sin(grid.node(k));
      break;
    case ReferenceCase::ExpIntegral:
      if (params.poly.empty()) {
        throw Error(ErrorKind::Validation, "closed_form_reference: EXP_INT needs a polynomial");
      }
      for (std::size_t k = 0; k < v.size(); ++k) {
        // int_0^t sum c_d s^d ds = sum c_d t^{d+1} / (d+1), by Horner.
        const double t = grid.node(k);
        double acc = 0.0;
        for (std::size_t d = params.poly.size(); d-- > 0;) {
          acc = acc * t + params.poly[d] / static_cast<double>(d + 1);
        }
        v[k] = std::exp(-acc * t);
      }
      break;
  }
  return GridFn(grid, std::move(v));
}

}  // namespace fracfs
