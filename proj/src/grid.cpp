#include "fracfs/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracfs/error.hpp"

namespace fracfs {

Grid::Grid(double t_end, std::size_t n_intervals) : t_end_(t_end), n_(n_intervals) {
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw Error(ErrorKind::Domain, "grid: t_end must be positive and finite");
  }
  if (n_intervals < 1) {
    throw Error(ErrorKind::Domain, "grid: n_intervals must be at least 1");
  }
  step_ = t_end_ / static_cast<double>(n_);
}

std::vector<double> Grid::nodes() const {
  std::vector<double> out(size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = node(k);
  return out;
}

Grid make_grid(double t_end, long long n_intervals) {
  if (n_intervals < 1) {
    throw Error(ErrorKind::Domain, "grid: n_intervals must be at least 1");
  }
  return Grid(t_end, static_cast<std::size_t>(n_intervals));
}

GridFn::GridFn(const Grid& grid) : grid_(grid), values_(grid.size(), 0.0) {}

GridFn::GridFn(const Grid& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw Error(ErrorKind::GridMismatch,
                "grid function: expected " + std::to_string(grid_.size()) +
                    " values, got " + std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::Domain, "grid function: non-finite value");
    }
  }
}

void require_same_grid(const GridFn& f, const GridFn& g, const char* where) {
  if (!(f.grid() == g.grid())) {
    throw Error(ErrorKind::GridMismatch, std::string(where) + ": grid mismatch");
  }
}

double sup_norm(const GridFn& f) {
  double m = 0.0;
  for (double v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

GridFn combine(double a, const GridFn& f, double b, const GridFn& g) {
  require_same_grid(f, g, "combine");
  GridFn out(f.grid());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a * f[k] + b * g[k];
  return out;
}

GridFn pointwise_mul(const GridFn& f, const GridFn& g) {
  require_same_grid(f, g, "pointwise_mul");
  GridFn out(f.grid());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = f[k] * g[k];
  return out;
}

namespace {

struct Validator {
  void operator()(const ConstantCoefficient& c) const {
    if (!std::isfinite(c.value)) throw Error(ErrorKind::Validation, "constant: value must be finite");
  }
  void operator()(const PolyCoefficient& p) const {
    if (p.coeffs.empty()) throw Error(ErrorKind::Validation, "poly: coefficient list is empty");
    for (double c : p.coeffs) {
      if (!std::isfinite(c)) throw Error(ErrorKind::Validation, "poly: coefficients must be finite");
    }
  }
  void operator()(const TableCoefficient& tab) const {
    if (tab.points.empty()) throw Error(ErrorKind::Validation, "table: no points");
    for (std::size_t i = 0; i < tab.points.size(); ++i) {
      const auto [t, v] = tab.points[i];
      if (!std::isfinite(t) || !std::isfinite(v)) {
        throw Error(ErrorKind::Validation, "table: points must be finite");
      }
      if (i > 0 && !(t > tab.points[i - 1].first)) {
        throw Error(ErrorKind::Validation, "table: abscissae not strictly increasing at point " +
                                               std::to_string(i));
      }
    }
  }
};

double eval_table(const TableCoefficient& tab, double t) {
  const auto& pts = tab.points;
  if (pts.size() == 1) return pts.front().second;
  auto it = std::upper_bound(pts.begin(), pts.end(), t,
                             [](double x, const auto& p) { return x < p.first; });
  if (it == pts.begin()) return pts.front().second;
  if (it == pts.end()) return pts.back().second;
  const auto& [t1, v1] = *it;
  const auto& [t0, v0] = *(it - 1);
  const double s = (t - t0) / (t1 - t0);
  return v0 + s * (v1 - v0);
}

}  // namespace

void validate(const CoefficientSpec& spec) { std::visit(Validator{}, spec); }

void require_coverage(const CoefficientSpec& spec, double t_end) {
  if (const auto* tab = std::get_if<TableCoefficient>(&spec)) {
    if (tab->points.empty() || tab->points.front().first > 0.0 ||
        tab->points.back().first < t_end) {
      throw Error(ErrorKind::Coverage, "table does not cover [0, T]");
    }
  }
}

double evaluate(const CoefficientSpec& spec, double t) {
  if (const auto* c = std::get_if<ConstantCoefficient>(&spec)) return c->value;
  if (const auto* p = std::get_if<PolyCoefficient>(&spec)) {
    double acc = 0.0;
    for (auto it = p->coeffs.rbegin(); it != p->coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
  }
  return eval_table(std::get<TableCoefficient>(spec), t);
}

GridFn sample(const CoefficientSpec& spec, const Grid& grid) {
  validate(spec);
  require_coverage(spec, grid.t_end());
  std::vector<double> values(grid.size());
  for (std::size_t k = 0; k < values.size(); ++k) values[k] = evaluate(spec, grid.node(k));
  return GridFn(grid, std::move(values));
}

}  // namespace fracfs
