#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace fracfs {

// Uniform grid t_k = k * step on [0, t_end], k = 0..n_intervals.
class Grid {
 public:
  Grid(double t_end, std::size_t n_intervals);

  double t_end() const { return t_end_; }
  std::size_t n_intervals() const { return n_; }
  std::size_t size() const { return n_ + 1; }
  double step() const { return step_; }
  // The last node is pinned to t_end rather than n * step.
  double node(std::size_t k) const { return k == n_ ? t_end_ : static_cast<double>(k) * step_; }
  std::vector<double> nodes() const;

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.t_end_ == b.t_end_ && a.n_ == b.n_;
  }

 private:
  double t_end_;
  std::size_t n_;
  double step_;
};

Grid make_grid(double t_end, long long n_intervals);

// Real values sampled at the nodes of a grid.
class GridFn {
 public:
  explicit GridFn(const Grid& grid);  // zeros
  GridFn(const Grid& grid, std::vector<double> values);

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t k) const { return values_[k]; }
  double& operator[](std::size_t k) { return values_[k]; }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  friend bool operator==(const GridFn& a, const GridFn& b) = default;

 private:
  Grid grid_;
  std::vector<double> values_;
};

double sup_norm(const GridFn& f);
GridFn combine(double a, const GridFn& f, double b, const GridFn& g);
GridFn pointwise_mul(const GridFn& f, const GridFn& g);

void require_same_grid(const GridFn& f, const GridFn& g, const char* where);

// Coefficient encodings accepted for a_i(t).
struct ConstantCoefficient {
  double value = 0.0;
  friend bool operator==(const ConstantCoefficient&, const ConstantCoefficient&) = default;
};

struct PolyCoefficient {
  std::vector<double> coeffs;  // low-to-high degree
  friend bool operator==(const PolyCoefficient&, const PolyCoefficient&) = default;
};

// Piecewise-linear through (t, value) points with strictly increasing t.
struct TableCoefficient {
  std::vector<std::pair<double, double>> points;
  friend bool operator==(const TableCoefficient&, const TableCoefficient&) = default;
};

using CoefficientSpec = std::variant<ConstantCoefficient, PolyCoefficient, TableCoefficient>;

// Throws Error(Validation) on an empty polynomial or a non-increasing table.
void validate(const CoefficientSpec& spec);

// Throws Error(Coverage) when a table point set does not span [0, t_end].
void require_coverage(const CoefficientSpec& spec, double t_end);

double evaluate(const CoefficientSpec& spec, double t);

GridFn sample(const CoefficientSpec& spec, const Grid& grid);

}  // namespace fracfs
