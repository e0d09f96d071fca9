#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fracfs {

// Orders (alpha_0, alpha_1, ..., alpha_m) of the equation
//   D^{alpha_0} y = - sum_{i=1..m} a_i(t) D^{alpha_i} y,
// strictly decreasing with alpha_m >= 0 and m >= 1. Comparisons are exact:
// an order of 0.9999999 is not snapped to 1.
class OrderSpec {
 public:
  explicit OrderSpec(std::vector<double> alphas);

  const std::vector<double>& alphas() const { return alphas_; }
  double alpha(std::size_t i) const { return alphas_[i]; }
  double highest() const { return alphas_.front(); }
  double lowest() const { return alphas_.back(); }
  // Number of right-hand terms.
  std::size_t m() const { return alphas_.size() - 1; }

  friend bool operator==(const OrderSpec&, const OrderSpec&) = default;

 private:
  std::vector<double> alphas_;
};

/// The integer n with n - 1 < alpha <= n (so ceil_order(2) == 2, ceil_order(0) == 0).
int ceil_order(double alpha);

/// Indices i in 1..m with alpha_i <= j, ascending. Requires 0 <= j < n_0.
std::vector<int> index_set_H(const OrderSpec& spec, int j);

enum class EquationType { TypeI, TypeII, TypeIII };

const char* to_string(EquationType t);

struct OrderPattern {
  std::vector<int> n;                 // n_i for i = 0..m
  std::vector<std::optional<int>> h;  // min H_j for j = 0..n_0-1, empty if H_j is empty
  EquationType type = EquationType::TypeI;
  std::optional<int> j0;              // TypeII only: last j with H_j empty
  int pattern_id = 0;                 // 1..5
  double gamma = 0.0;                 // n_0 - alpha_0, in [0, 1)

  int n0() const { return n.front(); }
};

/// Derives n_i, h_j, the equation type and the pattern id.
///
///   1: alpha_m = 0,              n_0 = n_1
///   2: alpha_m = 0,              n_0 > n_1
///   3: 0 < alpha_m <= n_0 - 1,   n_0 = n_1
///   4: 0 < alpha_m <= n_0 - 1,   n_0 > n_1
///   5: n_0 - 1 < alpha_m         (TypeIII)
OrderPattern classify(const OrderSpec& spec);

// Which convergence hypotheses apply for this pattern, and whether the
// pattern/gamma combination falls outside every stated case. Coefficient
// smoothness itself is never verified.
struct HypothesisCoverage {
  bool covered = true;
  std::string note;
};

HypothesisCoverage hypothesis_coverage(const OrderPattern& pattern);

}  // namespace fracfs
