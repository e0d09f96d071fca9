#include "fracfs/order_pattern.hpp"

#include <cmath>
#include <string>

#include "fracfs/error.hpp"

namespace fracfs {

OrderSpec::OrderSpec(std::vector<double> alphas) : alphas_(std::move(alphas)) {
  if (alphas_.size() < 2) {
    throw Error(ErrorKind::Validation, "alphas: need at least two orders (m >= 1)");
  }
  for (std::size_t i = 0; i < alphas_.size(); ++i) {
    if (!std::isfinite(alphas_[i])) {
      throw Error(ErrorKind::Validation, "alphas[" + std::to_string(i) + "]: order must be finite");
    }
    if (i > 0 && !(alphas_[i] < alphas_[i - 1])) {
      throw Error(ErrorKind::Validation,
                  "alphas[" + std::to_string(i) + "]: orders not strictly decreasing");
    }
  }
  if (alphas_.back() < 0.0) {
    throw Error(ErrorKind::Validation,
                "alphas[" + std::to_string(alphas_.size() - 1) + "]: orders must be nonnegative");
  }
}

int ceil_order(double alpha) {
  if (!(alpha >= 0.0)) throw Error(ErrorKind::Domain, "ceil_order: alpha must be nonnegative");
  return static_cast<int>(std::ceil(alpha));
}

std::vector<int> index_set_H(const OrderSpec& spec, int j) {
  const int n0 = ceil_order(spec.highest());
  if (j < 0 || j > n0 - 1) {
    throw Error(ErrorKind::Range, "index_set_H: j = " + std::to_string(j) +
                                      " outside 0.." + std::to_string(n0 - 1));
  }
  std::vector<int> out;
  for (std::size_t i = 1; i < spec.alphas().size(); ++i) {
    if (spec.alpha(i) <= static_cast<double>(j)) out.push_back(static_cast<int>(i));
  }
  return out;
}

const char* to_string(EquationType t) {
  switch (t) {
    case EquationType::TypeI: return "I";
    case EquationType::TypeII: return "II";
    case EquationType::TypeIII: return "III";
  }
  return "?";
}

OrderPattern classify(const OrderSpec& spec) {
  OrderPattern pat;
  for (double a : spec.alphas()) pat.n.push_back(ceil_order(a));
  const int n0 = pat.n0();
  pat.gamma = n0 - spec.highest();

  for (int j = 0; j < n0; ++j) {
    const auto set = index_set_H(spec, j);
    pat.h.push_back(set.empty() ? std::nullopt : std::optional<int>(set.front()));
  }

  if (pat.h.front()) {
    pat.type = EquationType::TypeI;
  } else if (!pat.h.back()) {
    pat.type = EquationType::TypeIII;
  } else {
    pat.type = EquationType::TypeII;
    int last_empty = 0;
    for (int j = 0; j < n0; ++j) {
      if (!pat.h[j]) last_empty = j;
    }
    pat.j0 = last_empty;
  }

  const bool top_pair_equal = pat.n[0] == pat.n[1];
  switch (pat.type) {
    case EquationType::TypeI: pat.pattern_id = top_pair_equal ? 1 : 2; break;
    case EquationType::TypeII: pat.pattern_id = top_pair_equal ? 3 : 4; break;
    case EquationType::TypeIII: pat.pattern_id = 5; break;
  }
  return pat;
}

HypothesisCoverage hypothesis_coverage(const OrderPattern& pattern) {
  const bool gamma_zero = pattern.gamma == 0.0;
  switch (pattern.pattern_id) {
    case 1:
      return {true,
              "pattern 1: requires a_i in C^1_gamma[0,T] with D^gamma a_i continuous, "
              "gamma = n0 - alpha0 in [0,1); coefficient smoothness not verified"};
    case 2:
      return {true, "pattern 2: requires a_i continuous on [0,T]; coefficient continuity not verified"};
    case 3:
      if (gamma_zero) {
        return {false,
                "pattern 3 with gamma = 0: outside stated hypotheses (0 < gamma < 1 required); "
                "discrete series computed anyway"};
      }
      return {true,
              "pattern 3: requires 0 < gamma < 1 and a_i in C^1_gamma[0,T] with D^gamma a_i "
              "continuous; coefficient smoothness not verified"};
    case 4:
      return {true, "pattern 4: requires a_i continuous on [0,T]; coefficient continuity not verified"};
    case 5:
      if (gamma_zero) {
        return {false,
                "pattern 5 with gamma = 0: outside stated hypotheses (0 < gamma < 1 required); "
                "solution taken as y_j = phi_{j+1}"};
      }
      return {true, "pattern 5: solution y_j = phi_{j+1} independent of the coefficients"};
  }
  return {false, "unclassified"};
}

}  // namespace fracfs
