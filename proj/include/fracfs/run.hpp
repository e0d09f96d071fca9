#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracfs/fundamental_system.hpp"
#include "fracfs/order_pattern.hpp"

namespace fracfs {

// Problem files are JSON:
//   {"T": 1.0,
//    "alphas": [alpha_0, ..., alpha_m],
//    "coefficients": [{"constant": v} | {"poly": [c0, c1, ...]} | {"table": [[t, v], ...]}, ...],
//    "initial_values": [b_0, ..., b_{n0-1}]}        (optional)
Problem parse_problem(std::string_view text);
Problem load_problem_file(const std::string& path);

// Canonical encoding: fixed key order, shortest round-trip doubles.
std::string print_problem(const Problem& problem);

struct RunConfig {
  std::string problem_path;
  long long n_intervals = 1024;
  TruncationPolicy policy;
  bool oracle = true;
  bool residual_columns = false;
  std::string output_prefix = "fracfs";
};

void validate(const RunConfig& config);

struct ElementSummary {
  int j = 0;
  bool converged = true;
  int terms_used = 0;
  double last_term_norm = 0.0;
  double fixed_point_residual = 0.0;
  std::optional<double> oracle_sup_error;
};

struct Report {
  Problem problem;
  RunConfig config;
  OrderPattern pattern;
  Grid grid;
  std::vector<CanonicalElement> system;
  std::optional<GridFn> solution;
  std::vector<GridFn> residual_fields;
  std::vector<ElementSummary> elements;
  HypothesisCoverage coverage;

  bool all_converged() const;
};

Report run(const Problem& problem, const RunConfig& config);
Report run(const RunConfig& config);  // loads config.problem_path

std::string solutions_csv(const Report& report);
std::string report_json(const Report& report);

// Writes <prefix>.solutions.csv and <prefix>.report.json.
void write_outputs(const Report& report, const std::string& prefix);

}  // namespace fracfs
