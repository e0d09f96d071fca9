#include "fracfs/run.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fracfs/error.hpp"
#include "fracfs/oracle.hpp"

namespace fracfs {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void invalid(const std::string& path, const std::string& reason) {
  throw Error(ErrorKind::Validation, path + ": " + reason);
}

double number_at(const json& node, const std::string& path) {
  if (!node.is_number()) invalid(path, "expected a number");
  return node.get<double>();
}

std::vector<double> numbers_at(const json& node, const std::string& path) {
  if (!node.is_array()) invalid(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    out.push_back(number_at(node[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

CoefficientSpec coefficient_at(const json& node, const std::string& path) {
  if (!node.is_object() || node.size() != 1) {
    invalid(path, "expected an object with exactly one of constant, poly, table");
  }
  const auto it = node.begin();
  const std::string& key = it.key();
  const json& value = it.value();
  if (key == "constant") return ConstantCoefficient{number_at(value, path + ".constant")};
  if (key == "poly") {
    auto coeffs = numbers_at(value, path + ".poly");
    if (coeffs.empty()) invalid(path + ".poly", "coefficient list is empty");
    return PolyCoefficient{std::move(coeffs)};
  }
  if (key == "table") {
    if (!value.is_array()) invalid(path + ".table", "expected an array of [t, value] pairs");
    TableCoefficient tab;
    for (std::size_t i = 0; i < value.size(); ++i) {
      const std::string p = path + ".table[" + std::to_string(i) + "]";
      const auto pair = numbers_at(value[i], p);
      if (pair.size() != 2) invalid(p, "expected [t, value]");
      if (i > 0 && !(pair[0] > tab.points.back().first)) {
        invalid(p, "table abscissae not strictly increasing");
      }
      tab.points.emplace_back(pair[0], pair[1]);
    }
    if (tab.points.empty()) invalid(path + ".table", "no points");
    return tab;
  }
  invalid(path + "." + key, "unknown coefficient kind");
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ordered_json coefficient_json(const CoefficientSpec& spec) {
  ordered_json out = ordered_json::object();
  if (const auto* c = std::get_if<ConstantCoefficient>(&spec)) {
    out["constant"] = c->value;
  } else if (const auto* p = std::get_if<PolyCoefficient>(&spec)) {
    out["poly"] = p->coeffs;
  } else {
    ordered_json pts = ordered_json::array();
    for (const auto& [t, v] : std::get<TableCoefficient>(spec).points) pts.push_back({t, v});
    out["table"] = std::move(pts);
  }
  return out;
}

ordered_json nullable(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

}  // namespace

Problem parse_problem(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Syntax, std::string("problem file: ") + e.what());
  }
  if (!root.is_object()) invalid("$", "expected a JSON object");
  for (const auto& [key, value] : root.items()) {
    if (key != "T" && key != "alphas" && key != "coefficients" && key != "initial_values") {
      invalid(key, "unknown field");
    }
  }
  for (const char* key : {"T", "alphas", "coefficients"}) {
    if (!root.contains(key)) invalid(key, "missing required field");
  }

  const double t_end = number_at(root["T"], "T");
  if (!(t_end > 0.0)) invalid("T", "must be positive");

  auto alphas = numbers_at(root["alphas"], "alphas");
  OrderSpec orders(std::move(alphas));

  const json& coeff_node = root["coefficients"];
  if (!coeff_node.is_array()) invalid("coefficients", "expected an array");
  std::vector<CoefficientSpec> coeffs;
  for (std::size_t i = 0; i < coeff_node.size(); ++i) {
    coeffs.push_back(coefficient_at(coeff_node[i], "coefficients[" + std::to_string(i) + "]"));
  }

  std::optional<std::vector<double>> initial;
  if (root.contains("initial_values") && !root["initial_values"].is_null()) {
    initial = numbers_at(root["initial_values"], "initial_values");
  }

  Problem problem{std::move(orders), std::move(coeffs), t_end, std::move(initial)};
  validate(problem);
  return problem;
}

Problem load_problem_file(const std::string& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(ErrorKind::NotFound, "problem file not found: " + path);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read problem file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

std::string print_problem(const Problem& problem) {
  ordered_json out = ordered_json::object();
  out["T"] = problem.t_end;
  out["alphas"] = problem.orders.alphas();
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : problem.coefficients) coeffs.push_back(coefficient_json(c));
  out["coefficients"] = std::move(coeffs);
  if (problem.initial_values) out["initial_values"] = *problem.initial_values;
  return out.dump(2) + "\n";
}

void validate(const RunConfig& config) {
  if (config.n_intervals < 1) throw Error(ErrorKind::Validation, "--n: must be a positive integer");
  validate(config.policy);
}

bool Report::all_converged() const {
  for (const auto& e : elements) {
    if (!e.converged) return false;
  }
  return true;
}

Report run(const Problem& problem, const RunConfig& config) {
  validate(config);
  validate(problem);
  const Grid grid = make_grid(problem.t_end, config.n_intervals);
  const SystemOperator op(problem, grid);
  const OrderPattern pattern = classify(problem.orders);

  Report report{problem,
                config,
                pattern,
                grid,
                build_canonical_system(op, pattern, config.policy),
                std::nullopt,
                {},
                {},
                hypothesis_coverage(pattern)};

  if (problem.initial_values) {
    report.solution = assemble_ivp_solution(report.system, *problem.initial_values);
  }

  for (const auto& el : report.system) {
    ElementSummary s;
    s.j = el.j;
    s.converged = el.converged;
    s.terms_used = el.terms_used;
    s.last_term_norm = el.last_term_norm;
    GridFn field = fixed_point_residual_field(op, pattern, el.j, el.w);
    s.fixed_point_residual = sup_norm(field);
    if (config.oracle) {
      // With H_j empty the discrete equation is w = -K w, whose only
      // solution is w = 0.
      const GridFn direct = pattern.h[static_cast<std::size_t>(el.j)]
                                ? volterra_collocation_solve(op, pattern, el.j)
                                : GridFn(grid);
      s.oracle_sup_error = compare(el.w, direct, "neumann", "collocation").sup_error;
    }
    report.residual_fields.push_back(std::move(field));
    report.elements.push_back(s);
  }
  return report;
}

Report run(const RunConfig& config) {
  validate(config);
  return run(load_problem_file(config.problem_path), config);
}

std::string solutions_csv(const Report& report) {
  std::string out = "t";
  for (std::size_t j = 0; j < report.system.size(); ++j) out += ",y" + std::to_string(j);
  if (report.solution) out += ",y";
  if (report.config.residual_columns) {
    for (std::size_t j = 0; j < report.system.size(); ++j) out += ",residual" + std::to_string(j);
  }
  out += "\n";
  for (std::size_t k = 0; k < report.grid.size(); ++k) {
    out += format_double(report.grid.node(k));
    for (const auto& el : report.system) out += "," + format_double(el.y[k]);
    if (report.solution) out += "," + format_double((*report.solution)[k]);
    if (report.config.residual_columns) {
      for (const auto& r : report.residual_fields) out += "," + format_double(r[k]);
    }
    out += "\n";
  }
  return out;
}

std::string report_json(const Report& report) {
  const OrderPattern& pat = report.pattern;
  ordered_json out = ordered_json::object();
  out["pattern_id"] = pat.pattern_id;
  out["type"] = to_string(pat.type);
  out["j0"] = pat.j0 ? ordered_json(*pat.j0) : ordered_json(nullptr);
  out["n"] = pat.n;
  ordered_json h = ordered_json::array();
  for (const auto& hj : pat.h) h.push_back(hj ? ordered_json(*hj) : ordered_json(nullptr));
  out["h"] = std::move(h);
  out["gamma"] = pat.gamma;
  out["T"] = report.problem.t_end;
  out["n_intervals"] = report.grid.n_intervals();
  out["policy"] = {{"tol_abs", report.config.policy.tol_abs},
                   {"tol_rel", report.config.policy.tol_rel},
                   {"max_terms", report.config.policy.max_terms}};

  ordered_json elements = ordered_json::array();
  for (const auto& e : report.elements) {
    ordered_json el = ordered_json::object();
    el["j"] = e.j;
    el["converged"] = e.converged;
    el["terms_used"] = e.terms_used;
    el["last_term_norm"] = e.last_term_norm;
    el["fixed_point_residual"] = e.fixed_point_residual;
    el["oracle_sup_error"] = nullable(e.oracle_sup_error);
    elements.push_back(std::move(el));
  }
  out["per_element"] = std::move(elements);

  if (report.config.oracle) {
    ordered_json errs = ordered_json::array();
    for (const auto& e : report.elements) errs.push_back(nullable(e.oracle_sup_error));
    out["oracle"] = {{"method_a", "neumann"}, {"method_b", "collocation"}, {"sup_error", errs}};
  }
  out["hypothesis_covered"] = report.coverage.covered;
  out["hypothesis_note"] = report.coverage.note;
  return out.dump(2) + "\n";
}

void write_outputs(const Report& report, const std::string& prefix) {
  const auto write = [](const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::Io, "cannot open output file: " + path);
    f << body;
    f.close();
    if (!f) throw Error(ErrorKind::Io, "failed writing output file: " + path);
  };
  write(prefix + ".solutions.csv", solutions_csv(report));
  write(prefix + ".report.json", report_json(report));
}

}  // namespace fracfs
