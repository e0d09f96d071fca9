#include "fracfs/fracfs.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "fracfs/error.hpp"
#include "fracfs/run.hpp"

struct fracfs_problem {
  fracfs::Problem problem;
};

struct fracfs_report {
  fracfs::Report report;
};

namespace {

thread_local std::string g_last_error;

fracfs_status status_for(fracfs::ErrorKind kind) {
  using fracfs::ErrorKind;
  switch (kind) {
    case ErrorKind::NonConvergence:
    case ErrorKind::SingularStep:
    case ErrorKind::Overflow:
      return FRACFS_NUMERICAL;
    case ErrorKind::Io:
      return FRACFS_IO;
    default:
      return FRACFS_INPUT;
  }
}

fracfs_status fail(fracfs_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes and the thread-local
// message.
template <typename F>
fracfs_status guarded(F&& body) {
  try {
    return body();
  } catch (const fracfs::Error& e) {
    return fail(status_for(e.kind()), std::string(fracfs::to_string(e.kind())) + ": " + e.what());
  } catch (const std::bad_alloc&) {
    return fail(FRACFS_NUMERICAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FRACFS_INPUT, e.what());
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fracfs::RunConfig config_from(const fracfs_options* opts) {
  fracfs::RunConfig cfg;
  if (opts) {
    cfg.n_intervals = opts->n_intervals;
    cfg.policy.tol_abs = opts->tol_abs;
    cfg.policy.tol_rel = opts->tol_rel;
    cfg.policy.max_terms = opts->max_terms;
    cfg.oracle = opts->oracle != 0;
    cfg.residual_columns = opts->residual_columns != 0;
  }
  return cfg;
}

}  // namespace

extern "C" {

const char* fracfs_version(void) { return "1.0.0"; }

const char* fracfs_last_error(void) { return g_last_error.c_str(); }

void fracfs_string_free(char* s) { std::free(s); }

void fracfs_options_default(fracfs_options* opts) {
  if (!opts) return;
  const fracfs::RunConfig cfg;
  opts->n_intervals = cfg.n_intervals;
  opts->tol_abs = cfg.policy.tol_abs;
  opts->tol_rel = cfg.policy.tol_rel;
  opts->max_terms = cfg.policy.max_terms;
  opts->oracle = cfg.oracle ? 1 : 0;
  opts->residual_columns = cfg.residual_columns ? 1 : 0;
}

fracfs_status fracfs_problem_parse(const char* json_text, fracfs_problem** out) {
  if (!json_text || !out) return fail(FRACFS_INPUT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new fracfs_problem{fracfs::parse_problem(json_text)};
    return FRACFS_OK;
  });
}

fracfs_status fracfs_problem_load(const char* path, fracfs_problem** out) {
  if (!path || !out) return fail(FRACFS_INPUT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new fracfs_problem{fracfs::load_problem_file(path)};
    return FRACFS_OK;
  });
}

fracfs_status fracfs_problem_print(const fracfs_problem* problem, char** out) {
  if (!problem || !out) return fail(FRACFS_INPUT, "null argument");
  return guarded([&] {
    *out = duplicate(fracfs::print_problem(problem->problem));
    return FRACFS_OK;
  });
}

size_t fracfs_problem_num_orders(const fracfs_problem* problem) {
  return problem ? problem->problem.orders.alphas().size() : 0;
}

int fracfs_problem_n0(const fracfs_problem* problem) {
  return problem ? fracfs::ceil_order(problem->problem.orders.highest()) : 0;
}

int fracfs_problem_pattern(const fracfs_problem* problem) {
  return problem ? fracfs::classify(problem->problem.orders).pattern_id : 0;
}

void fracfs_problem_free(fracfs_problem* problem) { delete problem; }

fracfs_status fracfs_run(const fracfs_problem* problem, const fracfs_options* opts,
                         fracfs_report** out) {
  if (!problem || !out) return fail(FRACFS_INPUT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new fracfs_report{fracfs::run(problem->problem, config_from(opts))};
    if (!(*out)->report.all_converged()) {
      return fail(FRACFS_NUMERICAL, "non-convergence: series truncated at max_terms");
    }
    return FRACFS_OK;
  });
}

void fracfs_report_free(fracfs_report* report) { delete report; }

int fracfs_report_pattern(const fracfs_report* report) {
  return report ? report->report.pattern.pattern_id : 0;
}

int fracfs_report_all_converged(const fracfs_report* report) {
  return report && report->report.all_converged() ? 1 : 0;
}

size_t fracfs_report_num_elements(const fracfs_report* report) {
  return report ? report->report.system.size() : 0;
}

size_t fracfs_report_num_nodes(const fracfs_report* report) {
  return report ? report->report.grid.size() : 0;
}

fracfs_status fracfs_report_element(const fracfs_report* report, size_t j,
                                    fracfs_element_info* info) {
  if (!report || !info) return fail(FRACFS_INPUT, "null argument");
  if (j >= report->report.elements.size()) return fail(FRACFS_INPUT, "range: element index");
  const auto& e = report->report.elements[j];
  info->j = e.j;
  info->converged = e.converged ? 1 : 0;
  info->terms_used = e.terms_used;
  info->last_term_norm = e.last_term_norm;
  info->fixed_point_residual = e.fixed_point_residual;
  info->oracle_sup_error =
      e.oracle_sup_error ? *e.oracle_sup_error : std::numeric_limits<double>::quiet_NaN();
  return FRACFS_OK;
}

fracfs_status fracfs_report_element_values(const fracfs_report* report, size_t j, double* values,
                                           size_t capacity) {
  if (!report || !values) return fail(FRACFS_INPUT, "null argument");
  const auto& sys = report->report.system;
  if (j >= sys.size()) return fail(FRACFS_INPUT, "range: element index");
  const auto y = sys[j].y.values();
  if (capacity < y.size()) return fail(FRACFS_INPUT, "range: buffer too small");
  std::memcpy(values, y.data(), y.size() * sizeof(double));
  return FRACFS_OK;
}

fracfs_status fracfs_report_csv(const fracfs_report* report, char** out) {
  if (!report || !out) return fail(FRACFS_INPUT, "null argument");
  return guarded([&] {
    *out = duplicate(fracfs::solutions_csv(report->report));
    return FRACFS_OK;
  });
}

fracfs_status fracfs_report_json(const fracfs_report* report, char** out) {
  if (!report || !out) return fail(FRACFS_INPUT, "null argument");
  return guarded([&] {
    *out = duplicate(fracfs::report_json(report->report));
    return FRACFS_OK;
  });
}

fracfs_status fracfs_report_write(const fracfs_report* report, const char* prefix) {
  if (!report || !prefix) return fail(FRACFS_INPUT, "null argument");
  return guarded([&] {
    fracfs::write_outputs(report->report, prefix);
    return FRACFS_OK;
  });
}

}  // extern "C"
