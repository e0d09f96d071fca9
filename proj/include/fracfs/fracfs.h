/* C interface to the fracfs engine.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every call that can fail returns a
 * fracfs_status; on failure a one-line message is available from
 * fracfs_last_error() on the calling thread until the next failing call.
 * Strings returned through char** are allocated by the library and released
 * with fracfs_string_free.
 */
#ifndef FRACFS_H
#define FRACFS_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(FRACFS_BUILDING_LIBRARY)
#    define FRACFS_API __declspec(dllexport)
#  else
#    define FRACFS_API __declspec(dllimport)
#  endif
#else
#  define FRACFS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as CLI exit codes. */
typedef enum fracfs_status {
  FRACFS_OK = 0,
  FRACFS_NUMERICAL = 1, /* non-convergence or a singular oracle step */
  FRACFS_INPUT = 2,     /* malformed or invalid problem / options */
  FRACFS_IO = 3         /* output could not be written */
} fracfs_status;

typedef struct fracfs_problem fracfs_problem;
typedef struct fracfs_report fracfs_report;

typedef struct fracfs_options {
  long long n_intervals;
  double tol_abs;
  double tol_rel;
  int max_terms;
  int oracle;           /* nonzero: run the collocation comparison */
  int residual_columns; /* nonzero: append residual<j> columns to the CSV */
} fracfs_options;

typedef struct fracfs_element_info {
  int j;
  int converged;
  int terms_used;
  double last_term_norm;
  double fixed_point_residual;
  double oracle_sup_error; /* NaN when the oracle was not run */
} fracfs_element_info;

FRACFS_API const char* fracfs_version(void);
FRACFS_API const char* fracfs_last_error(void);
FRACFS_API void fracfs_string_free(char* s);

/* n_intervals 1024, tolerances 1e-12, max_terms 200, oracle on. */
FRACFS_API void fracfs_options_default(fracfs_options* opts);

FRACFS_API fracfs_status fracfs_problem_parse(const char* json_text, fracfs_problem** out);
FRACFS_API fracfs_status fracfs_problem_load(const char* path, fracfs_problem** out);
FRACFS_API fracfs_status fracfs_problem_print(const fracfs_problem* problem, char** out);
FRACFS_API size_t fracfs_problem_num_orders(const fracfs_problem* problem);
FRACFS_API int fracfs_problem_n0(const fracfs_problem* problem);
FRACFS_API void fracfs_problem_free(fracfs_problem* problem);

/* Pattern id 1..5 of the problem's order tuple, or 0 on a NULL handle. */
FRACFS_API int fracfs_problem_pattern(const fracfs_problem* problem);

/* Builds the canonical system; returns FRACFS_NUMERICAL (with *out still set)
 * when some element did not converge. */
FRACFS_API fracfs_status fracfs_run(const fracfs_problem* problem, const fracfs_options* opts,
                                    fracfs_report** out);
FRACFS_API void fracfs_report_free(fracfs_report* report);

FRACFS_API int fracfs_report_pattern(const fracfs_report* report);
FRACFS_API int fracfs_report_all_converged(const fracfs_report* report);
FRACFS_API size_t fracfs_report_num_elements(const fracfs_report* report);
FRACFS_API size_t fracfs_report_num_nodes(const fracfs_report* report);
FRACFS_API fracfs_status fracfs_report_element(const fracfs_report* report, size_t j,
                                               fracfs_element_info* info);
/* Copies y_j at all nodes into values[0..num_nodes). */
FRACFS_API fracfs_status fracfs_report_element_values(const fracfs_report* report, size_t j,
                                                      double* values, size_t capacity);
FRACFS_API fracfs_status fracfs_report_csv(const fracfs_report* report, char** out);
FRACFS_API fracfs_status fracfs_report_json(const fracfs_report* report, char** out);
/* Writes <prefix>.solutions.csv and <prefix>.report.json. */
FRACFS_API fracfs_status fracfs_report_write(const fracfs_report* report, const char* prefix);

#ifdef __cplusplus
}
#endif

#endif /* FRACFS_H */
