/*
 * C interface to the sharpbound library.
 *
 * Every fallible call returns an sb_status. On failure a thread-local message
 * is available from sb_last_error() until the next failing call on the same
 * thread. Handles are opaque and owned by the caller; release them with the
 * matching *_destroy function (passing NULL is allowed).
 */
#ifndef SHARPBOUND_H
#define SHARPBOUND_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(SHARPBOUND_BUILDING)
#    define SB_API __declspec(dllexport)
#  else
#    define SB_API __declspec(dllimport)
#  endif
#else
#  define SB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sb_status {
  SB_OK = 0,
  SB_HELP = 1, /* --help was given; usage text is in sb_last_error() */
  SB_ERR_INVALID_ARGUMENT = -1,
  SB_ERR_UNKNOWN_FUNCTION = -2,
  SB_ERR_DEGENERATE_INTERVAL = -3,
  SB_ERR_DOMAIN = -4,
  SB_ERR_NEAR_SINGULAR = -5,
  SB_ERR_STEP_BUDGET = -6,
  SB_ERR_MISSING_EXACT = -7,
  SB_ERR_USAGE = -8,
  SB_ERR_IO = -9,
  SB_ERR_INTERNAL = -10
} sb_status;

typedef enum sb_method { SB_METHOD_CLASSICAL = 0, SB_METHOD_TAYLOR_LIKE = 1 } sb_method;
typedef enum sb_scheme { SB_SCHEME_FD1 = 0, SB_SCHEME_FD2 = 1 } sb_scheme;
typedef enum sb_format { SB_FORMAT_CSV = 0, SB_FORMAT_JSON = 1 } sb_format;

typedef struct sb_bounds {
  double m2;
  double M2;
  int exact;
} sb_bounds;

/* truth = approx + (b - a) * epsilon */
typedef struct sb_expansion_report {
  double approx;
  double truth;
  double epsilon;
  double epsilon_bound;
  double epsilon_lower;
  double epsilon_upper;
  double abs_error;
  double abs_error_bound;
  sb_bounds bounds;
  int within_bound; /* |epsilon| <= epsilon_bound + 1e-12 (1 + epsilon_bound) */
} sb_expansion_report;

typedef struct sb_norm_report {
  double l1_value_error;
  double l1_deriv_error;
  double w11_error;
  double classical_bound;
  double taylor_like_bound;
  double asymptotic_bound;
  double sup_u2;
  double h;
  sb_bounds bounds;
  int pass_classical;
  int pass_taylor_like;
  int pass_ordering;
} sb_norm_report;

typedef struct sb_dt_comparison {
  double bound_classical;
  double bound_new;
  double ratio;
} sb_dt_comparison;

typedef struct sb_heat_run sb_heat_run;
typedef struct sb_experiment sb_experiment;
typedef struct sb_result sb_result;

SB_API const char* sb_version(void);
SB_API const char* sb_status_name(sb_status status);
SB_API const char* sb_last_error(void);

/* Function registry */
SB_API size_t sb_function_count(void);
SB_API const char* sb_function_id(size_t index); /* NULL when out of range */
SB_API sb_status sb_second_derivative_bounds(const char* fn, double a, double b, int safe_mode,
                                             sb_bounds* out);

/* Expansions. `out` must hold n + 1 weights. */
SB_API sb_status sb_weights(unsigned n, double* out, size_t capacity);
SB_API sb_status sb_expand(const char* fn, double a, double b, unsigned n, sb_method method,
                           int safe_mode, sb_expansion_report* out);

/* P1 interpolation on a uniform mesh of [0, 1] */
SB_API sb_status sb_interp_verify(const char* fn, unsigned cells, unsigned n,
                                  unsigned quad_points, int safe_mode, sb_norm_report* out);
SB_API double sb_classical_bound(double h, double sup_u2);
SB_API sb_status sb_taylor_like_bound(double h, unsigned n, double sup_u2, double m2, double M2,
                                      double* out);

/* Heat equation on the manufactured problem exp(-pi^2 t) sin(pi x) */
SB_API sb_status sb_heat_run_manufactured(sb_scheme scheme, unsigned J, double k, double T,
                                          sb_heat_run** out);
SB_API size_t sb_heat_run_nodes(const sb_heat_run* run);
SB_API size_t sb_heat_run_steps(const sb_heat_run* run);
SB_API sb_status sb_heat_run_values(const sb_heat_run* run, double* out, size_t capacity);
/* Max-norm after each step, entry 0 is the initial state: steps + 1 values. */
SB_API sb_status sb_heat_run_history(const sb_heat_run* run, double* out, size_t capacity);
SB_API double sb_heat_run_error_max(const sb_heat_run* run);
SB_API double sb_heat_run_error_l1(const sb_heat_run* run);
SB_API void sb_heat_run_destroy(sb_heat_run* run);

SB_API double sb_amplification_factor(sb_scheme scheme, double lambda, double theta);
SB_API sb_status sb_time_derivative_comparison(double k, double m2, double M2,
                                               sb_dt_comparison* out);

/* Experiments. argv excludes the program name. */
SB_API sb_status sb_experiment_parse(int argc, const char* const* argv, sb_experiment** out);
SB_API int sb_experiment_strict(const sb_experiment* exp);
SB_API sb_status sb_experiment_run(const sb_experiment* exp, sb_result** out);
/* Writes to the configured --out/--format, plus the gnuplot companion when asked. */
SB_API sb_status sb_experiment_emit(const sb_experiment* exp, const sb_result* result);
SB_API sb_status sb_result_emit(const sb_result* result, sb_format format, const char* path);
SB_API size_t sb_result_rows(const sb_result* result);
SB_API size_t sb_result_failed_rows(const sb_result* result);
SB_API void sb_result_destroy(sb_result* result);
SB_API void sb_experiment_destroy(sb_experiment* exp);

#ifdef __cplusplus
}
#endif

#endif /* SHARPBOUND_H */
