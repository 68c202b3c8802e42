#include "sharpbound/sharpbound.h"

#include "sharpbound/error.hpp"
#include "sharpbound/expansion.hpp"
#include "sharpbound/harness.hpp"
#include "sharpbound/heat.hpp"
#include "sharpbound/interpolation.hpp"
#include "sharpbound/registry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <new>
#include <string>
#include <vector>

using namespace sharpbound;

struct sb_heat_run {
  HeatRun run;
};

struct sb_experiment {
  ExperimentConfig config;
};

struct sb_result {
  SweepResult result;
};

namespace {

thread_local std::string last_error;

sb_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return SB_ERR_INVALID_ARGUMENT;
    case ErrorCode::UnknownFunction: return SB_ERR_UNKNOWN_FUNCTION;
    case ErrorCode::DegenerateInterval: return SB_ERR_DEGENERATE_INTERVAL;
    case ErrorCode::DomainViolation: return SB_ERR_DOMAIN;
    case ErrorCode::NearSingular: return SB_ERR_NEAR_SINGULAR;
    case ErrorCode::StepBudget: return SB_ERR_STEP_BUDGET;
    case ErrorCode::MissingExact: return SB_ERR_MISSING_EXACT;
    case ErrorCode::Usage: return SB_ERR_USAGE;
    case ErrorCode::Io: return SB_ERR_IO;
  }
  return SB_ERR_INTERNAL;
}

sb_status fail(sb_status status, const char* what) {
  last_error = what;
  return status;
}

template <typename Body>
sb_status guarded(Body&& body) noexcept {
  try {
    body();
    return SB_OK;
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const HelpRequested& e) {
    return fail(SB_HELP, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SB_ERR_INTERNAL, "unknown failure");
  }
}

void require(const void* p, const char* name) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(name) + " must not be null");
}

sb_bounds to_c(const DerivativeBounds& b) { return {b.m2, b.M2, b.exact ? 1 : 0}; }

SchemeKind to_scheme(sb_scheme s) { return s == SB_SCHEME_FD1 ? SchemeKind::FD1 : SchemeKind::FD2; }

}  // namespace

extern "C" {

const char* sb_version(void) { return "1.0.0"; }

const char* sb_status_name(sb_status status) {
  switch (status) {
    case SB_OK: return "ok";
    case SB_HELP: return "help";
    case SB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SB_ERR_UNKNOWN_FUNCTION: return "unknown function";
    case SB_ERR_DEGENERATE_INTERVAL: return "degenerate interval";
    case SB_ERR_DOMAIN: return "domain violation";
    case SB_ERR_NEAR_SINGULAR: return "near-singular system";
    case SB_ERR_STEP_BUDGET: return "step budget exceeded";
    case SB_ERR_MISSING_EXACT: return "missing exact solution";
    case SB_ERR_USAGE: return "usage error";
    case SB_ERR_IO: return "i/o error";
    case SB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* sb_last_error(void) { return last_error.c_str(); }

size_t sb_function_count(void) { return function_ids().size(); }

const char* sb_function_id(size_t index) {
  const auto ids = function_ids();
  if (index >= ids.size()) return nullptr;
  return lookup(ids[index]).id.c_str();
}

sb_status sb_second_derivative_bounds(const char* fn, double a, double b, int safe_mode,
                                      sb_bounds* out) {
  return guarded([&] {
    require(fn, "fn");
    require(out, "out");
    auto bounds = second_derivative_bounds(lookup(fn), a, b);
    if (safe_mode) bounds = widen_for_safety(bounds);
    *out = to_c(bounds);
  });
}

sb_status sb_weights(unsigned n, double* out, size_t capacity) {
  return guarded([&] {
    require(out, "out");
    const auto w = weights(n);
    if (capacity < w.size()) throw Error(ErrorCode::InvalidArgument, "output buffer too small");
    std::copy(w.begin(), w.end(), out);
  });
}

sb_status sb_expand(const char* fn, double a, double b, unsigned n, sb_method method,
                    int safe_mode, sb_expansion_report* out) {
  return guarded([&] {
    require(fn, "fn");
    require(out, "out");
    const auto m = method == SB_METHOD_CLASSICAL ? ExpansionMethod::Classical
                                                 : ExpansionMethod::TaylorLike;
    const ExpansionReport r = evaluate(lookup(fn), {a, b, n}, m, safe_mode != 0);
    *out = {r.approx, r.truth, r.epsilon, r.epsilon_bound, r.epsilon_lower, r.epsilon_upper,
            r.abs_error, r.abs_error_bound, to_c(r.bounds), r.within_bound() ? 1 : 0};
  });
}

sb_status sb_interp_verify(const char* fn, unsigned cells, unsigned n, unsigned quad_points,
                           int safe_mode, sb_norm_report* out) {
  return guarded([&] {
    require(fn, "fn");
    require(out, "out");
    const NormReport r =
        verify(lookup(fn), build_uniform_mesh(cells), n, quad_points, safe_mode != 0);
    *out = {r.l1_value_error,    r.l1_deriv_error,   r.w11_error,
            r.classical_bound,   r.taylor_like_bound, r.asymptotic_bound,
            r.sup_u2,            r.h,                to_c(r.bounds),
            r.pass_classical,    r.pass_taylor_like, r.pass_ordering};
  });
}

double sb_classical_bound(double h, double sup_u2) { return classical_bound(h, sup_u2); }

sb_status sb_taylor_like_bound(double h, unsigned n, double sup_u2, double m2, double M2,
                               double* out) {
  return guarded([&] {
    require(out, "out");
    if (m2 > M2) throw Error(ErrorCode::InvalidArgument, "m2 must not exceed M2");
    *out = taylor_like_bound(h, n, sup_u2, {m2, M2, true});
  });
}

sb_status sb_heat_run_manufactured(sb_scheme scheme, unsigned J, double k, double T,
                                   sb_heat_run** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    auto handle = std::make_unique<sb_heat_run>();
    handle->run = run(manufactured_sine_problem(T), GridConfig{J, k}, to_scheme(scheme));
    *out = handle.release();
  });
}

size_t sb_heat_run_nodes(const sb_heat_run* run) { return run ? run->run.grid.J : 0; }

size_t sb_heat_run_steps(const sb_heat_run* run) { return run ? run->run.steps : 0; }

sb_status sb_heat_run_values(const sb_heat_run* run, double* out, size_t capacity) {
  return guarded([&] {
    require(run, "run");
    require(out, "out");
    const auto& v = run->run.final_state.values;
    if (capacity < v.size()) throw Error(ErrorCode::InvalidArgument, "output buffer too small");
    std::copy(v.begin(), v.end(), out);
  });
}

sb_status sb_heat_run_history(const sb_heat_run* run, double* out, size_t capacity) {
  return guarded([&] {
    require(run, "run");
    require(out, "out");
    const auto& v = run->run.max_norm_history;
    if (capacity < v.size()) throw Error(ErrorCode::InvalidArgument, "output buffer too small");
    std::copy(v.begin(), v.end(), out);
  });
}

double sb_heat_run_error_max(const sb_heat_run* run) {
  return run && run->run.error_max ? *run->run.error_max : std::numeric_limits<double>::quiet_NaN();
}

double sb_heat_run_error_l1(const sb_heat_run* run) {
  return run && run->run.error_l1 ? *run->run.error_l1 : std::numeric_limits<double>::quiet_NaN();
}

void sb_heat_run_destroy(sb_heat_run* run) { delete run; }

double sb_amplification_factor(sb_scheme scheme, double lambda, double theta) {
  return amplification_factor(to_scheme(scheme), lambda, theta);
}

sb_status sb_time_derivative_comparison(double k, double m2, double M2, sb_dt_comparison* out) {
  return guarded([&] {
    require(out, "out");
    const auto c = time_derivative_bound_comparison(k, m2, M2);
    *out = {c.bound_classical, c.bound_new, c.ratio};
  });
}

sb_status sb_experiment_parse(int argc, const char* const* argv, sb_experiment** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    if (argc < 0 || (argc > 0 && !argv)) throw Error(ErrorCode::InvalidArgument, "bad argv");
    std::vector<std::string> args(argv, argv + argc);
    auto handle = std::make_unique<sb_experiment>();
    handle->config = parse_cli(args);
    *out = handle.release();
  });
}

int sb_experiment_strict(const sb_experiment* exp) { return exp && exp->config.strict ? 1 : 0; }

sb_status sb_experiment_run(const sb_experiment* exp, sb_result** out) {
  return guarded([&] {
    require(exp, "exp");
    require(out, "out");
    *out = nullptr;
    auto handle = std::make_unique<sb_result>();
    handle->result = run_experiment(exp->config);
    *out = handle.release();
  });
}

sb_status sb_experiment_emit(const sb_experiment* exp, const sb_result* result) {
  return guarded([&] {
    require(exp, "exp");
    require(result, "result");
    const auto& cfg = exp->config;
    emit(result->result, cfg.format, cfg.out);
    if (cfg.gnuplot && cfg.out != "-") {
      const std::string script_path = cfg.out + ".gp";
      std::ofstream gp(script_path, std::ios::binary | std::ios::trunc);
      gp << gnuplot_script(result->result, cfg.out);
      if (!gp) throw Error(ErrorCode::Io, "failed writing " + script_path);
    }
  });
}

sb_status sb_result_emit(const sb_result* result, sb_format format, const char* path) {
  return guarded([&] {
    require(result, "result");
    require(path, "path");
    emit(result->result, format == SB_FORMAT_JSON ? OutputFormat::Json : OutputFormat::Csv,
         std::string(path));
  });
}

size_t sb_result_rows(const sb_result* result) { return result ? result->result.rows.size() : 0; }

size_t sb_result_failed_rows(const sb_result* result) {
  return result ? result->result.failed_rows() : 0;
}

void sb_result_destroy(sb_result* result) { delete result; }

void sb_experiment_destroy(sb_experiment* exp) { delete exp; }

}  // extern "C"
