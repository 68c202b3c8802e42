#include "sharpbound/error.hpp"
#include "sharpbound/expansion.hpp"
#include "sharpbound/harness.hpp"
#include "sharpbound/heat.hpp"
#include "sharpbound/interpolation.hpp"
#include "sharpbound/registry.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <tuple>

namespace sharpbound {

std::size_t SweepResult::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw Error(ErrorCode::InvalidArgument, "no column named " + name);
  return static_cast<std::size_t>(it - columns.begin());
}

std::size_t SweepResult::failed_rows() const {
  const std::size_t pass = column("pass");
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [&](const auto& row) {
    const auto* flag = std::get_if<bool>(&row[pass]);
    return !flag || !*flag;
  }));
}

namespace {

const std::vector<std::string> kExpandColumns = {
    "fn", "a", "b", "method", "n", "m2", "M2", "bounds_exact", "approx", "truth", "epsilon",
    "epsilon_bound", "epsilon_lower", "epsilon_upper", "abs_error", "abs_error_bound", "pass",
    "error"};

const std::vector<std::string> kInterpColumns = {
    "fn", "n", "cells", "h", "quad_points", "m2", "M2", "bounds_exact", "sup_u2",
    "l1_value_error", "l1_deriv_error", "w11_error", "classical_bound", "taylor_like_bound",
    "asymptotic_bound", "observed_order", "pass_classical", "pass_taylor_like", "pass_ordering",
    "pass", "error"};

const std::vector<std::string> kHeatColumns = {
    "scheme", "study", "J", "h", "k", "lambda", "T", "steps", "error_max", "error_l1",
    "order_max", "order_l1", "max_abs_A", "m2_t", "M2_t", "dt_bound_classical", "dt_bound_new",
    "dt_ratio", "stable", "pass", "error"};

CellValue opt(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

CellValue count(std::size_t v) { return static_cast<std::int64_t>(v); }

std::vector<CellValue> blank_row(std::size_t width) { return std::vector<CellValue>(width); }

void expand_rows(const ExperimentConfig& cfg, SweepResult& result) {
  result.schema_version = "expand/1";
  result.columns = kExpandColumns;
  const std::size_t width = result.columns.size();

  auto functions = cfg.functions;
  std::sort(functions.begin(), functions.end());
  auto intervals = cfg.intervals;
  std::sort(intervals.begin(), intervals.end(),
            [](const Span& x, const Span& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  auto ns = cfg.n_values;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

  std::vector<ExpansionMethod> methods;
  if (cfg.method != MethodChoice::TaylorLike) methods.push_back(ExpansionMethod::Classical);
  if (cfg.method != MethodChoice::Classical) methods.push_back(ExpansionMethod::TaylorLike);

  for (const auto& id : functions) {
    const FunctionSpec& spec = lookup(id);
    for (const auto& span : intervals) {
      for (ExpansionMethod method : methods) {
        // The classical expansion does not depend on n: one row, null n.
        const std::vector<std::optional<unsigned>> row_ns =
            method == ExpansionMethod::Classical
                ? std::vector<std::optional<unsigned>>{std::nullopt}
                : std::vector<std::optional<unsigned>>(ns.begin(), ns.end());
        for (const auto& n : row_ns) {
          auto row = blank_row(width);
          row[0] = id;
          row[1] = span.a;
          row[2] = span.b;
          row[3] = std::string(to_string(method));
          if (n) row[4] = count(*n);
          try {
            const ExpansionReport r =
                evaluate(spec, {span.a, span.b, n.value_or(1)}, method, cfg.safe_mode);
            row[5] = r.bounds.m2;
            row[6] = r.bounds.M2;
            row[7] = r.bounds.exact;
            row[8] = r.approx;
            row[9] = r.truth;
            row[10] = r.epsilon;
            row[11] = r.epsilon_bound;
            row[12] = r.epsilon_lower;
            row[13] = r.epsilon_upper;
            row[14] = r.abs_error;
            row[15] = r.abs_error_bound;
            row[16] = r.within_bound(kRowSlack);
            row[17] = std::string();
          } catch (const Error& e) {
            row[16] = false;
            row[17] = std::string(e.what());
          }
          result.rows.push_back(std::move(row));
        }
      }
    }
  }
}

void interp_rows(const ExperimentConfig& cfg, SweepResult& result) {
  result.schema_version = "interp/1";
  result.columns = kInterpColumns;
  const std::size_t width = result.columns.size();

  auto functions = cfg.functions;
  std::sort(functions.begin(), functions.end());
  auto ns = cfg.n_values;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  auto cells = cfg.cells;
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

  for (const auto& id : functions) {
    const FunctionSpec& spec = lookup(id);
    for (unsigned n : ns) {
      std::optional<std::pair<double, double>> previous;  // (h, w11_error)
      for (unsigned c : cells) {
        auto row = blank_row(width);
        row[0] = id;
        row[1] = count(n);
        row[2] = count(c);
        row[4] = count(cfg.quad_points);
        try {
          const Mesh mesh = build_uniform_mesh(c);
          const NormReport r = verify(spec, mesh, n, cfg.quad_points, cfg.safe_mode);
          row[3] = r.h;
          row[5] = r.bounds.m2;
          row[6] = r.bounds.M2;
          row[7] = r.bounds.exact;
          row[8] = r.sup_u2;
          row[9] = r.l1_value_error;
          row[10] = r.l1_deriv_error;
          row[11] = r.w11_error;
          row[12] = r.classical_bound;
          row[13] = r.taylor_like_bound;
          row[14] = r.asymptotic_bound;
          if (previous && previous->second > 0.0 && r.w11_error > 0.0) {
            row[15] = std::log(previous->second / r.w11_error) / std::log(previous->first / r.h);
          }
          row[16] = r.pass_classical;
          row[17] = r.pass_taylor_like;
          row[18] = r.pass_ordering;
          row[19] = r.all_pass();
          row[20] = std::string();
          previous = std::make_pair(r.h, r.w11_error);
        } catch (const Error& e) {
          row[19] = false;
          row[20] = std::string(e.what());
          previous.reset();
        }
        result.rows.push_back(std::move(row));
      }
    }
  }
}

void heat_rows(const ExperimentConfig& cfg, SweepResult& result) {
  result.schema_version = "heat/1";
  result.columns = kHeatColumns;
  const std::size_t width = result.columns.size();
  static const char* study_names[] = {"none", "space", "time"};

  std::vector<SchemeKind> schemes;
  if (cfg.scheme != SchemeChoice::FD2) schemes.push_back(SchemeKind::FD1);
  if (cfg.scheme != SchemeChoice::FD1) schemes.push_back(SchemeKind::FD2);

  const bool by_k = !cfg.ks.empty();
  const auto& steps = by_k ? cfg.ks : cfg.lambdas;
  const auto make_grid = [&](unsigned J, double v) {
    return by_k ? GridConfig{J, v} : GridConfig::from_lambda(J, v);
  };

  // Groups of grids; orders are reported between neighbours of a group.
  std::vector<std::vector<GridConfig>> groups;
  if (cfg.study == StudyChoice::Space) {
    for (double v : steps) {
      auto& g = groups.emplace_back();
      for (unsigned J : cfg.J_values) g.push_back(make_grid(J, v));
    }
  } else if (cfg.study == StudyChoice::Time) {
    for (unsigned J : cfg.J_values) {
      auto& g = groups.emplace_back();
      for (double v : steps) g.push_back(make_grid(J, v));
    }
  } else {
    for (unsigned J : cfg.J_values)
      for (double v : steps) groups.push_back({make_grid(J, v)});
  }

  const HeatProblem problem = manufactured_sine_problem(cfg.T);
  const DerivativeBounds utt = manufactured_utt_bounds(cfg.T);

  for (SchemeKind scheme : schemes) {
    for (const auto& group : groups) {
      std::optional<std::pair<double, double>> previous;  // (error_max, error_l1)
      for (const auto& grid : group) {
        auto row = blank_row(width);
        row[0] = std::string(to_string(scheme));
        row[1] = std::string(study_names[static_cast<int>(cfg.study)]);
        row[2] = count(grid.J);
        row[3] = grid.h();
        row[4] = grid.k;
        row[5] = grid.lambda();
        row[6] = cfg.T;
        const double max_a = max_abs_amplification(scheme, grid.lambda());
        const auto cmp = time_derivative_bound_comparison(grid.k, utt.m2, utt.M2);
        row[12] = max_a;
        row[13] = utt.m2;
        row[14] = utt.M2;
        row[15] = cmp.bound_classical;
        row[16] = cmp.bound_new;
        row[17] = cmp.ratio;
        row[18] = max_a <= 1.0;
        const bool bound_ok = utt.m2 < 0.0 || cmp.bound_new <= cmp.bound_classical;
        try {
          const HeatRun r = run(problem, grid, scheme);
          row[7] = count(r.steps);
          row[8] = opt(r.error_max);
          row[9] = opt(r.error_l1);
          if (cfg.study != StudyChoice::None && previous) {
            row[10] = observed_order(previous->first, *r.error_max);
            row[11] = observed_order(previous->second, *r.error_l1);
          }
          previous = std::make_pair(*r.error_max, *r.error_l1);
          row[19] = max_a <= 1.0 && bound_ok && std::isfinite(*r.error_max);
          row[20] = std::string();
        } catch (const Error& e) {
          row[19] = false;
          row[20] = std::string(e.what());
          previous.reset();
        }
        result.rows.push_back(std::move(row));
      }
    }
  }
}

}  // namespace

SweepResult run_experiment(const ExperimentConfig& cfg) {
  SweepResult result;
  result.parameters = cfg.echo();
  switch (cfg.kind) {
    case ExperimentKind::Expand: expand_rows(cfg, result); break;
    case ExperimentKind::Interp: interp_rows(cfg, result); break;
    case ExperimentKind::Heat: heat_rows(cfg, result); break;
  }
  return result;
}

}  // namespace sharpbound
