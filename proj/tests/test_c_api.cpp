// Exercises the shared library through its C header only.
#include "sharpbound/sharpbound.h"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>
#include <vector>

TEST_CASE("version and status names") {
  CHECK(std::strlen(sb_version()) > 0);
  CHECK(std::string(sb_status_name(SB_OK)) == "ok");
  CHECK(std::strlen(sb_status_name(SB_ERR_IO)) > 0);
  CHECK(std::strlen(sb_status_name(static_cast<sb_status>(-99))) > 0);
}

TEST_CASE("function registry") {
  const size_t count = sb_function_count();
  REQUIRE(count >= 7);
  bool found = false;
  for (size_t i = 0; i < count; ++i) found |= std::string(sb_function_id(i)) == "poly3";
  CHECK(found);
  CHECK(sb_function_id(count) == nullptr);

  sb_bounds b{};
  CHECK(sb_second_derivative_bounds("poly3", 0.0, 1.0, 0, &b) == SB_OK);
  CHECK(b.m2 == 0.0);
  CHECK(b.M2 == 6.0);
  CHECK(b.exact == 1);

  CHECK(sb_second_derivative_bounds("nope", 0.0, 1.0, 0, &b) == SB_ERR_UNKNOWN_FUNCTION);
  CHECK(std::string(sb_last_error()).find("nope") != std::string::npos);
  CHECK(sb_second_derivative_bounds("poly3", 1.0, 1.0, 0, &b) == SB_ERR_DEGENERATE_INTERVAL);
  CHECK(sb_second_derivative_bounds("runge", 0.0, 2.0, 0, &b) == SB_ERR_DOMAIN);
  CHECK(sb_second_derivative_bounds(nullptr, 0.0, 1.0, 0, &b) == SB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("weights and expansion") {
  double w[5];
  CHECK(sb_weights(4, w, 5) == SB_OK);
  CHECK(w[0] == 0.125);
  CHECK(w[2] == 0.25);
  CHECK(sb_weights(4, w, 4) == SB_ERR_INVALID_ARGUMENT);
  CHECK(sb_weights(0, w, 5) == SB_ERR_INVALID_ARGUMENT);

  sb_expansion_report r{};
  CHECK(sb_expand("poly3", 0.0, 1.0, 1, SB_METHOD_TAYLOR_LIKE, 0, &r) == SB_OK);
  CHECK(r.approx == doctest::Approx(1.5));
  CHECK(r.epsilon == doctest::Approx(-0.5));
  CHECK(r.epsilon_bound == doctest::Approx(0.75));
  CHECK(r.within_bound == 1);
  CHECK(sb_expand("poly3", 0.0, 1.0, 1, SB_METHOD_CLASSICAL, 0, &r) == SB_OK);
  CHECK(r.epsilon == doctest::Approx(1.0));
  CHECK(r.epsilon_bound == doctest::Approx(3.0));
}

TEST_CASE("interpolation") {
  sb_norm_report r{};
  CHECK(sb_interp_verify("bump", 10, 4, 32, 0, &r) == SB_OK);
  CHECK(std::abs(r.l1_deriv_error - 0.05) <= 1e-9);
  CHECK(std::abs(r.l1_value_error - 1.0 / 600) <= 1e-9);
  CHECK(r.pass_classical == 1);
  CHECK(r.pass_taylor_like == 1);
  CHECK(r.pass_ordering == 1);
  CHECK(sb_interp_verify("bump", 0, 4, 32, 0, &r) != SB_OK);

  CHECK(sb_classical_bound(0.1, 2.0) == doctest::Approx(0.22));
  double tl = 0.0;
  CHECK(sb_taylor_like_bound(0.1, 1, 2.0, -2.0, -2.0, &tl) == SB_OK);
  CHECK(tl == doctest::Approx(0.11));
  CHECK(sb_taylor_like_bound(0.1, 1, 2.0, 1.0, -1.0, &tl) == SB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("heat runs") {
  sb_heat_run* run = nullptr;
  REQUIRE(sb_heat_run_manufactured(SB_SCHEME_FD2, 31, 1.0 / 1024, 0.1, &run) == SB_OK);
  REQUIRE(run != nullptr);
  CHECK(sb_heat_run_nodes(run) == 31);
  const size_t steps = sb_heat_run_steps(run);
  CHECK(steps == 103);
  std::vector<double> values(31), history(steps + 1);
  CHECK(sb_heat_run_values(run, values.data(), values.size()) == SB_OK);
  CHECK(sb_heat_run_history(run, history.data(), history.size()) == SB_OK);
  CHECK(sb_heat_run_history(run, history.data(), steps) == SB_ERR_INVALID_ARGUMENT);
  CHECK(history.back() < history.front());
  CHECK(sb_heat_run_error_max(run) < 1e-3);
  CHECK(sb_heat_run_error_l1(run) <= sb_heat_run_error_max(run));
  sb_heat_run_destroy(run);
  sb_heat_run_destroy(nullptr);

  CHECK(sb_heat_run_manufactured(SB_SCHEME_FD1, 0, 0.01, 0.1, &run) == SB_ERR_INVALID_ARGUMENT);
  CHECK(sb_heat_run_manufactured(SB_SCHEME_FD1, 3, 1e-12, 1.0, &run) == SB_ERR_STEP_BUDGET);

  CHECK(sb_amplification_factor(SB_SCHEME_FD2, 1.0, std::numbers::pi) == doctest::Approx(-1.0 / 3));
  sb_dt_comparison c{};
  CHECK(sb_time_derivative_comparison(0.01, 0.0, 4.0, &c) == SB_OK);
  CHECK(c.ratio == 0.5);
  CHECK(sb_time_derivative_comparison(0.01, 1.0, 0.0, &c) == SB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("experiments") {
  const char* argv[] = {"expand", "--fn", "poly3", "--n", "1,2,4"};
  sb_experiment* exp = nullptr;
  REQUIRE(sb_experiment_parse(5, argv, &exp) == SB_OK);
  CHECK(sb_experiment_strict(exp) == 0);
  sb_result* result = nullptr;
  REQUIRE(sb_experiment_run(exp, &result) == SB_OK);
  CHECK(sb_result_rows(result) == 3);
  CHECK(sb_result_failed_rows(result) == 0);

  const auto path = (std::filesystem::temp_directory_path() / "sharpbound_c_api.json").string();
  CHECK(sb_result_emit(result, SB_FORMAT_JSON, path.c_str()) == SB_OK);
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  CHECK(first == "{");
  std::filesystem::remove(path);
  CHECK(sb_result_emit(result, SB_FORMAT_CSV, "/nonexistent-dir/out.csv") == SB_ERR_IO);

  sb_result_destroy(result);
  sb_experiment_destroy(exp);

  const char* bad[] = {"heat", "--scheme", "fd3"};
  sb_experiment* none = nullptr;
  CHECK(sb_experiment_parse(3, bad, &none) == SB_ERR_USAGE);
  CHECK(none == nullptr);
  CHECK(std::string(sb_last_error()).find("unknown scheme: fd3") == 0);

  const char* help[] = {"--help"};
  CHECK(sb_experiment_parse(1, help, &none) == SB_HELP);
  CHECK(std::string(sb_last_error()).find("expand") != std::string::npos);
}
