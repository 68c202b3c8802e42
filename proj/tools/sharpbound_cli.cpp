// Command-line front end. Talks to the library only through the C API.
//
// Exit status: 0 success, 2 usage error, 3 failing rows under --strict,
// 4 I/O error, 1 anything else.

#include "sharpbound/sharpbound.h"

#include <cstdio>

namespace {

int exit_code(sb_status status) {
  switch (status) {
    case SB_ERR_USAGE: return 2;
    case SB_ERR_IO: return 4;
    default: return 1;
  }
}

int report(sb_status status) {
  std::fprintf(stderr, "sharpbound: %s\n", sb_last_error());
  if (status == SB_ERR_USAGE) std::fprintf(stderr, "run 'sharpbound --help' for usage\n");
  return exit_code(status);
}

}  // namespace

int main(int argc, char** argv) {
  sb_experiment* exp = nullptr;
  sb_status status = sb_experiment_parse(argc - 1, argv + 1, &exp);
  if (status == SB_HELP) {
    std::fputs(sb_last_error(), stdout);
    return 0;
  }
  if (status != SB_OK) return report(status);

  sb_result* result = nullptr;
  status = sb_experiment_run(exp, &result);
  if (status != SB_OK) {
    sb_experiment_destroy(exp);
    return report(status);
  }

  status = sb_experiment_emit(exp, result);
  const size_t failed = sb_result_failed_rows(result);
  const size_t rows = sb_result_rows(result);
  const bool strict = sb_experiment_strict(exp) != 0;
  sb_result_destroy(result);
  sb_experiment_destroy(exp);
  if (status != SB_OK) return report(status);

  if (failed > 0) {
    std::fprintf(stderr, "sharpbound: %zu of %zu rows failed\n", failed, rows);
    if (strict) return 3;
  }
  return 0;
}
