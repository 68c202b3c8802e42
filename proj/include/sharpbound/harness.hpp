#pragma once

#include <cstdint>
#include <exception>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sharpbound {

enum class Command { Expand, Interp, Heat, Sweep };
enum class ExperimentKind { Expand, Interp, Heat };
enum class OutputFormat { Csv, Json };
enum class MethodChoice { Classical, TaylorLike, Both };
enum class SchemeChoice { FD1, FD2, Both };
enum class StudyChoice { None, Space, Time };

inline constexpr unsigned kMaxCliN = 1u << 20;
inline constexpr double kRowSlack = 1e-9;

struct Span {
  double a = 0.0;
  double b = 1.0;
};

/// Validated command line. `kind` says which module the rows come from; for
/// every command except `sweep` it follows from the command itself.
struct ExperimentConfig {
  Command command = Command::Expand;
  ExperimentKind kind = ExperimentKind::Expand;

  std::string out = "-";
  OutputFormat format = OutputFormat::Csv;
  bool strict = false;
  bool safe_mode = false;
  bool gnuplot = false;
  unsigned quad_points = 32;

  std::vector<std::string> functions;
  std::vector<Span> intervals;
  std::vector<unsigned> n_values;
  MethodChoice method = MethodChoice::TaylorLike;
  std::vector<unsigned> cells;

  SchemeChoice scheme = SchemeChoice::FD2;
  std::vector<unsigned> J_values;
  std::vector<double> lambdas;  // exactly one of lambdas / ks is non-empty
  std::vector<double> ks;
  double T = 0.1;
  StudyChoice study = StudyChoice::None;

  /// Ordered key/value echo of every parameter, used in JSON output.
  std::vector<std::pair<std::string, std::string>> echo() const;
};

/// Thrown by parse_cli for --help; carries the usage text.
class HelpRequested : public std::exception {
public:
  explicit HelpRequested(std::string text) : text_(std::move(text)) {}
  const char* what() const noexcept override { return text_.c_str(); }

private:
  std::string text_;
};

/// Arguments exclude the program name. Throws Error(Usage) with a one-line
/// message on any invalid input.
ExperimentConfig parse_cli(const std::vector<std::string>& args);

/// Null cells hold values that are undefined for the row (e.g. the order of
/// the first refinement, or numbers of a row that failed).
using CellValue = std::variant<std::monostate, bool, std::int64_t, double, std::string>;

struct SweepResult {
  std::string schema_version;
  std::vector<std::string> columns;
  std::vector<std::vector<CellValue>> rows;
  std::vector<std::pair<std::string, std::string>> parameters;

  std::size_t column(const std::string& name) const;
  std::size_t failed_rows() const;
  bool all_pass() const { return failed_rows() == 0; }
};

SweepResult run_experiment(const ExperimentConfig& cfg);

/// CSV: header plus one line per row, reals as %.16e. JSON: schema_version,
/// parameters and rows.
void emit(const SweepResult& result, OutputFormat format, std::ostream& os);
/// "-" writes to standard output. Throws Error(Io) on failure.
void emit(const SweepResult& result, OutputFormat format, const std::string& path);

/// Companion gnuplot script for a CSV written to `data_path`.
std::string gnuplot_script(const SweepResult& result, const std::string& data_path);

}  // namespace sharpbound
