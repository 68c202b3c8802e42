#include "sharpbound/error.hpp"
#include "sharpbound/harness.hpp"
#include "sharpbound/heat.hpp"
#include "sharpbound/registry.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace sharpbound {

namespace {

[[noreturn]] void usage_error(const std::string& msg) { throw Error(ErrorCode::Usage, msg); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double parse_real(const std::string& flag, const std::string& token) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (token.empty() || end != token.c_str() + token.size() || errno == ERANGE || !std::isfinite(v))
    usage_error("invalid value for " + flag + ": '" + token + "' (expected a finite number)");
  return v;
}

unsigned parse_count(const std::string& flag, const std::string& token, unsigned lo, unsigned hi) {
  errno = 0;
  char* end = nullptr;
  const bool digits = !token.empty() && std::all_of(token.begin(), token.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
  const unsigned long v = digits ? std::strtoul(token.c_str(), &end, 10) : 0;
  if (!digits || errno == ERANGE || v < lo || v > hi) {
    usage_error("invalid value for " + flag + ": '" + token + "' (expected an integer in [" +
                std::to_string(lo) + ", " + std::to_string(hi) + "])");
  }
  return static_cast<unsigned>(v);
}

std::vector<unsigned> parse_count_list(const std::string& flag, const std::string& text,
                                       unsigned lo, unsigned hi) {
  std::vector<unsigned> values;
  for (const auto& token : split(text, ',')) values.push_back(parse_count(flag, token, lo, hi));
  if (values.empty()) usage_error("empty list for " + flag);
  return values;
}

std::vector<double> parse_positive_list(const std::string& flag, const std::string& text) {
  std::vector<double> values;
  for (const auto& token : split(text, ',')) {
    const double v = parse_real(flag, token);
    if (!(v > 0.0)) usage_error("out of range for " + flag + ": " + token + " (must be > 0)");
    values.push_back(v);
  }
  if (values.empty()) usage_error("empty list for " + flag);
  return values;
}

std::vector<Span> parse_intervals(const std::string& text) {
  std::vector<Span> spans;
  for (const auto& token : split(text, ',')) {
    const auto ends = split(token, ':');
    if (ends.size() != 2) usage_error("invalid value for --interval: '" + token + "' (expected a:b)");
    const Span s{parse_real("--interval", ends[0]), parse_real("--interval", ends[1])};
    if (!(s.a < s.b)) usage_error("degenerate interval for --interval: " + token);
    spans.push_back(s);
  }
  if (spans.empty()) usage_error("empty list for --interval");
  return spans;
}

std::vector<std::string> parse_functions(const std::string& text) {
  if (text == "all") return function_ids();
  std::vector<std::string> ids;
  for (const auto& token : split(text, ',')) {
    try {
      ids.push_back(lookup(token).id);
    } catch (const Error& e) {
      usage_error(e.what());
    }
  }
  if (ids.empty()) usage_error("empty list for --fn");
  return ids;
}

template <typename Enum>
Enum parse_choice(const std::string& what, const std::string& value,
                  const std::vector<std::pair<std::string, Enum>>& choices) {
  std::string expected;
  for (const auto& [name, e] : choices) {
    if (name == value) return e;
    expected += (expected.empty() ? "" : "|") + name;
  }
  usage_error("unknown " + what + ": " + value + " (expected " + expected + ")");
}

std::string real_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string s;
  for (const auto& v : values) {
    if (!s.empty()) s += ',';
    if constexpr (std::is_same_v<T, double>) {
      s += real_text(v);
    } else if constexpr (std::is_same_v<T, std::string>) {
      s += v;
    } else {
      s += std::to_string(v);
    }
  }
  return s;
}

struct RawOptions {
  std::string out = "-";
  std::string format = "csv";
  bool strict = false;
  bool safe_mode = false;
  bool gnuplot = false;
  unsigned quad_points = 32;

  std::string kind;
  std::string fn;
  double a = 0.0;
  double b = 1.0;
  std::string interval = "0:1,0:0.5,0.25:1";
  std::string n;
  std::string method = "taylorlike";
  std::string cells = "4,8,16,32,64";

  std::string scheme = "fd2";
  std::string J = "31";
  std::string lambda;
  std::string k;
  double T = 0.1;
  std::string study = "none";
};

void add_shared(CLI::App* sub, RawOptions& raw) {
  sub->add_option("--out", raw.out, "Output path, '-' for stdout")->capture_default_str();
  sub->add_option("--format", raw.format, "csv|json")->capture_default_str();
  sub->add_flag("--strict", raw.strict, "Exit with status 3 when any row fails");
  sub->add_flag("--safe-mode", raw.safe_mode, "Widen sampled f'' bounds by 1%");
  sub->add_option("--quad-points", raw.quad_points, "Gauss-Legendre points per cell")
      ->capture_default_str();
  sub->add_flag("--gnuplot", raw.gnuplot, "Also write <out>.gp next to a CSV file");
}

void add_expand(CLI::App* sub, RawOptions& raw) {
  sub->add_option("--method", raw.method, "classical|taylorlike|both")->capture_default_str();
}

void add_heat(CLI::App* sub, RawOptions& raw) {
  sub->add_option("--scheme", raw.scheme, "fd1|fd2|both")->capture_default_str();
  sub->add_option("--J", raw.J, "Interior node counts, comma separated")->capture_default_str();
  sub->add_option("--lambda", raw.lambda, "k/h^2 values, comma separated (default 1)");
  sub->add_option("--k", raw.k, "Time steps, comma separated");
  sub->add_option("--T", raw.T, "Final time")->capture_default_str();
  sub->add_option("--study", raw.study, "none|space|time")->capture_default_str();
}

void check_study(const ExperimentConfig& cfg) {
  if (cfg.study == StudyChoice::None) return;
  if (cfg.study == StudyChoice::Space) {
    if (cfg.lambdas.empty()) usage_error("--study space needs --lambda (fixed k/h^2)");
    for (double lambda : cfg.lambdas) {
      std::vector<GridConfig> grids;
      for (unsigned J : cfg.J_values) grids.push_back(GridConfig::from_lambda(J, lambda));
      if (!is_geometric(grids, StudyMode::SpaceAtFixedLambda))
        usage_error("--study space needs --J values with J+1 doubling, e.g. 15,31,63");
    }
  } else {
    for (unsigned J : cfg.J_values) {
      std::vector<GridConfig> grids;
      if (!cfg.ks.empty()) {
        for (double k : cfg.ks) grids.push_back({J, k});
      } else {
        for (double lambda : cfg.lambdas) grids.push_back(GridConfig::from_lambda(J, lambda));
      }
      if (!is_geometric(grids, StudyMode::TimeAtFixedH))
        usage_error("--study time needs --k (or --lambda) values that halve, e.g. 0.01,0.005");
    }
  }
}

}  // namespace

ExperimentConfig parse_cli(const std::vector<std::string>& args) {
  static const std::vector<std::pair<std::string, Command>> commands = {
      {"expand", Command::Expand}, {"interp", Command::Interp},
      {"heat", Command::Heat},     {"sweep", Command::Sweep}};

  if (args.empty()) usage_error("missing subcommand (expected expand|interp|heat|sweep)");
  if (args.front().rfind("-", 0) != 0) parse_choice("subcommand", args.front(), commands);

  RawOptions raw;
  CLI::App app{"Taylor-like expansion, P1 interpolation and heat scheme experiments", "sharpbound"};
  app.require_subcommand(1, 1);

  auto* expand = app.add_subcommand("expand", "Expansion remainder versus its bounds");
  add_shared(expand, raw);
  expand->add_option("--fn", raw.fn, "Registry function id(s)")->required();
  expand->add_option("--a", raw.a, "Base point")->capture_default_str();
  expand->add_option("--b", raw.b, "Evaluation point")->capture_default_str();
  expand->add_option("--n", raw.n, "Subinterval counts, comma separated (default 1,2,4,8,16,32)");
  add_expand(expand, raw);

  auto* interp = app.add_subcommand("interp", "P1 interpolation W11 error versus its bounds");
  add_shared(interp, raw);
  interp->add_option("--fn", raw.fn, "Registry function id(s)")->required();
  interp->add_option("--cells", raw.cells, "Uniform mesh cell counts")->capture_default_str();
  interp->add_option("--n", raw.n, "n of the Taylor-like bound (default 1,4,16)");

  auto* heat = app.add_subcommand("heat", "FD1/FD2 runs on the manufactured sine problem");
  add_shared(heat, raw);
  add_heat(heat, raw);

  auto* sweep = app.add_subcommand("sweep", "Cross-product sweep over functions and intervals");
  add_shared(sweep, raw);
  sweep->add_option("--kind", raw.kind, "expand|interp|heat")->required();
  sweep->add_option("--fn", raw.fn, "Function ids or 'all' (default all)");
  sweep->add_option("--interval", raw.interval, "a:b list for expand")->capture_default_str();
  sweep->add_option("--n", raw.n, "n values");
  sweep->add_option("--cells", raw.cells, "Mesh cell counts for interp")->capture_default_str();
  add_expand(sweep, raw);
  add_heat(sweep, raw);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    throw HelpRequested(subs.empty() ? app.help() : subs.front()->help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    usage_error(e.what());
  }

  ExperimentConfig cfg;
  cfg.command = parse_choice("subcommand", app.get_subcommands().front()->get_name(), commands);
  cfg.out = raw.out;
  cfg.format = parse_choice<OutputFormat>("format", raw.format,
                                          {{"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}});
  cfg.strict = raw.strict;
  cfg.safe_mode = raw.safe_mode;
  cfg.gnuplot = raw.gnuplot;
  if (cfg.gnuplot && cfg.out == "-") usage_error("--gnuplot needs --out <file>");
  cfg.quad_points = parse_count("--quad-points", std::to_string(raw.quad_points), 2, 4096);

  switch (cfg.command) {
    case Command::Expand: cfg.kind = ExperimentKind::Expand; break;
    case Command::Interp: cfg.kind = ExperimentKind::Interp; break;
    case Command::Heat: cfg.kind = ExperimentKind::Heat; break;
    case Command::Sweep:
      cfg.kind = parse_choice<ExperimentKind>("kind", raw.kind,
                                              {{"expand", ExperimentKind::Expand},
                                               {"interp", ExperimentKind::Interp},
                                               {"heat", ExperimentKind::Heat}});
      break;
  }

  if (cfg.kind == ExperimentKind::Expand || cfg.kind == ExperimentKind::Interp) {
    cfg.functions = parse_functions(raw.fn.empty() ? "all" : raw.fn);
  }

  if (cfg.kind == ExperimentKind::Expand) {
    if (cfg.command == Command::Expand) {
      if (!(raw.a < raw.b)) usage_error("degenerate interval: --a must be < --b");
      cfg.intervals = {{raw.a, raw.b}};
    } else {
      cfg.intervals = parse_intervals(raw.interval);
    }
    cfg.n_values = parse_count_list("--n", raw.n.empty() ? "1,2,4,8,16,32" : raw.n, 1, kMaxCliN);
    cfg.method = parse_choice<MethodChoice>("method", raw.method,
                                            {{"classical", MethodChoice::Classical},
                                             {"taylorlike", MethodChoice::TaylorLike},
                                             {"both", MethodChoice::Both}});
  } else if (cfg.kind == ExperimentKind::Interp) {
    cfg.cells = parse_count_list("--cells", raw.cells, 1, 1'000'000);
    cfg.n_values = parse_count_list("--n", raw.n.empty() ? "1,4,16" : raw.n, 1, kMaxCliN);
  } else {
    cfg.scheme = parse_choice<SchemeChoice>(
        "scheme", raw.scheme,
        {{"fd1", SchemeChoice::FD1}, {"fd2", SchemeChoice::FD2}, {"both", SchemeChoice::Both}});
    cfg.J_values = parse_count_list("--J", raw.J, 1, 1'000'000);
    if (!raw.lambda.empty() && !raw.k.empty()) usage_error("--lambda and --k are mutually exclusive");
    if (!raw.k.empty()) {
      cfg.ks = parse_positive_list("--k", raw.k);
    } else {
      cfg.lambdas = parse_positive_list("--lambda", raw.lambda.empty() ? "1" : raw.lambda);
    }
    if (!(raw.T > 0.0) || !std::isfinite(raw.T)) usage_error("out of range for --T: must be > 0");
    cfg.T = raw.T;
    cfg.study = parse_choice<StudyChoice>(
        "study", raw.study,
        {{"none", StudyChoice::None}, {"space", StudyChoice::Space}, {"time", StudyChoice::Time}});
    std::sort(cfg.J_values.begin(), cfg.J_values.end());
    std::sort(cfg.lambdas.begin(), cfg.lambdas.end());
    std::sort(cfg.ks.begin(), cfg.ks.end());
    if (cfg.study == StudyChoice::Time) {
      std::reverse(cfg.lambdas.begin(), cfg.lambdas.end());
      std::reverse(cfg.ks.begin(), cfg.ks.end());
    }
    check_study(cfg);
  }
  return cfg;
}

std::vector<std::pair<std::string, std::string>> ExperimentConfig::echo() const {
  static const char* command_names[] = {"expand", "interp", "heat", "sweep"};
  static const char* kind_names[] = {"expand", "interp", "heat"};
  static const char* method_names[] = {"classical", "taylorlike", "both"};
  static const char* scheme_names[] = {"fd1", "fd2", "both"};
  static const char* study_names[] = {"none", "space", "time"};

  std::vector<std::pair<std::string, std::string>> e;
  e.emplace_back("command", command_names[static_cast<int>(command)]);
  e.emplace_back("kind", kind_names[static_cast<int>(kind)]);
  e.emplace_back("safe_mode", safe_mode ? "true" : "false");
  e.emplace_back("strict", strict ? "true" : "false");

  if (kind == ExperimentKind::Expand) {
    std::string spans;
    for (const auto& s : intervals) {
      if (!spans.empty()) spans += ',';
      spans += real_text(s.a) + ":" + real_text(s.b);
    }
    e.emplace_back("fn", join(functions));
    e.emplace_back("interval", spans);
    e.emplace_back("n", join(n_values));
    e.emplace_back("method", method_names[static_cast<int>(method)]);
  } else if (kind == ExperimentKind::Interp) {
    e.emplace_back("fn", join(functions));
    e.emplace_back("cells", join(cells));
    e.emplace_back("n", join(n_values));
    e.emplace_back("quad_points", std::to_string(quad_points));
  } else {
    e.emplace_back("scheme", scheme_names[static_cast<int>(scheme)]);
    e.emplace_back("J", join(J_values));
    if (!ks.empty()) {
      e.emplace_back("k", join(ks));
    } else {
      e.emplace_back("lambda", join(lambdas));
    }
    e.emplace_back("T", real_text(T));
    e.emplace_back("study", study_names[static_cast<int>(study)]);
  }
  return e;
}

}  // namespace sharpbound
