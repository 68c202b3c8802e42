#include "sharpbound/error.hpp"
#include "sharpbound/harness.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace sharpbound {

namespace {

std::string real_csv(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string quote_csv(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

struct CsvCell {
  std::string operator()(std::monostate) const { return {}; }
  std::string operator()(bool b) const { return b ? "true" : "false"; }
  std::string operator()(std::int64_t i) const { return std::to_string(i); }
  std::string operator()(double d) const { return real_csv(d); }
  std::string operator()(const std::string& s) const { return quote_csv(s); }
};

struct JsonCell {
  nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
  nlohmann::ordered_json operator()(bool b) const { return b; }
  nlohmann::ordered_json operator()(std::int64_t i) const { return i; }
  nlohmann::ordered_json operator()(double d) const {
    if (!std::isfinite(d)) return nullptr;
    return d;
  }
  nlohmann::ordered_json operator()(const std::string& s) const { return s; }
};

void emit_csv(const SweepResult& result, std::ostream& os) {
  for (std::size_t c = 0; c < result.columns.size(); ++c)
    os << (c ? "," : "") << quote_csv(result.columns[c]);
  os << '\n';
  for (const auto& row : result.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << std::visit(CsvCell{}, row[c]);
    os << '\n';
  }
}

void emit_json(const SweepResult& result, std::ostream& os) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = result.schema_version;
  auto& params = doc["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : result.parameters) params[key] = value;
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : result.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[result.columns[c]] = std::visit(JsonCell{}, row[c]);
    rows.push_back(std::move(obj));
  }
  os << doc.dump(2) << '\n';
}

}  // namespace

void emit(const SweepResult& result, OutputFormat format, std::ostream& os) {
  if (format == OutputFormat::Csv) {
    emit_csv(result, os);
  } else {
    emit_json(result, os);
  }
}

void emit(const SweepResult& result, OutputFormat format, const std::string& path) {
  if (path == "-") {
    emit(result, format, std::cout);
    std::cout.flush();
    if (!std::cout) throw Error(ErrorCode::Io, "failed writing to standard output");
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::Io, "cannot open output file: " + path);
  emit(result, format, file);
  file.close();
  if (!file) throw Error(ErrorCode::Io, "failed writing output file: " + path);
}

std::string gnuplot_script(const SweepResult& result, const std::string& data_path) {
  const auto col = [&](const std::string& name) { return std::to_string(result.column(name) + 1); };
  std::ostringstream gp;
  gp << "# gnuplot script for " << data_path << " (" << result.schema_version << ")\n"
     << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set logscale xy\n"
     << "set grid\n";
  if (result.schema_version.rfind("expand", 0) == 0) {
    gp << "set xlabel 'n'\nset ylabel 'remainder'\n"
       << "plot '" << data_path << "' using " << col("n") << ":(abs($" << col("epsilon")
       << ")) with points title '|epsilon|', \\\n"
       << "     '' using " << col("n") << ":" << col("epsilon_bound")
       << " with linespoints title 'epsilon bound'\n";
  } else if (result.schema_version.rfind("interp", 0) == 0) {
    gp << "set xlabel 'h'\nset ylabel 'W11 error'\n"
       << "plot '" << data_path << "' using " << col("h") << ":" << col("w11_error")
       << " with linespoints title 'measured', \\\n"
       << "     '' using " << col("h") << ":" << col("taylor_like_bound")
       << " with linespoints title 'taylor-like bound', \\\n"
       << "     '' using " << col("h") << ":" << col("classical_bound")
       << " with linespoints title 'classical bound'\n";
  } else {
    gp << "set xlabel 'h'\nset ylabel 'max-norm error at T'\n"
       << "plot '" << data_path << "' using " << col("h") << ":" << col("error_max")
       << " with linespoints title 'error'\n";
  }
  return gp.str();
}

}  // namespace sharpbound
