#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

#include "zetakit/cli.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/zeros.hpp"

namespace zetakit::cli {

OutputFormat parse_output_format(const std::string& text) {
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  if (text == "table") return OutputFormat::table;
  throw ParseError("unknown output format '" + text + "' (json, csv or table)");
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json:
      return "json";
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::table:
      return "table";
  }
  return "table";
}

void RunConfig::validate() const {
  if (!(quadrature_target >= 1e-14 && quadrature_target <= 1e-4)) {
    throw DomainError("quadrature target must lie in [1e-14, 1e-4], got " + format_double(quadrature_target));
  }
  if (!(truncation_T > 0.0) || !std::isfinite(truncation_T)) {
    throw DomainError("truncation height T must be positive, got " + format_double(truncation_T));
  }
  if (threads < 0) throw DomainError("thread count must be >= 0");
}

std::string RunConfig::resolved_zero_table_path() const {
  if (zero_table_path) return *zero_table_path;
  return zeros::default_zero_table_path();
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

nlohmann::ordered_json Report::to_json(const RunConfig& cfg) const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["identity"] = identity;
  j["passed"] = passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : checks) {
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"value", c.value}, {"tolerance", c.tolerance}});
  }
  j["warnings"] = warnings;
  j["result"] = result;
  nlohmann::ordered_json config;
  config["zeros"] = cfg.resolved_zero_table_path();
  config["T"] = cfg.truncation_T;
  config["tol"] = cfg.quadrature_target;
  config["format"] = to_string(cfg.format);
  config["seed"] = cfg.seed;
  config["threads"] = cfg.threads;
  j["config"] = config;
  return j;
}

std::string csv_field(const std::string& text) {
  const bool quote = text.find_first_of(",\"\r\n") != std::string::npos ||
                     (!text.empty() && (text.front() == ' ' || text.back() == ' '));
  if (!quote) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

namespace {

std::string scalar_text(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_double(v.get<double>());
  return v.dump();
}

void write_csv(const std::vector<std::string>& columns, const std::vector<std::vector<std::string>>& rows,
               std::ostream& out) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << csv_field(cells[i]);
    }
    out << "\r\n";
  };
  line(columns);
  for (const auto& r : rows) line(r);
}

}  // namespace

void write_report(const Report& report, const RunConfig& cfg, std::ostream& out) {
  if (report.plot_data) {
    write_csv(report.columns, report.rows, out);
    return;
  }
  if (cfg.format == OutputFormat::json) {
    out << report.to_json(cfg).dump(2) << "\n";
    return;
  }
  if (cfg.format == OutputFormat::csv) {
    if (!report.rows.empty()) {
      write_csv(report.columns, report.rows, out);
      return;
    }
    std::vector<std::vector<std::string>> rows;
    for (const Check& c : report.checks) {
      rows.push_back({c.name, c.passed ? "true" : "false", format_double(c.value), format_double(c.tolerance)});
    }
    write_csv({"check", "passed", "value", "tolerance"}, rows, out);
    return;
  }

  out << report.command << ": " << report.identity << "\n";
  for (const auto& [key, value] : report.result.items()) out << "  " << key << " = " << scalar_text(value) << "\n";
  if (!report.rows.empty()) {
    std::vector<std::size_t> width(report.columns.size(), 0);
    for (std::size_t i = 0; i < report.columns.size(); ++i) width[i] = report.columns[i].size();
    for (const auto& r : report.rows) {
      for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      out << " ";
      for (std::size_t i = 0; i < cells.size(); ++i) {
        out << " " << cells[i];
        if (i + 1 < cells.size()) out << std::string(width[i] - std::min(width[i], cells[i].size()), ' ');
      }
      out << "\n";
    };
    out << "\n";
    line(report.columns);
    for (const auto& r : report.rows) line(r);
  }
  if (!report.checks.empty()) out << "\n";
  for (const Check& c : report.checks) {
    out << "  " << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  value " << format_double(c.value)
        << "  tolerance " << format_double(c.tolerance) << "\n";
  }
  for (const std::string& w : report.warnings) out << "  warning: " << w << "\n";
  out << (report.passed() ? "PASS" : "FAIL") << "\n";
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const BudgetError*>(&e)) return 3;
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const OrderError*>(&e) ||
      dynamic_cast<const DomainError*>(&e) || dynamic_cast<const PoleError*>(&e) ||
      dynamic_cast<const BranchError*>(&e) || dynamic_cast<const ConvergenceError*>(&e) ||
      dynamic_cast<const ContourError*>(&e) || dynamic_cast<const LengthError*>(&e) ||
      dynamic_cast<const PrimeMismatchError*>(&e)) {
    return 2;
  }
  return 1;
}

}  // namespace zetakit::cli
