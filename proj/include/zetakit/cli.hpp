#pragma once

#include <cstdint>
#include <exception>
#include <iosfwd>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace zetakit::cli {

enum class OutputFormat { json, csv, table };

OutputFormat parse_output_format(const std::string& text);
std::string to_string(OutputFormat f);

/// Settings shared by every command; flags override the config file.
struct RunConfig {
  std::optional<std::string> zero_table_path;
  double quadrature_target = 1e-10;
  double truncation_T = 100.0;
  OutputFormat format = OutputFormat::table;
  std::uint64_t seed = 20240611;
  int threads = 0;

  /// Throws DomainError unless quadrature_target is in [1e-14, 1e-4] and truncation_T > 0.
  void validate() const;
  /// --zeros, then $ABSZETA_ZEROS, then the bundled table.
  std::string resolved_zero_table_path() const;
};

struct Check {
  std::string name;
  bool passed = true;
  double value = 0.0;
  double tolerance = 0.0;
};

/// Output of one command. `rows` is the tabular view used by csv and table output.
struct Report {
  std::string command;
  /// Plain-language name of the identity or property being checked.
  std::string identity;
  nlohmann::ordered_json result = nlohmann::ordered_json::object();
  std::vector<Check> checks;
  std::vector<std::string> warnings;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  /// Emit only the two-column rows as CSV, whatever the format.
  bool plot_data = false;

  bool passed() const;
  nlohmann::ordered_json to_json(const RunConfig& cfg) const;
};

/// RFC 4180 field quoting.
std::string csv_field(const std::string& text);
/// Shortest text that reads back to the same double.
std::string format_double(double x);

void write_report(const Report& report, const RunConfig& cfg, std::ostream& out);

/// 2 for input errors, 3 for budget errors, 1 for everything else.
int exit_code_for(const std::exception& e);

Report cmd_curve_zeta(const std::string& curve_text, std::optional<int> genus, std::optional<int> max_m,
                      const RunConfig& cfg);

struct ExplicitFormulaArgs {
  /// JSON {"n": value} in the function-field case, a catalog test function otherwise.
  std::string f_spec;
  /// Function-field target; characteristic 0 when absent.
  std::optional<std::string> curve;
  std::optional<int> genus;
  /// Extra random f with support in [-3, 3] (function field only).
  int random = 0;
};
Report cmd_explicit_formula(const ExplicitFormulaArgs& args, const RunConfig& cfg);

/// Positional words: [SPEC] ACTION [key=value ...]. Actions: closed, integral, limit,
/// lemma, cc-constant, cc-check, cc-counting, plot-data.
Report cmd_abszeta(const std::vector<std::string>& words, const RunConfig& cfg);

/// action is "verify" or "info"; `path` overrides the configured table.
Report cmd_zeros(const std::string& action, const std::optional<std::string>& path, double verify_tol,
                 const RunConfig& cfg);

struct CategoryZetaArgs {
  /// "norm,count" file; finite abelian groups when absent.
  std::optional<std::string> csv_path;
  double s_real = 2.0;
  double s_imag = 0.0;
  std::uint64_t bound = 10000;
};
Report cmd_category_zeta(const CategoryZetaArgs& args, const RunConfig& cfg);

/// Parses argv, runs one command and writes its report. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zetakit::cli
