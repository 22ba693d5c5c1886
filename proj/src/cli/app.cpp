#include <CLI11.hpp>
#include <ostream>
#include <sstream>

#include "zetakit/cli.hpp"

namespace zetakit::cli {

namespace {

/// "SL2 closed s=5" given as one argument is split into words; JSON specs are left whole.
std::vector<std::string> split_words(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const std::string& a : args) {
    if (!a.empty() && (a.front() == '[' || a.front() == '{')) {
      out.push_back(a);
      continue;
    }
    std::istringstream in(a);
    std::string w;
    while (in >> w) out.push_back(w);
  }
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeta functions of curves, explicit formulas, absolute and categorical zeta functions.", "zetakit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key = value file; command-line flags take precedence");
  app.allow_config_extras(false);

  RunConfig cfg;
  std::string zeros_path;
  std::string format = "table";
  app.add_option("--zeros", zeros_path, "zero table (default: $ABSZETA_ZEROS, then the bundled table)");
  app.add_option("--T", cfg.truncation_T, "truncation height for sums over zeros")->capture_default_str();
  app.add_option("--tol", cfg.quadrature_target, "quadrature error target")->capture_default_str();
  app.add_option("--format", format, "json, csv or table")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--threads", cfg.threads, "OpenMP threads, 0 for the runtime default")->capture_default_str();

  auto* curve = app.add_subcommand("curve-zeta", "zeta function of a plane curve over F_q and the Weil checks");
  std::string curve_text;
  std::optional<int> genus;
  std::optional<int> max_m;
  curve->add_option("curve", curve_text, "e.g. \"y^2*z - x^3 - x*z^2 mod 3\"")->required();
  curve->add_option("--genus", genus, "defaults to (d-1)(d-2)/2");
  curve->add_option("--max-m", max_m, "largest extension degree counted, default 2g+1");

  auto* explicit_cmd = app.add_subcommand("explicit-formula", "explicit formula and fundamental inequality");
  ExplicitFormulaArgs ef;
  std::string ef_curve;
  explicit_cmd->add_option("f", ef.f_spec, "{\"n\": value} with --curve, else a catalog test function");
  explicit_cmd->add_option("--curve", ef_curve, "function-field setting over F_p");
  explicit_cmd->add_option("--genus", ef.genus, "defaults to (d-1)(d-2)/2");
  explicit_cmd->add_option("--random", ef.random, "also check this many random f on [-3, 3]")
      ->check(CLI::NonNegativeNumber);

  auto* abs = app.add_subcommand("abszeta", "absolute zeta functions and the counting distribution");
  // The words are taken as extras: a vector option would split a bracketed JSON spec into a list.
  abs->allow_extras();
  abs->footer("Arguments: [SPEC] ACTION [key=value ...]");
  app.allow_extras();

  auto* zeros_cmd = app.add_subcommand("zeros", "zero table verification");
  std::string zeros_action;
  std::optional<std::string> zeros_file;
  double verify_tol = 1e-6;
  zeros_cmd->add_option("action", zeros_action, "verify or info")->required()->check(CLI::IsMember({"verify", "info"}));
  zeros_cmd->add_option("path", zeros_file, "table to read instead of the configured one");
  zeros_cmd->add_option("--verify-tol", verify_tol, "bound on |zeta^c| at each ordinate")->capture_default_str();

  auto* cat = app.add_subcommand("category-zeta", "truncated Euler product over finite simple objects");
  CategoryZetaArgs ca;
  std::optional<std::string> cat_csv;
  cat->add_option("--csv", cat_csv, "norm,count file; finite abelian groups when omitted");
  cat->add_option("--s", ca.s_real, "real part of s")->capture_default_str();
  cat->add_option("--s-imag", ca.s_imag, "imaginary part of s")->capture_default_str();
  cat->add_option("--bound", ca.bound, "largest norm included")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  std::vector<std::string> extras = app.remaining();
  if (!*abs && !extras.empty()) {
    err << "The following arguments were not expected:";
    for (const std::string& e : extras) err << ' ' << e;
    err << '\n';
    return 2;
  }

  try {
    if (!zeros_path.empty()) cfg.zero_table_path = zeros_path;
    cfg.format = parse_output_format(format);
    cfg.validate();

    Report report;
    if (*curve) {
      report = cmd_curve_zeta(curve_text, genus, max_m, cfg);
    } else if (*explicit_cmd) {
      if (!ef_curve.empty()) ef.curve = ef_curve;
      report = cmd_explicit_formula(ef, cfg);
    } else if (*abs) {
      report = cmd_abszeta(split_words(extras), cfg);
    } else if (*zeros_cmd) {
      report = cmd_zeros(zeros_action, zeros_file, verify_tol, cfg);
    } else {
      ca.csv_path = cat_csv;
      report = cmd_category_zeta(ca, cfg);
    }
    write_report(report, cfg, out);
    return report.passed() ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace zetakit::cli
