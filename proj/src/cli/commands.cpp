#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <set>

#include "zetakit/abszeta.hpp"
#include "zetakit/catzeta.hpp"
#include "zetakit/cli.hpp"
#include "zetakit/curve_zeta.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/explicit0.hpp"
#include "zetakit/fqcurve.hpp"
#include "zetakit/frobdiv.hpp"
#include "zetakit/specfun.hpp"
#include "zetakit/zeros.hpp"

namespace zetakit::cli {

namespace {

nlohmann::ordered_json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::string complex_text(Complex z) {
  if (z.imag() == 0.0) return format_double(z.real());
  return format_double(z.real()) + (z.imag() < 0 ? " - " : " + ") + format_double(std::abs(z.imag())) + "i";
}

Check check_le(std::string name, double value, double tol) { return {std::move(name), value <= tol, value, tol}; }
Check check_ge(std::string name, double value, double floor) { return {std::move(name), value >= floor, value, floor}; }

zeros::ZeroTable load_table(const RunConfig& cfg) {
  const std::string path = cfg.resolved_zero_table_path();
  return zeros::load_zero_table(path);
}

}  // namespace

Report cmd_curve_zeta(const std::string& curve_text, std::optional<int> genus, std::optional<int> max_m,
                      const RunConfig& cfg) {
  const fqcurve::PlaneCurve curve = fqcurve::parse_curve(curve_text);
  const int g = genus.value_or(curve.plane_genus());
  if (g < 0) throw DomainError("genus must be nonnegative");
  const int m = max_m.value_or(std::max(2 * g, 1) + 1);
  if (m < 1) throw DomainError("max_m must be at least 1");

  Report r;
  r.command = "curve-zeta";
  r.identity = "zeta function of a curve over a finite field: rationality, functional equation, Riemann hypothesis";
  r.result["curve"] = curve.to_string();
  r.result["q"] = curve.q();
  r.result["genus"] = g;
  r.result["max_m"] = m;

  fqcurve::PointCounts counts;
  try {
    counts = fqcurve::count_points_range(curve, m, {cfg.threads, true});
  } catch (const SingularCurveError& e) {
    r.checks.push_back({"curve is smooth over the enumerated fields", false, 0.0, 0.0});
    r.warnings.push_back(e.what());
    return r;
  }
  r.checks.push_back({"curve is smooth over the enumerated fields", true, 1.0, 1.0});
  r.result["counts"] = counts.counts;

  fqcurve::CurveZetaData z;
  try {
    z = fqcurve::zeta_from_counts(counts, g);
  } catch (const NonIntegralError& e) {
    r.checks.push_back({"numerator coefficients are integers", false, 0.0, 0.0});
    r.warnings.push_back(e.what());
    return r;
  } catch (const InconsistentCountsError& e) {
    r.checks.push_back({"counts beyond N_2g match the numerator", false, 0.0, 0.0});
    r.warnings.push_back(e.what());
    return r;
  }
  r.checks.push_back({"numerator coefficients are integers", true, 1.0, 1.0});
  r.result["P1_coefficients"] = z.numerator_coeffs;
  nlohmann::ordered_json alphas = nlohmann::ordered_json::array();
  for (const Complex& a : z.alphas) alphas.push_back(complex_json(a));
  r.result["alphas"] = alphas;

  const fqcurve::RhReport rh = fqcurve::weil_rh_check(z, 1e-10);
  r.result["alpha_moduli"] = rh.moduli;
  r.result["sqrt_q"] = std::sqrt(static_cast<double>(z.q));
  r.checks.push_back(check_le("Riemann hypothesis: max | |alpha| - sqrt q |", rh.max_deviation, 1e-10));

  const std::vector<Complex> samples{Complex(0.11, 0.07), Complex(-0.3, 0.2), Complex(0.05, -0.4), Complex(0.21, 0.0)};
  const fqcurve::FunctionalEquationReport fe = fqcurve::functional_equation_check(z, samples, 1e-9);
  r.result["functional_equation_sign"] = fe.epsilon;
  r.checks.push_back(check_le("functional equation residual", fe.max_residual, 1e-9));

  double lefschetz_dev = 0.0;
  const fqcurve::AsymptoticReport as = fqcurve::asymptotic_check(z, counts);
  r.columns = {"m", "N_m", "lefschetz", "q^m+1", "|N_m-q^m-1|", "2g q^(m/2)"};
  for (int n = 1; n <= m; ++n) {
    const double lf = fqcurve::lefschetz_count(z, n);
    const double N = static_cast<double>(counts.counts[n - 1]);
    lefschetz_dev = std::max(lefschetz_dev, std::abs(lf - N));
    r.rows.push_back({std::to_string(n), std::to_string(counts.counts[n - 1]), format_double(lf),
                      format_double(std::pow(static_cast<double>(z.q), n) + 1.0), format_double(as.deviations[n - 1]),
                      format_double(as.bounds[n - 1])});
  }
  r.checks.push_back(check_le("Lefschetz trace formula: max |1 - sum alpha^m + q^m - N_m|", lefschetz_dev, 1e-6));
  double excess = 0.0;
  for (std::size_t i = 0; i < as.deviations.size(); ++i) excess = std::max(excess, as.deviations[i] - as.bounds[i]);
  r.checks.push_back(check_le("point counts: max (|N_m - q^m - 1| - 2g q^(m/2))", excess, 1e-9));
  return r;
}

namespace {

std::string rational_text(const frobdiv::Rational& x) { return x.str(); }

frobdiv::FiniteSupportFn random_fn(std::mt19937_64& rng, std::uint32_t p) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::map<int, frobdiv::Rational> values;
  for (int n = -3; n <= 3; ++n) values[n] = frobdiv::Rational(num(rng), den(rng));
  return frobdiv::FiniteSupportFn(p, values);
}

Report explicit_function_field(const ExplicitFormulaArgs& args, const RunConfig& cfg) {
  const fqcurve::PlaneCurve curve = fqcurve::parse_curve(*args.curve);
  if (curve.field().degree() != 1) throw DomainError("the function-field explicit formula needs q prime");
  const auto p = static_cast<std::uint32_t>(curve.q());
  const int g = args.genus.value_or(curve.plane_genus());

  std::optional<frobdiv::FiniteSupportFn> f;
  if (!args.f_spec.empty()) f = frobdiv::parse_finite_support_fn(p, args.f_spec);
  if (!f && args.random == 0) throw ParseError("no test function given");
  const int radius = std::max(f ? f->radius() : 0, args.random > 0 ? 3 : 0);
  const int m = std::max({2 * g, radius, 1});
  const fqcurve::PointCounts counts = fqcurve::count_points_range(curve, m, {cfg.threads, true});
  const fqcurve::CurveZetaData z = fqcurve::zeta_from_counts(counts, g);
  const frobdiv::CurveSpectrum spec = frobdiv::spectrum_from(z);

  Report r;
  r.command = "explicit-formula";
  r.identity = "explicit formula on p^Z: <f^(A), Diag> = f^(0) + f^(1) - sum over zeros, and the fundamental inequality";
  r.result["setting"] = "function field";
  r.result["curve"] = curve.to_string();
  r.result["p"] = p;
  r.result["genus"] = g;
  r.result["counts"] = counts.counts;

  if (f) {
    const frobdiv::Rational geo = frobdiv::diag_pairing_geometric(*f, counts, g);
    const Complex spectral = frobdiv::diag_pairing_spectral_value(*f, spec);
    const double residual = std::abs(static_cast<double>(geo) - spectral.real());
    r.result["geometric"] = static_cast<double>(geo);
    r.result["geometric_exact"] = rational_text(geo);
    r.result["spectral"] = spectral.real();
    r.result["spectral_imag"] = spectral.imag();
    r.result["residual"] = residual;
    r.checks.push_back(check_le("explicit formula |geometric - spectral|", residual, 1e-9));
    const frobdiv::FundamentalInequalityReport fi = frobdiv::fundamental_inequality_check(*f, spec);
    r.result["inequality_lhs"] = fi.lhs;
    r.result["inequality_rhs"] = fi.rhs;
    r.result["slack"] = fi.slack;
    r.result["Q"] = fi.q_form;
    r.checks.push_back(check_ge("fundamental inequality slack", fi.slack, -1e-9));
    r.checks.push_back(check_ge("Q(f) = sum f^(s_i) f^(1 - s_i)", fi.q_form, -1e-9));
    r.checks.push_back(check_le("|2 slack - Q(f)|", fi.identity_residual, 1e-9));
  }
  if (args.random > 0) {
    std::mt19937_64 rng(cfg.seed);
    double worst_residual = 0.0;
    double min_slack = INFINITY;
    double min_q = INFINITY;
    for (int i = 0; i < args.random; ++i) {
      const frobdiv::FiniteSupportFn h = random_fn(rng, p);
      const double geo = static_cast<double>(frobdiv::diag_pairing_geometric(h, counts, g));
      worst_residual = std::max(worst_residual, std::abs(geo - frobdiv::diag_pairing_spectral(h, spec)));
      const frobdiv::FundamentalInequalityReport fi = frobdiv::fundamental_inequality_check(h, spec);
      min_slack = std::min(min_slack, fi.slack);
      min_q = std::min(min_q, fi.q_form);
    }
    r.result["random_functions"] = args.random;
    r.result["seed"] = cfg.seed;
    r.checks.push_back(check_le("random f: max |geometric - spectral|", worst_residual, 1e-9));
    r.checks.push_back(check_ge("random f: min slack", min_slack, -1e-9));
    r.checks.push_back(check_ge("random f: min Q(f)", min_q, -1e-9));
  }
  return r;
}

Report explicit_char0(const ExplicitFormulaArgs& args, const RunConfig& cfg) {
  const explicit0::TestFunction f = explicit0::parse_test_function(args.f_spec);
  const zeros::ZeroTable table = load_table(cfg);
  const double T = cfg.truncation_T;
  const explicit0::WeilValue w = explicit0::weil_functional(f, table, T, cfg.threads, cfg.quadrature_target);
  const explicit0::ContourValue c = explicit0::weil_contour_oracle(f, T, cfg.threads, cfg.quadrature_target);
  const explicit0::FundamentalInequality0Report fi =
      explicit0::fundamental_inequality0(f, table, T, cfg.threads, cfg.quadrature_target);

  Report r;
  r.command = "explicit-formula";
  r.identity = "explicit formula on R+: W(f) = f^(0) + f^(1) - sum over zeta^c zeros, against the contour integral";
  r.result["setting"] = "characteristic 0";
  r.result["test_function"] = f.label();
  r.result["smoothness"] = explicit0::to_string(f.smoothness());
  r.result["T"] = T;
  r.result["zeros_used"] = w.zeros_used;
  r.result["pole_terms"] = w.pole_terms;
  r.result["zero_sum"] = w.zero_sum;
  r.result["W_zero_sum"] = w.value;
  r.result["W_contour"] = c.value;
  r.result["contour_error_estimate"] = c.error_estimate;
  r.result["tail_bound"] = w.tail_bound;
  r.result["residual"] = std::abs(w.value - c.value);
  r.result["Q_T"] = fi.q_form;
  r.result["inequality_lhs"] = fi.lhs;
  r.result["W_T_conv"] = fi.w_conv;
  r.result["slack"] = fi.slack;
  r.checks.push_back(check_le("|W_zero-sum - W_contour|", std::abs(w.value - c.value), 1e-4));
  r.checks.push_back(check_ge("Q_T(f) >= 0", fi.q_form, -1e-10));
  r.checks.push_back(check_le("|2 slack - Q_T(f)|", fi.identity_residual, 1e-5));
  if (w.table_truncated) {
    r.warnings.push_back("T = " + format_double(T) + " exceeds the last table ordinate " +
                         format_double(table.max_ordinate()) + "; zeros in between are missing");
  }
  return r;
}

}  // namespace

Report cmd_explicit_formula(const ExplicitFormulaArgs& args, const RunConfig& cfg) {
  if (args.curve) return explicit_function_field(args, cfg);
  if (args.random > 0) throw DomainError("--random needs --curve");
  if (args.f_spec.empty()) throw ParseError("no test function given");
  return explicit_char0(args, cfg);
}

namespace {

const std::set<std::string>& abszeta_actions() {
  static const std::set<std::string> a{"closed", "integral", "limit", "lemma", "cc-constant", "cc-check",
                                       "cc-counting", "plot-data"};
  return a;
}

class Params {
 public:
  explicit Params(const std::vector<std::string>& words) {
    for (const std::string& w : words) {
      const auto eq = w.find('=');
      if (eq == std::string::npos || eq == 0) throw ParseError("expected key=value, got '" + w + "'");
      values_[w.substr(0, eq)] = w.substr(eq + 1);
    }
  }

  double real(const std::string& key, double fallback) {
    used_.insert(key);
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    return parse_real(key, it->second);
  }
  bool has(const std::string& key) const { return values_.count(key) > 0; }
  std::size_t count(const std::string& key, std::size_t fallback) {
    const double v = real(key, static_cast<double>(fallback));
    if (v < 0 || v != std::floor(v)) throw ParseError("'" + key + "' must be a nonnegative integer");
    return static_cast<std::size_t>(v);
  }
  std::vector<double> list(const std::string& key, std::vector<double> fallback) {
    used_.insert(key);
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    std::vector<double> out;
    std::size_t start = 0;
    const std::string& text = it->second;
    while (start <= text.size()) {
      const auto comma = text.find(',', start);
      const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      out.push_back(parse_real(key, item));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return out;
  }
  /// Rejects parameters the action never looked at.
  void finish() const {
    for (const auto& [k, v] : values_) {
      if (!used_.count(k)) throw ParseError("unknown parameter '" + k + "' for this action");
    }
  }

 private:
  static double parse_real(const std::string& key, const std::string& text) {
    try {
      std::size_t used = 0;
      const double v = std::stod(text, &used);
      if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError("value of '" + key + "' is not a number: '" + text + "'");
  }

  std::map<std::string, std::string> values_;
  std::set<std::string> used_;
};

}  // namespace

Report cmd_abszeta(const std::vector<std::string>& words, const RunConfig& cfg) {
  if (words.empty()) throw ParseError("abszeta needs an action");
  std::optional<abszeta::ExponentSum> N;
  std::string spec_text;
  std::size_t next = 0;
  if (!abszeta_actions().count(words[0])) {
    spec_text = words[0];
    N = abszeta::exponent_sum_from_spec(spec_text);
    next = 1;
  }
  if (next >= words.size() || !abszeta_actions().count(words[next])) {
    throw ParseError("expected an action (closed, integral, limit, lemma, cc-constant, cc-check, cc-counting, "
                     "plot-data)");
  }
  const std::string action = words[next];
  Params params(std::vector<std::string>(words.begin() + static_cast<std::ptrdiff_t>(next) + 1, words.end()));
  auto need_N = [&]() -> const abszeta::ExponentSum& {
    if (!N) throw ParseError("action '" + action + "' needs a counting function (catalog name or JSON)");
    return *N;
  };

  Report r;
  r.command = "abszeta " + action;
  if (N) r.result["N"] = N->to_string();
  if (N) r.result["chi"] = N->chi();

  if (action == "closed") {
    const abszeta::ExponentSum& n = need_N();
    const Complex s(params.real("s", 0.0), params.real("s_imag", 0.0));
    if (!params.has("s")) throw ParseError("closed needs s=");
    const Complex w(params.real("w", 1.0), 0.0);
    params.finish();
    r.identity = "absolute zeta: zeta_N(s) = prod (s - alpha)^-m, Z_N(w; s) = sum m (s - alpha)^-w, "
                 "zeta_N = exp(dZ/dw at w = 0)";
    const Complex zeta = abszeta::zetaN_closed(n, s);
    const Complex Z = abszeta::zN_closed(n, w, s);
    const Complex via = abszeta::zetaN_via_wderiv(n, s);
    const abszeta::LogDerivReport ld = abszeta::log_deriv_relation_check(n, s);
    if (s.imag() == 0.0) {
      r.result["zeta"] = zeta.real();
      r.result["Z"] = Z.real();
      r.result["zeta_via_w_derivative"] = via.real();
    } else {
      r.result["zeta"] = complex_json(zeta);
      r.result["Z"] = complex_json(Z);
      r.result["zeta_via_w_derivative"] = complex_json(via);
    }
    r.result["w"] = w.real();
    r.result["Z_at_w1"] = complex_text(ld.z_at_one);
    r.checks.push_back(check_le("|exp(dZ/dw) - zeta_N| / max(1, |zeta_N|)",
                                std::abs(via - zeta) / std::max(1.0, std::abs(zeta)), 1e-6));
    r.checks.push_back(check_le("|Z_N(1; s) + zeta_N'/zeta_N|", ld.residual, 1e-8));
  } else if (action == "integral") {
    const abszeta::ExponentSum& n = need_N();
    const double w = params.real("w", 0.5);
    const double s = params.real("s", n.empty() ? 1.0 : n.max_alpha() + 1.0);
    params.finish();
    r.identity = "absolute Hurwitz zeta: (1/Gamma(w)) int_1^inf N(u) u^-s (log u)^(w-1) du/u against the closed form";
    const double integral = abszeta::zN_integral_oracle(n, w, s);
    const double closed = abszeta::zN_closed(n, w, s).real();
    const double rel = std::abs(integral - closed) / std::max(std::abs(closed), 1e-300);
    r.result["w"] = w;
    r.result["s"] = s;
    r.result["integral"] = integral;
    r.result["closed"] = closed;
    r.result["relative_error"] = rel;
    r.checks.push_back(check_le("relative error", closed == 0.0 ? std::abs(integral) : rel, 1e-6));
  } else if (action == "limit") {
    const abszeta::ExponentSum& n = need_N();
    if (!params.has("s")) throw ParseError("limit needs s=");
    const double s = params.real("s", 0.0);
    const std::vector<double> xs = params.list("x", {1.1, 1.01, 1.001});
    params.finish();
    r.identity = "F1 limit: zeta_N(s) = lim_{x -> 1} Z(x, x^-s) (x - 1)^chi";
    const abszeta::GeneratingLimitReport g = abszeta::generating_limit(n, s, xs);
    r.result["s"] = s;
    r.result["target"] = g.target;
    r.result["values"] = g.values;
    r.result["errors"] = g.errors;
    r.columns = {"x", "value", "error", "series_terms"};
    for (std::size_t i = 0; i < g.x.size(); ++i) {
      r.rows.push_back({format_double(g.x[i]), format_double(g.values[i]), format_double(g.errors[i]),
                        std::to_string(g.series_terms[i])});
    }
    r.checks.push_back({"errors shrink linearly in x - 1", g.passed, g.errors.empty() ? 0.0 : g.errors.back(), 0.0});
  } else if (action == "lemma") {
    const abszeta::ExponentSum& n = need_N();
    const double s = params.real("s", n.empty() ? 1.0 : n.max_alpha() + 1.0);
    params.finish();
    r.identity = "integral lemma: lim_{x -> 1} F(x, s) = zeta_N'/zeta_N(s) = -int_1^inf N(u) u^-s du/u";
    const abszeta::IntegralLemmaReport l = abszeta::integral_lemma_check(n, s);
    r.result["s"] = s;
    r.result["limit_F"] = l.limit_F;
    r.result["integral"] = l.integral;
    r.result["log_derivative"] = l.log_derivative;
    r.checks.push_back(check_le("three-way residual", l.residual, 1e-6));
  } else if (action == "cc-constant") {
    const zeros::ZeroTable table = load_table(cfg);
    const std::size_t K = params.count("K", std::min<std::size_t>(100, table.size()));
    params.finish();
    r.identity = "value at u = 1: sum over zeros of 1/(rho + 1) = 1/2 + gamma/2 + log(4 pi)/2 - zeta'(-1)/zeta(-1)";
    const abszeta::CcConstantReport c = abszeta::cc_value_at_one(table, K);
    r.result["K"] = K;
    r.result["partial"] = c.partial;
    r.result["tail_bound"] = c.tail_bound;
    r.result["bracket_low"] = c.partial;
    r.result["bracket_high"] = c.partial + c.tail_bound;
    r.result["constant"] = c.constant;
    r.checks.push_back({"partial <= constant <= partial + tail bound", c.brackets, c.constant, c.partial + c.tail_bound});
  } else if (action == "cc-check" || action == "cc-counting") {
    const zeros::ZeroTable table = load_table(cfg);
    abszeta::CountingDistribution dist{&table, params.count("K", std::min<std::size_t>(100, table.size())),
                                       params.real("lambda", action == "cc-check" ? 0.01 : 0.05)};
    r.result["K"] = dist.K;
    r.result["lambda"] = dist.lambda;
    if (action == "cc-check") {
      const double s = params.real("s", 2.0);
      const double U = params.real("U", 1e3);
      const double tol = params.real("tol", 0.05);
      params.finish();
      r.identity = "counting distribution: zeta_Q'/zeta_Q(s) = -int_1^inf N(u) u^-s du/u (smoothed, truncated)";
      const abszeta::CcIntegralReport c = abszeta::cc_integral_check(dist, s, U, tol);
      r.result["s"] = s;
      r.result["U"] = U;
      r.result["value"] = c.value;
      r.result["target"] = c.target;
      r.result["deviation"] = c.deviation;
      r.result["bias_bound"] = c.bias_bound;
      r.checks.push_back(check_le("deviation", c.deviation, tol));
    } else {
      const double u = params.real("u", 2.0);
      params.finish();
      r.identity = "counting distribution N(u) = u + 1 - sum over zeros of u^rho (smoothed, truncated)";
      const double v = abszeta::cc_counting(dist, u);
      r.result["u"] = u;
      r.result["N"] = v;
      r.checks.push_back(check_ge("smoothed N(u) is positive", v, 0.0));
    }
  } else {
    // plot-data: two-column CSV, zeta_N(s) over s when N is given, else the smoothed counting distribution.
    const double from = params.real("from", N ? (N->empty() ? 1.0 : N->max_alpha() + 0.5) : 1.5);
    const double to = params.real("to", from + 10.0);
    const std::size_t n = params.count("n", 101);
    if (n < 2 || !(to > from)) throw ParseError("plot-data needs n >= 2 and to > from");
    r.plot_data = true;
    r.identity = "plot data";
    if (N) {
      params.finish();
      r.columns = {"s", "zeta_N"};
      for (std::size_t i = 0; i < n; ++i) {
        const double s = from + (to - from) * static_cast<double>(i) / static_cast<double>(n - 1);
        r.rows.push_back({format_double(s), format_double(abszeta::zetaN_closed(*N, s).real())});
      }
    } else {
      const zeros::ZeroTable table = load_table(cfg);
      abszeta::CountingDistribution dist{&table, params.count("K", std::min<std::size_t>(100, table.size())),
                                         params.real("lambda", 0.05)};
      params.finish();
      r.columns = {"u", "N"};
      for (std::size_t i = 0; i < n; ++i) {
        const double u = from + (to - from) * static_cast<double>(i) / static_cast<double>(n - 1);
        r.rows.push_back({format_double(u), format_double(abszeta::cc_counting(dist, u))});
      }
    }
  }
  return r;
}

Report cmd_zeros(const std::string& action, const std::optional<std::string>& path, double verify_tol,
                 const RunConfig& cfg) {
  const std::string file = path ? *path : cfg.resolved_zero_table_path();
  const zeros::ZeroTable table = zeros::load_zero_table(file);
  Report r;
  r.command = "zeros " + action;
  r.result["path"] = file;
  r.result["count"] = table.size();
  if (action == "info") {
    r.identity = "zero table summary";
    r.result["first"] = table.empty() ? 0.0 : table.ordinates.front();
    r.result["last"] = table.max_ordinate();
    std::size_t with_mult = 0;
    for (int m : table.multiplicities) with_mult += static_cast<std::size_t>(m);
    r.result["count_with_multiplicity"] = with_mult;
    return r;
  }
  if (action != "verify") throw ParseError("zeros action must be verify or info");
  r.identity = "zero table: zeta^c(1/2 + i gamma) vanishes and changes sign at each ordinate";
  r.result["tolerance"] = verify_tol;
  r.columns = {"line", "gamma", "|zeta^c|", "verified"};
  std::size_t failed = 0;
  for (std::size_t k = 0; k < table.size(); ++k) {
    const double g = table.ordinates[k];
    const bool ok = zeros::verify_zero(g, verify_tol);
    const std::size_t line = k < table.source_lines.size() ? table.source_lines[k] : k + 1;
    r.rows.push_back({std::to_string(line), format_double(g), format_double(std::abs(zeros::completed_zeta_on_line(g))),
                      ok ? "yes" : "no"});
    if (!ok) {
      ++failed;
      r.warnings.push_back("line " + std::to_string(line) + ": " + format_double(g) + " is not a zero");
    }
  }
  r.result["failed"] = failed;
  r.checks.push_back(check_le("ordinates failing verification", static_cast<double>(failed), 0.0));
  return r;
}

Report cmd_category_zeta(const CategoryZetaArgs& args, const RunConfig&) {
  const Complex s(args.s_real, args.s_imag);
  std::optional<catzeta::SimpleObjectSpec> spec;
  const bool abelian = !args.csv_path;
  if (abelian) {
    spec = catzeta::abelian_group_simples(args.bound < 2 ? 2 : args.bound);
  } else {
    std::ifstream in(*args.csv_path);
    if (!in) throw ParseError("cannot open '" + *args.csv_path + "'");
    spec = catzeta::parse_norm_csv(in, *args.csv_path);
  }
  const catzeta::CategoryZeta z = catzeta::category_zeta(*spec, s, args.bound);
  Report r;
  r.command = "category-zeta";
  r.identity = "zeta of a category: prod over finite simple objects of 1/(1 - N(P)^-s)";
  r.result["category"] = spec->name();
  r.result["s"] = complex_json(s);
  r.result["bound"] = args.bound;
  r.result["factors"] = z.factors;
  r.result["value"] = complex_json(z.value);
  r.result["log_value"] = complex_json(z.log_value);
  if (z.tail_log_bound) r.result["tail_log_bound"] = *z.tail_log_bound;
  if (abelian) {
    const auto ours = catzeta::euler_factors(*spec, s, args.bound);
    const auto ref = specfun::euler_product_factors(s, static_cast<std::uint32_t>(args.bound));
    const bool identical = ours == ref;
    r.checks.push_back({"factor list identical to the Euler product of zeta", identical, identical ? 1.0 : 0.0, 1.0});
    if (s.real() > 1.0 && z.tail_log_bound) {
      const Complex zeta = specfun::riemann_zeta(s);
      const double dev = std::abs(std::log(zeta) - z.log_value);
      r.result["riemann_zeta"] = complex_json(zeta);
      r.checks.push_back(check_le("|log zeta(s) - log product|", dev, *z.tail_log_bound + 1e-12));
    }
  }
  return r;
}

}  // namespace zetakit::cli
