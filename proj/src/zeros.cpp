#include "zetakit/zeros.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "zetakit/errors.hpp"
#include "zetakit/parallel.hpp"
#include "zetakit/quadrature.hpp"
#include "zetakit/specfun.hpp"

namespace zetakit::zeros {

std::size_t ZeroTable::count_up_to(double t) const {
  std::size_t n = 0;
  for (std::size_t k = 0; k < ordinates.size() && ordinates[k] <= t; ++k) {
    n += static_cast<std::size_t>(multiplicities[k]);
  }
  return n;
}

ZeroTable ZeroTable::first(std::size_t k) const {
  ZeroTable out;
  k = std::min(k, ordinates.size());
  out.ordinates.assign(ordinates.begin(), ordinates.begin() + static_cast<std::ptrdiff_t>(k));
  out.multiplicities.assign(multiplicities.begin(), multiplicities.begin() + static_cast<std::ptrdiff_t>(k));
  if (source_lines.size() >= k) {
    out.source_lines.assign(source_lines.begin(), source_lines.begin() + static_cast<std::ptrdiff_t>(k));
  }
  out.source_id = source_id;
  return out;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

ZeroTable parse_zero_table(std::istream& in, const std::string& source_id) {
  ZeroTable table;
  table.source_id = source_id;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::istringstream fields(line);
    std::string ord_text;
    std::string mult_text;
    std::string extra;
    fields >> ord_text >> mult_text >> extra;
    if (!extra.empty()) throw ParseError("expected at most two columns", line_no);

    errno = 0;
    char* end = nullptr;
    const double gamma = std::strtod(ord_text.c_str(), &end);
    if (end == ord_text.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(gamma)) {
      throw ParseError("malformed ordinate '" + ord_text + "'", line_no);
    }
    if (!(gamma > 0.0)) throw ParseError("ordinate must be positive", line_no);

    long mult = 1;
    if (!mult_text.empty()) {
      mult = std::strtol(mult_text.c_str(), &end, 10);
      if (end == mult_text.c_str() || *end != '\0' || mult < 1 || mult > 1000000) {
        throw ParseError("malformed multiplicity '" + mult_text + "'", line_no);
      }
    }
    if (!table.ordinates.empty() && !(gamma > table.ordinates.back())) {
      throw OrderError("ordinates must be strictly increasing", line_no);
    }
    table.ordinates.push_back(gamma);
    table.multiplicities.push_back(static_cast<int>(mult));
    table.source_lines.push_back(line_no);
  }
  return table;
}

ZeroTable load_zero_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open zero table '" + path + "'");
  return parse_zero_table(in, path);
}

std::string default_zero_table_path() {
  if (const char* env = std::getenv("ABSZETA_ZEROS"); env != nullptr && *env != '\0') return env;
  return ZETAKIT_DEFAULT_ZEROS;
}

const ZeroTable& bundled_zero_table() {
  static const ZeroTable table = load_zero_table(ZETAKIT_DEFAULT_ZEROS);
  return table;
}

double completed_zeta_on_line(double t) { return specfun::completed_zeta(Complex(0.5, t)).real(); }

bool verify_zero(double gamma, double tol) {
  if (!(gamma > 0.0)) return false;
  if (!(std::abs(specfun::completed_zeta(Complex(0.5, gamma))) < tol)) return false;
  const double lo = completed_zeta_on_line(gamma - 1e-4);
  const double hi = completed_zeta_on_line(gamma + 1e-4);
  return (lo < 0.0 && hi > 0.0) || (lo > 0.0 && hi < 0.0);
}

namespace {

std::size_t index_end(const ZeroTable& table, double T) {
  std::size_t n = 0;
  while (n < table.size() && table.ordinates[n] <= T) ++n;
  return n;
}

Complex pair_term(const ZeroTable& table, const Evaluator& f, std::size_t k) {
  const Complex rho(0.5, table.ordinates[k]);
  return static_cast<double>(table.multiplicities[k]) * (f(rho) + f(std::conj(rho)));
}

ZeroSum reduce(const ZeroTable& table, const std::vector<Complex>& terms, double T) {
  CompensatedSum<Complex> acc;
  for (const Complex& t : terms) acc.add(t);
  return {acc.value(), terms.size(), T > table.max_ordinate()};
}

}  // namespace

ZeroSum sum_over_zeros(const ZeroTable& table, const Evaluator& f, double T, int threads) {
  if (!(T > 0.0)) throw DomainError("sum_over_zeros requires T > 0");
  const std::size_t n = index_end(table, T);
  const auto terms = parallel_map<Complex>(n, threads, [&](std::size_t k) { return pair_term(table, f, k); });
  return reduce(table, terms, T);
}

ZeroSum sum_over_zeros_reference(const ZeroTable& table, const Evaluator& f, double T) {
  if (!(T > 0.0)) throw DomainError("sum_over_zeros requires T > 0");
  const std::size_t n = index_end(table, T);
  std::vector<Complex> terms;
  terms.reserve(n);
  for (std::size_t k = 0; k < n; ++k) terms.push_back(pair_term(table, f, k));
  return reduce(table, terms, T);
}

double counting_main_term(double t) {
  return t / (2.0 * kPi) * std::log(t / (2.0 * kPi * std::exp(1.0))) + 0.875;
}

// Trudgian's explicit bound for the zero counting function.
double counting_error_bound(double t) {
  return 0.112 * std::log(t) + 0.278 * std::log(std::log(t)) + 2.510 + 0.2 / t;
}

namespace {

double counting_main_term_derivative(double t) { return std::log(t / (2.0 * kPi)) / (2.0 * kPi); }

double counting_error_bound_derivative(double t) {
  return 0.112 / t + 0.278 / (t * std::log(t)) - 0.2 / (t * t);
}

}  // namespace

// sum_{gamma > T} g = -g(T) N(T) + int_T^inf N (-g') dt, and N <= M + E with
// -g' >= 0. Integrating the majorant by parts gives
// g(T) (M(T) + E(T) - N(T)) + int_T^inf g (M' + E') dt.
double tail_bound(const std::function<double(double)>& g, double T, std::size_t count_le_T) {
  if (!(T >= std::exp(1.0))) throw DomainError("tail_bound requires T >= e");
  const double boundary =
      g(T) * (counting_main_term(T) + counting_error_bound(T) - static_cast<double>(count_le_T));
  // t = T e^x on unit panels in x until the contribution is negligible.
  auto integrand = [&](double x) {
    const double t = T * std::exp(x);
    return g(t) * (counting_main_term_derivative(t) + counting_error_bound_derivative(t)) * t;
  };
  quadrature::Options opt;
  opt.abs_tol = 1e-15;
  double integral = 0.0;
  for (int panel = 0; panel < 200; ++panel) {
    const double piece = quadrature::integrate(integrand, panel, panel + 1.0, opt).value;
    integral += piece;
    if (std::abs(piece) <= 1e-17 * std::abs(integral) && panel >= 2) break;
  }
  return boundary + integral;
}

}  // namespace zetakit::zeros
