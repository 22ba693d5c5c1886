#include "zetakit/abszeta.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <map>
#include <sstream>

#include "zetakit/errors.hpp"
#include "zetakit/quadrature.hpp"
#include "zetakit/specfun.hpp"

namespace zetakit::abszeta {

ExponentSum::ExponentSum(std::vector<Term> terms) : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.alpha < b.alpha; });
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!std::isfinite(terms_[i].alpha)) throw DomainError("exponents must be finite");
    if (terms_[i].m == 0) throw DomainError("zero multiplicity for exponent " + std::to_string(terms_[i].alpha));
    if (i > 0 && terms_[i].alpha == terms_[i - 1].alpha) {
      throw DomainError("exponent " + std::to_string(terms_[i].alpha) + " appears twice");
    }
    chi_ += terms_[i].m;
  }
}

ExponentSum::ExponentSum(std::vector<Term> terms, long long chi) : ExponentSum(std::move(terms)) {
  if (chi != chi_) {
    throw DomainError("chi = " + std::to_string(chi) + " but the multiplicities sum to " + std::to_string(chi_));
  }
}

double ExponentSum::max_alpha() const {
  if (terms_.empty()) throw DomainError("empty counting function has no exponents");
  return terms_.back().alpha;
}

double ExponentSum::operator()(double u) const {
  CompensatedSum<double> acc;
  for (const Term& t : terms_) acc.add(static_cast<double>(t.m) * std::pow(u, t.alpha));
  return acc.value();
}

std::string ExponentSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const long long m = it->m;
    if (!first) out << (m < 0 ? " - " : " + ");
    if (first && m < 0) out << "-";
    const long long am = std::llabs(m);
    if (it->alpha == 0.0) {
      out << am;
    } else {
      if (am != 1) out << am << "*";
      out << "u";
      if (it->alpha != 1.0) out << "^" << it->alpha;
    }
    first = false;
  }
  return out.str();
}

ExponentSum parse_exponent_sum(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("exponent sum must be a JSON array of {\"alpha\": a, \"m\": m}");
  std::vector<ExponentSum::Term> terms;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("alpha") || !item.contains("m")) {
      throw ParseError("each term needs \"alpha\" and \"m\"");
    }
    if (!item["alpha"].is_number()) throw ParseError("\"alpha\" must be a number");
    if (!item["m"].is_number_integer()) throw ParseError("\"m\" must be an integer");
    terms.push_back({item["alpha"].get<double>(), item["m"].get<long long>()});
  }
  try {
    return ExponentSum(std::move(terms));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

ExponentSum catalog_exponent_sum(const std::string& name) {
  if (name == "point") return ExponentSum({{0.0, 1}});
  if (name == "Gm") return ExponentSum({{1.0, 1}, {0.0, -1}});
  if (name == "A1") return ExponentSum({{1.0, 1}});
  if (name == "P1") return ExponentSum({{1.0, 1}, {0.0, 1}});
  if (name == "SL2") return ExponentSum({{3.0, 1}, {1.0, -1}});
  throw ParseError("unknown counting function '" + name + "' (catalog: point, Gm, A1, P1, SL2)");
}

ExponentSum exponent_sum_from_spec(const std::string& spec) {
  const auto first = spec.find_first_not_of(" \t\n");
  if (first != std::string::npos && spec[first] == '[') return parse_exponent_sum(spec);
  return catalog_exponent_sum(spec);
}

namespace {

ExponentSum merged(const std::vector<ExponentSum::Term>& raw) {
  std::map<double, long long> acc;
  for (const auto& t : raw) acc[t.alpha] += t.m;
  std::vector<ExponentSum::Term> terms;
  for (const auto& [alpha, m] : acc) {
    if (m != 0) terms.push_back({alpha, m});
  }
  return ExponentSum(std::move(terms));
}

bool is_integer(Complex w) { return w.imag() == 0.0 && w.real() == std::round(w.real()); }

// d^{-w} on the principal branch; integer w on the negative axis is taken exactly.
Complex principal_power(Complex d, Complex w) {
  if (d == 0.0) {
    if (w == 0.0) return 1.0;
    if (w.real() < 0.0) return 0.0;
    throw PoleError("Z_N(w; s) has a pole: s equals an exponent and Re w >= 0");
  }
  if (d.imag() == 0.0 && d.real() < 0.0) {
    if (!is_integer(w)) throw BranchError("s - alpha lies on the negative real axis and w is not an integer");
    return std::pow(d.real(), -w.real());
  }
  if (d.imag() == 0.0 && w.imag() == 0.0) return std::pow(d.real(), -w.real());
  return std::exp(-w * std::log(d));
}

Complex integer_power(Complex d, long long n) {
  Complex base = n < 0 ? 1.0 / d : d;
  unsigned long long e = static_cast<unsigned long long>(n < 0 ? -n : n);
  Complex out = 1.0;
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

}  // namespace

ExponentSum oplus(const ExponentSum& N, const ExponentSum& M) {
  std::vector<ExponentSum::Term> raw = N.terms();
  raw.insert(raw.end(), M.terms().begin(), M.terms().end());
  return merged(raw);
}

ExponentSum otimes(const ExponentSum& N, const ExponentSum& M) {
  std::vector<ExponentSum::Term> raw;
  for (const auto& a : N.terms()) {
    for (const auto& b : M.terms()) raw.push_back({a.alpha + b.alpha, a.m * b.m});
  }
  return merged(raw);
}

Complex zN_closed(const ExponentSum& N, Complex w, Complex s) {
  CompensatedSum<Complex> acc;
  for (const auto& t : N.terms()) acc.add(static_cast<double>(t.m) * principal_power(s - t.alpha, w));
  return acc.value();
}

Complex zetaN_closed(const ExponentSum& N, Complex s) {
  Complex out = 1.0;
  for (const auto& t : N.terms()) {
    const Complex d = s - t.alpha;
    if (d == 0.0) {
      if (t.m > 0) throw PoleError("zeta_N has a pole at s = " + std::to_string(t.alpha));
      return 0.0;
    }
    out *= integer_power(d, -t.m);
  }
  return out;
}

Complex zetaN_log_derivative(const ExponentSum& N, Complex s) {
  CompensatedSum<Complex> acc;
  for (const auto& t : N.terms()) {
    const Complex d = s - t.alpha;
    if (d == 0.0) throw PoleError("log-derivative of zeta_N is singular at s = " + std::to_string(t.alpha));
    acc.add(-static_cast<double>(t.m) / d);
  }
  return acc.value();
}

double zN_integral_oracle(const ExponentSum& N, double w, double s) {
  if (!(w > 0.0 && w <= 1.0)) throw DomainError("integral representation needs w in (0, 1]");
  if (N.empty()) return 0.0;
  const double a = s - N.max_alpha();
  if (!(a > 0.5)) {
    throw ConvergenceError("integral needs s > max alpha + 0.5, got s - max alpha = " + std::to_string(a));
  }
  double mass = 0.0;
  for (const auto& t : N.terms()) mass += std::abs(static_cast<double>(t.m));
  const double t_max = (45.0 + std::log(mass)) / a;
  const double v_max = std::pow(t_max, w);
  auto integrand = [&](double v) {
    const double t = std::pow(v, 1.0 / w);
    CompensatedSum<double> acc;
    for (const auto& term : N.terms()) acc.add(static_cast<double>(term.m) * std::exp((term.alpha - s) * t));
    return acc.value() / w;
  };
  quadrature::Options opt;
  opt.abs_tol = 1e-14 * mass;
  opt.rel_tol = 1e-14;
  opt.initial_panels = 16;
  const auto r = quadrature::integrate(integrand, 0.0, v_max, opt);
  return r.value / specfun::gamma(w).real();
}

Complex zetaN_via_wderiv(const ExponentSum& N, Complex s, double h) {
  auto central = [&](double step) { return (zN_closed(N, step, s) - zN_closed(N, -step, s)) / (2.0 * step); };
  const Complex d = (4.0 * central(0.5 * h) - central(h)) / 3.0;
  return std::exp(d);
}

LogDerivReport log_deriv_relation_check(const ExponentSum& N, Complex s, double tol) {
  LogDerivReport r;
  r.z_at_one = zN_closed(N, 1.0, s);
  r.log_derivative = zetaN_log_derivative(N, s);
  r.residual = std::abs(r.z_at_one + r.log_derivative);
  r.passed = r.residual <= tol;
  return r;
}

namespace {

struct SeriesSum {
  double value;
  std::size_t terms;
};

// sum_{r >= 1} c(r) / r with c(r) = sum m e^{r (alpha - s) y}, stopped by a geometric tail bound.
SeriesSum log_generating_series(const ExponentSum& N, double s, double y, bool weight_by_r) {
  double mass = 0.0;
  double qmax = 0.0;
  for (const auto& t : N.terms()) {
    mass += std::abs(static_cast<double>(t.m));
    qmax = std::max(qmax, std::exp((t.alpha - s) * y));
  }
  if (!(qmax < 1.0)) throw ConvergenceError("generating series ratio x^{alpha - s} must be below 1");
  CompensatedSum<double> acc;
  std::size_t r = 1;
  const std::size_t cap = 50'000'000;
  for (;; ++r) {
    CompensatedSum<double> c;
    for (const auto& t : N.terms()) c.add(static_cast<double>(t.m) * std::exp(static_cast<double>(r) * (t.alpha - s) * y));
    acc.add(weight_by_r ? c.value() / static_cast<double>(r) : c.value());
    const double tail = mass * std::pow(qmax, static_cast<double>(r + 1)) / (1.0 - qmax);
    if (tail <= 1e-17 * std::max(1.0, std::abs(acc.value()))) break;
    if (r >= cap) throw ConvergenceError("generating series did not converge within the term cap");
  }
  return {acc.value(), r};
}

}  // namespace

GeneratingLimitReport generating_limit(const ExponentSum& N, double s, const std::vector<double>& xs) {
  GeneratingLimitReport rep;
  if (!N.empty() && !(s > N.max_alpha())) throw ConvergenceError("generating limit needs s > max alpha");
  rep.target = zetaN_closed(N, s).real();
  for (const double x : xs) {
    if (!(x > 1.0 && x <= 2.0)) throw DomainError("x values must lie in (1, 2]");
    const SeriesSum series = log_generating_series(N, s, std::log(x), true);
    const double value = std::exp(series.value + static_cast<double>(N.chi()) * std::log(x - 1.0));
    rep.x.push_back(x);
    rep.values.push_back(value);
    rep.errors.push_back(std::abs(value - rep.target));
    rep.series_terms.push_back(series.terms);
  }
  for (std::size_t i = 1; i < rep.errors.size(); ++i) {
    if (rep.errors[i] > rep.errors[i - 1] * (1.0 + 1e-12) + 1e-14) rep.passed = false;
  }
  if (rep.errors.size() >= 2) {
    const double slope = rep.errors.front() / (rep.x.front() - 1.0);
    const double tol = 2.0 * slope * (rep.x.back() - 1.0) + 1e-12 * std::max(1.0, std::abs(rep.target));
    if (rep.errors.back() > tol) rep.passed = false;
  }
  return rep;
}

IntegralLemmaReport integral_lemma_check(const ExponentSum& N, double s, double tol) {
  IntegralLemmaReport rep;
  if (N.empty()) return rep;
  if (!(s > N.max_alpha() + 0.5)) throw ConvergenceError("integral lemma needs s > max alpha + 0.5");
  const double a_max = s - N.terms().front().alpha;
  // F is analytic in y = log x for |y| < 2 pi / a_max; stay well inside.
  const double y0 = std::min(0.08, 1.0 / a_max);
  const int levels = 6;
  for (int k = 0; k < levels; ++k) {
    const double y = y0 * std::ldexp(1.0, -k);
    rep.log_x.push_back(y);
    rep.F_values.push_back(-y * log_generating_series(N, s, y, false).value);
  }
  // Neville extrapolation to y = 0.
  std::vector<double> p = rep.F_values;
  for (int m = 1; m < levels; ++m) {
    for (int i = levels - 1; i >= m; --i) {
      const double yi = rep.log_x[i];
      const double yim = rep.log_x[i - m];
      p[i] = (yim * p[i] - yi * p[i - 1]) / (yim - yi);
    }
  }
  rep.limit_F = p[levels - 1];
  rep.integral = zN_integral_oracle(N, 1.0, s);
  rep.log_derivative = zetaN_log_derivative(N, s).real();
  rep.residual = std::max({std::abs(rep.limit_F + rep.integral), std::abs(rep.limit_F - rep.log_derivative),
                           std::abs(rep.integral + rep.log_derivative)});
  rep.passed = rep.residual <= tol;
  return rep;
}

void validate(const CountingDistribution& dist) {
  if (dist.table == nullptr) throw DomainError("counting distribution has no zero table");
  if (dist.K > dist.table->size()) {
    throw DomainError("K = " + std::to_string(dist.K) + " exceeds the table size " +
                      std::to_string(dist.table->size()));
  }
  if (!(dist.lambda >= 0.0) || !std::isfinite(dist.lambda)) throw DomainError("smoothing lambda must be >= 0");
}

double cc_counting(const CountingDistribution& dist, double u) {
  validate(dist);
  if (!(u > 1.0)) throw DomainError("the counting distribution is evaluated at u > 1");
  const double lu = std::log(u);
  const double su = std::sqrt(u);
  CompensatedSum<double> acc;
  acc.add(u);
  acc.add(1.0);
  for (std::size_t k = 0; k < dist.K; ++k) {
    const double g = dist.table->ordinates[k];
    acc.add(-dist.table->multiplicities[k] * std::exp(-dist.lambda * g) * 2.0 * su * std::cos(g * lu));
  }
  return acc.value();
}

CcConstantReport cc_value_at_one(const zeros::ZeroTable& table, std::size_t K) {
  if (K > table.size()) throw DomainError("K exceeds the table size");
  CcConstantReport rep;
  rep.K = K;
  CompensatedSum<double> acc;
  std::size_t count = 0;
  for (std::size_t k = 0; k < K; ++k) {
    const double g = table.ordinates[k];
    acc.add(table.multiplicities[k] * 3.0 / (2.25 + g * g));
    count += static_cast<std::size_t>(table.multiplicities[k]);
  }
  rep.partial = acc.value();
  const double T = K == 0 ? std::exp(1.0) : table.ordinates[K - 1];
  rep.tail_bound = zeros::tail_bound([](double g) { return 3.0 / (2.25 + g * g); }, T, count);
  const auto zm1 = specfun::riemann_zeta_with_derivative(-1.0);
  const double euler = -specfun::digamma(1.0).real();
  rep.constant = 0.5 + 0.5 * euler + 0.5 * std::log(4.0 * kPi) - (zm1.derivative / zm1.value).real();
  rep.brackets = rep.partial <= rep.constant && rep.constant <= rep.partial + rep.tail_bound;
  return rep;
}

CcIntegralReport cc_integral_check(const CountingDistribution& dist, double s, double U, double tol) {
  validate(dist);
  if (!(s > 1.0)) throw DomainError("integral check needs s > 1");
  if (!(U > 1.0)) throw DomainError("integral check needs U > 1");
  CcIntegralReport rep;
  rep.s = s;
  rep.U = U;
  rep.tol = tol;
  const double lU = std::log(U);
  CompensatedSum<double> integral;
  integral.add((1.0 - std::exp((1.0 - s) * lU)) / (s - 1.0));
  integral.add((1.0 - std::exp(-s * lU)) / s);
  CompensatedSum<double> bias;
  bias.add(std::exp((1.0 - s) * lU) / (s - 1.0));
  bias.add(std::exp(-s * lU) / s);
  std::size_t count = 0;
  for (std::size_t k = 0; k < dist.K; ++k) {
    const double g = dist.table->ordinates[k];
    const double ord = dist.table->multiplicities[k];
    const double damp = std::exp(-dist.lambda * g);
    const Complex rho(0.5, g);
    const Complex Urs = std::exp((rho - s) * lU);
    integral.add(-ord * damp * 2.0 * ((Urs - 1.0) / (rho - s)).real());
    bias.add(ord * damp * 2.0 * std::abs(Urs) / std::abs(s - rho));
    bias.add(ord * (1.0 - damp) * std::abs(2.0 * (1.0 / (s - rho)).real()));
    count += static_cast<std::size_t>(ord);
  }
  const double c = s - 0.5;
  const double T = dist.K == 0 ? std::exp(1.0) : dist.table->ordinates[dist.K - 1];
  bias.add(zeros::tail_bound([c](double g) { return g >= c ? 2.0 * c / (c * c + g * g) : 1.0 / c; }, T, count));
  rep.value = -integral.value();
  rep.target = specfun::log_deriv_completed_zeta(s).real();
  rep.deviation = std::abs(rep.value - rep.target);
  rep.bias_bound = bias.value();
  rep.passed = rep.deviation <= tol;
  return rep;
}

}  // namespace zetakit::abszeta
