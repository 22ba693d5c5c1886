#include "zetakit/frobdiv.hpp"

#include <cmath>
#include <json.hpp>
#include <regex>

#include "zetakit/errors.hpp"
#include "zetakit/finite_field.hpp"

namespace zetakit::frobdiv {

namespace mp = boost::multiprecision;

FiniteSupportFn::FiniteSupportFn(std::uint32_t p, std::map<int, Rational> values) : p_(p) {
  if (!fqcurve::is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  for (auto& [n, v] : values) {
    if (v != 0) values_.emplace(n, std::move(v));
  }
}

FiniteSupportFn FiniteSupportFn::delta(std::uint32_t p, int n, Rational value) {
  return FiniteSupportFn(p, {{n, std::move(value)}});
}

Rational FiniteSupportFn::at(int n) const {
  const auto it = values_.find(n);
  return it == values_.end() ? Rational(0) : it->second;
}

int FiniteSupportFn::radius() const {
  int r = 0;
  for (const auto& [n, v] : values_) r = std::max(r, std::abs(n));
  return r;
}

namespace {

void require_same_p(std::uint32_t a, std::uint32_t b) {
  if (a != b) throw PrimeMismatchError("functions live on p^Z for different p: " + std::to_string(a) + " vs " +
                                       std::to_string(b));
}

}  // namespace

FiniteSupportFn FiniteSupportFn::operator+(const FiniteSupportFn& other) const {
  require_same_p(p_, other.p_);
  std::map<int, Rational> out = values_;
  for (const auto& [n, v] : other.values_) out[n] += v;
  return FiniteSupportFn(p_, std::move(out));
}

FiniteSupportFn FiniteSupportFn::scaled(const Rational& k) const {
  std::map<int, Rational> out;
  for (const auto& [n, v] : values_) out.emplace(n, v * k);
  return FiniteSupportFn(p_, std::move(out));
}

namespace {

Rational parse_rational(const std::string& text) {
  static const std::regex kPattern(R"(\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?)");
  std::smatch m;
  if (!std::regex_match(text, m, kPattern)) throw ParseError("malformed rational '" + text + "'");
  const mp::cpp_int num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str());
  mp::cpp_int den = 1;
  if (m[2].matched) den = mp::cpp_int(m[2].str());
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rational(num, den);
}

}  // namespace

FiniteSupportFn parse_finite_support_fn(std::uint32_t p, const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("finite-support function must be a JSON object {\"n\": value}");
  std::map<int, Rational> values;
  static const std::regex kIndex(R"([+-]?\d{1,6})");
  for (const auto& [key, val] : j.items()) {
    if (!std::regex_match(key, kIndex)) throw ParseError("exponent key '" + key + "' is not an integer");
    const int n = std::stoi(key);
    Rational v;
    if (val.is_number_integer()) {
      v = Rational(val.get<long long>());
    } else if (val.is_string()) {
      v = parse_rational(val.get<std::string>());
    } else {
      throw ParseError("value for key '" + key + "' must be an integer or a \"num/den\" string");
    }
    if (values.count(n)) throw ParseError("exponent " + std::to_string(n) + " given twice");
    values.emplace(n, v);
  }
  try {
    return FiniteSupportFn(p, std::move(values));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

CurveSpectrum spectrum_from(const fqcurve::CurveZetaData& z) {
  if (z.q > 0xffffffffULL || !fqcurve::is_prime(z.q)) {
    throw DomainError("the Frobenius-divisor calculus needs q prime, got q = " + std::to_string(z.q));
  }
  CurveSpectrum spec;
  spec.p = static_cast<std::uint32_t>(z.q);
  spec.g = z.g;
  spec.alphas = z.alphas;
  const double lp = std::log(static_cast<double>(spec.p));
  for (const Complex& a : z.alphas) spec.principal_zeros.push_back(std::log(a) / lp);
  return spec;
}

Complex mellin_fq(const FiniteSupportFn& f, Complex s) {
  const double lp = std::log(static_cast<double>(f.p()));
  CompensatedSum<Complex> acc;
  for (const auto& [n, v] : f.values()) acc.add(static_cast<double>(v) * std::exp(static_cast<double>(n) * lp * s));
  return acc.value();
}

FiniteSupportFn convolve(const FiniteSupportFn& f, const FiniteSupportFn& g) {
  require_same_p(f.p(), g.p());
  std::map<int, Rational> out;
  for (const auto& [m, a] : f.values()) {
    for (const auto& [k, b] : g.values()) out[m + k] += a * b;
  }
  return FiniteSupportFn(f.p(), std::move(out));
}

FiniteSupportFn involute(const FiniteSupportFn& g) {
  std::map<int, Rational> out;
  for (const auto& [n, v] : g.values()) {
    // g*(p^{-n}) = g(p^n) p^n
    const mp::cpp_int pn = mp::pow(mp::cpp_int(g.p()), static_cast<unsigned>(std::abs(n)));
    out.emplace(-n, n >= 0 ? Rational(v * pn) : Rational(v / pn));
  }
  return FiniteSupportFn(g.p(), std::move(out));
}

Complex diag_pairing_spectral_value(const FiniteSupportFn& f, const CurveSpectrum& spec) {
  require_same_p(f.p(), spec.p);
  CompensatedSum<Complex> acc;
  acc.add(mellin_fq(f, 0.0));
  acc.add(mellin_fq(f, 1.0));
  for (const Complex& s : spec.principal_zeros) acc.add(-mellin_fq(f, s));
  return acc.value();
}

double diag_pairing_spectral(const FiniteSupportFn& f, const CurveSpectrum& spec) {
  return diag_pairing_spectral_value(f, spec).real();
}

Rational diagonal_weight(int n, const fqcurve::PointCounts& counts, int g) {
  if (n == 0) return Rational(2 - 2 * g);
  const auto k = static_cast<std::size_t>(std::abs(n));
  if (k > counts.counts.size()) {
    throw LengthError("pairing needs N_" + std::to_string(k) + " but only " + std::to_string(counts.counts.size()) +
                      " counts are available");
  }
  const Rational count(mp::cpp_int(counts.counts[k - 1]));
  if (n > 0) return count;
  return count / Rational(mp::pow(mp::cpp_int(counts.q), static_cast<unsigned>(k)));
}

Rational diag_pairing_geometric(const FiniteSupportFn& f, const fqcurve::PointCounts& counts, int g) {
  if (counts.q != f.p()) require_same_p(f.p(), static_cast<std::uint32_t>(counts.q));
  Rational acc = 0;
  for (const auto& [n, v] : f.values()) acc += v * diagonal_weight(n, counts, g);
  return acc;
}

double pairing(const FiniteSupportFn& f, const FiniteSupportFn& g, const CurveSpectrum& spec) {
  return diag_pairing_spectral(convolve(f, involute(g)), spec);
}

FundamentalInequalityReport fundamental_inequality_check(const FiniteSupportFn& f, const CurveSpectrum& spec,
                                                         double tol) {
  require_same_p(f.p(), spec.p);
  FundamentalInequalityReport r;
  r.lhs = (mellin_fq(f, 0.0) * mellin_fq(f, 1.0)).real();
  r.rhs = 0.5 * pairing(f, f, spec);
  r.slack = r.lhs - r.rhs;
  CompensatedSum<Complex> q;
  for (const Complex& s : spec.principal_zeros) q.add(mellin_fq(f, s) * mellin_fq(f, 1.0 - s));
  r.q_form = q.value().real();
  r.q_form_imag = q.value().imag();
  r.identity_residual = std::abs(2.0 * r.slack - r.q_form);
  r.passed = r.slack >= -tol && r.q_form >= -tol && r.identity_residual <= tol;
  return r;
}

}  // namespace zetakit::frobdiv
