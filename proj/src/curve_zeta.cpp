#include "zetakit/curve_zeta.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <limits>
#include <Eigen/Dense>

#include "zetakit/errors.hpp"

namespace zetakit::fqcurve {

namespace mp = boost::multiprecision;
using Rational = mp::cpp_rational;
using Integer = mp::cpp_int;

namespace {

Complex ipow(Complex z, int n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  Complex result = 1.0;
  for (; n > 0; n >>= 1) {
    if (n & 1) result *= z;
    z *= z;
  }
  return result;
}

}  // namespace

Complex CurveZetaData::numerator(Complex t) const {
  Complex acc = 0.0;
  for (std::size_t j = numerator_coeffs.size(); j-- > 0;) acc = acc * t + static_cast<double>(numerator_coeffs[j]);
  return acc;
}

Complex CurveZetaData::zeta(Complex t) const {
  return numerator(t) / ((1.0 - t) * (1.0 - static_cast<double>(q) * t));
}

CurveZetaData zeta_from_counts(const PointCounts& counts, int g) {
  if (g < 0) throw DomainError("genus must be nonnegative");
  if (counts.q < 2) throw DomainError("q must be at least 2");
  const std::size_t k = counts.counts.size();
  const auto two_g = static_cast<std::size_t>(2 * g);
  if (k < two_g) {
    throw LengthError("genus " + std::to_string(g) + " needs " + std::to_string(two_g) + " point counts, got " +
                      std::to_string(k));
  }

  // power[n] = q^n + 1 - N_n = sum_i alpha_i^n
  std::vector<Integer> power(k + 1, 0);
  Integer qn = 1;
  for (std::size_t n = 1; n <= k; ++n) {
    qn *= counts.q;
    power[n] = qn + 1 - Integer(counts.counts[n - 1]);
  }

  // Newton: n e_n = sum_{i=1}^n (-1)^{i-1} e_{n-i} p_i
  std::vector<Rational> e(two_g + 1, 0);
  e[0] = 1;
  for (std::size_t n = 1; n <= two_g; ++n) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      const Rational term = e[n - i] * Rational(power[i]);
      acc += (i % 2 == 1) ? term : -term;
    }
    e[n] = acc / static_cast<long long>(n);
  }

  CurveZetaData z;
  z.q = counts.q;
  z.g = g;
  z.chi = 2 - 2 * g;
  for (std::size_t j = 0; j <= two_g; ++j) {
    const Rational a = (j % 2 == 0) ? e[j] : Rational(-e[j]);
    if (mp::denominator(a) != 1) {
      throw NonIntegralError("coefficient of t^" + std::to_string(j) + " of P_1 is " + a.str() +
                             ", not an integer; wrong genus or bad counts");
    }
    const Integer num = mp::numerator(a);
    if (num > std::numeric_limits<long long>::max() || num < std::numeric_limits<long long>::min()) {
      throw NonIntegralError("coefficient of t^" + std::to_string(j) + " of P_1 overflows 64 bits");
    }
    z.numerator_coeffs.push_back(static_cast<long long>(num));
  }

  // Counts past N_{2g} are determined by P_1; check them.
  for (std::size_t n = two_g + 1; n <= k; ++n) {
    Rational predicted = 0;
    for (std::size_t i = 1; i <= std::min(n - 1, two_g); ++i) {
      const Rational term = e[i] * Rational(power[n - i]);
      predicted += (i % 2 == 1) ? term : -term;
    }
    if (predicted != Rational(power[n])) {
      const Integer expected_count = Integer(mp::pow(Integer(counts.q), static_cast<unsigned>(n))) + 1 -
                                     mp::numerator(predicted);
      throw InconsistentCountsError("N_" + std::to_string(n) + " = " + std::to_string(counts.counts[n - 1]) +
                                    " but the first " + std::to_string(two_g) + " counts force " +
                                    expected_count.str());
    }
  }
  z.alphas = reciprocal_roots(z.numerator_coeffs);
  return z;
}

namespace {

using RPoly = std::vector<Rational>;  // low to high

void trim(RPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

RPoly derivative(const RPoly& f) {
  RPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<long long>(i));
  trim(d);
  return d;
}

RPoly sub(const RPoly& a, const RPoly& b) {
  RPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

// Quotient and remainder of a / b, b != 0.
std::pair<RPoly, RPoly> divmod(RPoly a, const RPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  RPoly quo(a.size() - b.size() + 1, 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational factor = a.back() / b.back();
    quo[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    trim(a);
  }
  trim(quo);
  return {quo, a};
}

RPoly monic(RPoly f) {
  trim(f);
  if (f.empty()) return f;
  const Rational lead = f.back();
  for (auto& c : f) c /= lead;
  return f;
}

RPoly gcd(RPoly a, RPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Yun's algorithm: f = prod_i a_i^i with a_i square-free and coprime.
std::vector<std::pair<RPoly, int>> square_free_factors(const RPoly& f) {
  std::vector<std::pair<RPoly, int>> out;
  const RPoly fp = derivative(f);
  const RPoly a0 = gcd(f, fp);
  RPoly b = divmod(f, a0).first;
  RPoly c = divmod(fp, a0).first;
  RPoly d = sub(c, derivative(b));
  for (int i = 1; b.size() > 1; ++i) {
    const RPoly a = gcd(b, d);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = sub(c, derivative(b));
    if (a.size() > 1) out.push_back({monic(a), i});
  }
  return out;
}

std::vector<Complex> roots_of_squarefree(const RPoly& f) {
  const std::size_t n = f.size() - 1;
  std::vector<double> c(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) c[i] = static_cast<double>(f[i] / f.back());
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 1; i < n; ++i) companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < n; ++i) companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) = -c[i];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<Complex> roots;
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(n); ++i) {
    Complex x = solver.eigenvalues()[i];
    // Newton polish on the square-free factor.
    for (int it = 0; it < 50; ++it) {
      Complex v = 0.0;
      Complex dv = 0.0;
      for (std::size_t j = c.size(); j-- > 0;) {
        dv = dv * x + v;
        v = v * x + c[j];
      }
      if (dv == Complex(0.0)) break;
      const Complex step = v / dv;
      x -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    roots.push_back(x);
  }
  return roots;
}

}  // namespace

std::vector<Complex> reciprocal_roots(const std::vector<long long>& numerator_coeffs) {
  if (numerator_coeffs.empty() || numerator_coeffs[0] != 1) throw DomainError("P_1 must have constant term 1");
  // Reciprocal roots of P_1 are the roots of x^{2g} P_1(1/x).
  RPoly r(numerator_coeffs.rbegin(), numerator_coeffs.rend());
  trim(r);
  std::vector<Complex> out;
  if (r.size() <= 1) return out;
  for (const auto& [factor, mult] : square_free_factors(r)) {
    const auto roots = roots_of_squarefree(factor);
    for (int k = 0; k < mult; ++k) out.insert(out.end(), roots.begin(), roots.end());
  }
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    if (std::arg(a) != std::arg(b)) return std::arg(a) < std::arg(b);
    return std::abs(a) < std::abs(b);
  });
  return out;
}

RhReport weil_rh_check(const CurveZetaData& z, double tol) {
  RhReport r;
  const double root_q = std::sqrt(static_cast<double>(z.q));
  for (const Complex& a : z.alphas) {
    const double m = std::abs(a);
    r.moduli.push_back(m);
    r.max_deviation = std::max(r.max_deviation, std::abs(m - root_q));
  }
  r.passed = r.max_deviation <= tol;
  return r;
}

FunctionalEquationReport functional_equation_check(const CurveZetaData& z, const std::vector<Complex>& samples,
                                                   double tol) {
  FunctionalEquationReport r;
  const double q = static_cast<double>(z.q);
  const double scale = std::pow(q, 0.5 * z.chi);
  bool first = true;
  for (const Complex& t : samples) {
    if (std::abs(t) <= 1e-300 || std::abs(t - 1.0) <= 1e-12 || std::abs(t - 1.0 / q) <= 1e-12) {
      throw PoleError("functional equation sample hits a pole of Z(X, t) or of its image");
    }
    const Complex lhs = z.zeta(1.0 / (q * t));
    const Complex rhs = scale * ipow(t, z.chi) * z.zeta(t);
    if (first) {
      r.epsilon = (lhs / rhs).real() >= 0.0 ? 1 : -1;
      first = false;
    }
    r.max_residual = std::max(r.max_residual, std::abs(lhs - static_cast<double>(r.epsilon) * rhs));
  }
  r.passed = r.max_residual <= tol;
  return r;
}

double lefschetz_count(const CurveZetaData& z, int m) {
  if (m < 1) throw DomainError("lefschetz_count requires m >= 1");
  CompensatedSum<Complex> s;
  double magnitude = 1.0;
  for (const Complex& a : z.alphas) {
    const Complex am = ipow(a, m);
    s.add(am);
    magnitude += std::abs(am);
  }
  const Complex total = s.value();
  if (std::abs(total.imag()) > 1e-9 * magnitude) {
    throw DomainError("eigenvalue power sum is not real; alphas are not closed under conjugation");
  }
  return 1.0 - total.real() + std::pow(static_cast<double>(z.q), m);
}

AsymptoticReport asymptotic_check(const CurveZetaData& z, const PointCounts& counts) {
  AsymptoticReport r;
  const double q = static_cast<double>(z.q);
  for (std::size_t n = 1; n <= counts.counts.size(); ++n) {
    const double dev = std::abs(static_cast<double>(counts.counts[n - 1]) - std::pow(q, n) - 1.0);
    const double bound = 2.0 * z.g * std::pow(q, 0.5 * static_cast<double>(n));
    r.deviations.push_back(dev);
    r.bounds.push_back(bound);
    if (!(dev <= bound + 1e-9)) r.passed = false;
  }
  return r;
}

double max_normalized_power_sum(const CurveZetaData& z, int n_max) {
  const double root_q = std::sqrt(static_cast<double>(z.q));
  double worst = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    Complex s = 0.0;
    for (const Complex& a : z.alphas) s += ipow(a / root_q, n);
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

}  // namespace zetakit::fqcurve
