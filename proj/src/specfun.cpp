#include "zetakit/specfun.hpp"

#include <array>
#include <cmath>
#include <string>

#include "zetakit/errors.hpp"

namespace zetakit::specfun {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

const double kLogTwoPi = std::log(2.0 * kPi);
const double kLogPi = std::log(kPi);

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

// log sin(pi z), stable for large |Im z|. Only used under exp(), so the
// branch of the logarithm is irrelevant.
Complex log_sin_pi(Complex z) {
  if (z.imag() > 30.0) {
    return -kI * kPi * z + std::log((1.0 - std::exp(2.0 * kI * kPi * z)) * Complex(0.0, 0.5));
  }
  if (z.imag() < -30.0) {
    return kI * kPi * z + std::log((1.0 - std::exp(-2.0 * kI * kPi * z)) / Complex(0.0, 2.0));
  }
  return std::log(std::sin(kPi * z));
}

Complex cot_pi(Complex z) {
  if (z.imag() > 20.0) {
    const Complex e = std::exp(2.0 * kI * kPi * z);
    return kI * (e + 1.0) / (e - 1.0);
  }
  if (z.imag() < -20.0) {
    const Complex e = std::exp(-2.0 * kI * kPi * z);
    return kI * (1.0 + e) / (1.0 - e);
  }
  return std::cos(kPi * z) / std::sin(kPi * z);
}

// B_{2k} / (2k)!; exact for k <= 4, else (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}.
constexpr int kBernoulliTerms = 60;

const std::array<double, kBernoulliTerms + 1>& bernoulli_over_factorial() {
  static const auto table = [] {
    std::array<double, kBernoulliTerms + 1> t{};
    t[1] = 1.0 / 12.0;
    t[2] = -1.0 / 720.0;
    t[3] = 1.0 / 30240.0;
    t[4] = -1.0 / 1209600.0;
    for (int k = 5; k <= kBernoulliTerms; ++k) {
      double z2k = 0.0;
      for (int n = 60; n >= 1; --n) z2k += std::pow(static_cast<double>(n), -2.0 * k);
      const double mag = 2.0 * z2k * std::pow(2.0 * kPi, -2.0 * k);
      t[k] = (k % 2 == 1) ? mag : -mag;
    }
    return t;
  }();
  return table;
}

}  // namespace

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("gamma has a pole at " + std::to_string(z.real()));
  }
  if (z.real() < 0.5) {
    return kLogPi - log_sin_pi(z) - log_gamma(1.0 - z);
  }
  const Complex w = z - 1.0;
  Complex x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (w + static_cast<double>(i));
  const Complex t = w + kLanczosG + 0.5;
  return 0.5 * kLogTwoPi + (w + 0.5) * std::log(t) - t + std::log(x);
}

Complex gamma(Complex z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("gamma has a pole at " + std::to_string(z.real()));
  }
  const Complex g = std::exp(log_gamma(z));
  return z.imag() == 0.0 ? Complex(g.real(), 0.0) : g;
}

Complex digamma(Complex z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("digamma has a pole at " + std::to_string(z.real()));
  }
  if (z.real() < 0.5) {
    return digamma(1.0 - z) - kPi * cot_pi(z);
  }
  Complex shift = 0.0;
  while (std::abs(z) < 12.0) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  // psi(z) ~ log z - 1/(2z) - sum_k B_{2k} / (2k z^{2k})
  static constexpr std::array<double, 8> kB = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30,
                                               5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510};
  const Complex inv2 = 1.0 / (z * z);
  Complex pow = inv2;
  Complex series = 0.0;
  for (std::size_t k = 0; k < kB.size(); ++k) {
    series += kB[k] / (2.0 * static_cast<double>(k + 1)) * pow;
    pow *= inv2;
  }
  return shift + std::log(z) - 0.5 / z - series;
}

ValueAndDerivative hurwitz_zeta_with_derivative(Complex s, double r, const ZetaOptions& opt) {
  if (!(r > 0.0)) throw DomainError("hurwitz_zeta requires r > 0, got " + std::to_string(r));
  if (s == Complex(1.0, 0.0)) throw PoleError("zeta has a pole at s = 1");

  // Fewer direct terms for Re s < 0, where the partial sums grow and cancel.
  const int base_terms = s.real() < 0.0 ? 4 : 12;
  const int n_terms = base_terms + static_cast<int>(std::ceil(std::abs(s) / kPi)) + opt.extra_terms;
  CompensatedSum<Complex> value;
  CompensatedSum<Complex> deriv;
  for (int n = n_terms - 1; n >= 0; --n) {
    const double base = static_cast<double>(n) + r;
    const double lb = std::log(base);
    const Complex term = std::exp(-s * lb);
    value.add(term);
    deriv.add(-lb * term);
  }
  const double x = static_cast<double>(n_terms) + r;
  const double lx = std::log(x);
  const Complex x_ms = std::exp(-s * lx);  // x^{-s}
  const Complex x_1ms = x * x_ms;          // x^{1-s}
  value.add(x_1ms / (s - 1.0));
  deriv.add(-lx * x_1ms / (s - 1.0) - x_1ms / ((s - 1.0) * (s - 1.0)));
  value.add(0.5 * x_ms);
  deriv.add(-0.5 * lx * x_ms);

  const auto& c = bernoulli_over_factorial();
  Complex poch = s;  // s (s+1) ... (s+2k-2)
  Complex poch_d = 1.0;
  Complex xpow = x_ms / x;  // x^{-s-2k+1} at k = 1
  const double inv_x2 = 1.0 / (x * x);
  double prev = INFINITY;
  for (int k = 1; k <= kBernoulliTerms; ++k) {
    const Complex term = c[k] * poch * xpow;
    const Complex term_d = c[k] * (poch_d - lx * poch) * xpow;
    const double mag = std::abs(term);
    if (mag > prev) break;  // asymptotic series started to diverge
    prev = mag;
    value.add(term);
    deriv.add(term_d);
    if (mag <= opt.term_rel_cutoff * std::abs(value.value()) &&
        std::abs(term_d) <= opt.term_rel_cutoff * std::abs(deriv.value())) {
      break;
    }
    for (int j = 2 * k - 1; j <= 2 * k; ++j) {
      const Complex f = s + static_cast<double>(j);
      poch_d = poch_d * f + poch;
      poch *= f;
    }
    xpow *= inv_x2;
  }
  return {value.value(), deriv.value()};
}

Complex hurwitz_zeta(Complex s, double r, const ZetaOptions& opt) {
  return hurwitz_zeta_with_derivative(s, r, opt).value;
}

ValueAndDerivative riemann_zeta_with_derivative(Complex s, const ZetaOptions& opt) {
  if (s == Complex(1.0, 0.0)) throw PoleError("zeta has a pole at s = 1");
  if (s.real() < 0.0) {
    // zeta(s) = chi(s) zeta(1 - s), chi(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s)
    const ValueAndDerivative r = hurwitz_zeta_with_derivative(1.0 - s, 1.0, opt);
    const Complex pre = std::exp(s * std::log(2.0) + (s - 1.0) * kLogPi + log_gamma(1.0 - s));
    const bool trivial_zero = s.imag() == 0.0 && std::fmod(s.real(), 2.0) == 0.0;
    const Complex sn = trivial_zero ? Complex(0.0) : std::sin(0.5 * kPi * s);
    const Complex cs = std::cos(0.5 * kPi * s);
    const Complex chi = pre * sn;
    const Complex chi_d = pre * (sn * (std::log(2.0) + kLogPi - digamma(1.0 - s)) + 0.5 * kPi * cs);
    return {chi * r.value, chi_d * r.value - chi * r.derivative};
  }
  return hurwitz_zeta_with_derivative(s, 1.0, opt);
}

Complex riemann_zeta(Complex s, const ZetaOptions& opt) {
  return riemann_zeta_with_derivative(s, opt).value;
}

Complex zeta_log_derivative(Complex s, const ZetaOptions& opt) {
  if (s.real() < 0.0) {
    // Logarithmic derivative of the functional equation.
    const ValueAndDerivative r = hurwitz_zeta_with_derivative(1.0 - s, 1.0, opt);
    return std::log(2.0) + kLogPi + 0.5 * kPi * cot_pi(0.5 * s) - digamma(1.0 - s) - r.derivative / r.value;
  }
  const ValueAndDerivative v = hurwitz_zeta_with_derivative(s, 1.0, opt);
  if (v.value == Complex(0.0, 0.0)) throw PoleError("zeta'/zeta evaluated at a zero of zeta");
  return v.derivative / v.value;
}

Complex completed_zeta(Complex s, const ZetaOptions& opt) {
  if (s == Complex(0.0, 0.0) || s == Complex(1.0, 0.0)) {
    throw PoleError("completed zeta has poles at s = 0 and s = 1");
  }
  const Complex half = 0.5 * s;
  if (is_nonpositive_integer(half)) return completed_zeta(1.0 - s, opt);
  return std::exp(-half * kLogPi + log_gamma(half)) * riemann_zeta(s, opt);
}

Complex log_deriv_completed_zeta(Complex s, const ZetaOptions& opt) {
  if (s == Complex(0.0, 0.0) || s == Complex(1.0, 0.0)) {
    throw PoleError("log-derivative of the completed zeta has poles at s = 0 and s = 1");
  }
  const Complex half = 0.5 * s;
  // At trivial zeros the digamma pole cancels the zero of zeta; use the
  // functional equation there.
  const double nearest = std::round(half.real());
  if (nearest <= 0.0 && std::abs(half - Complex(nearest, 0.0)) < 1e-6) {
    return -log_deriv_completed_zeta(1.0 - s, opt);
  }
  return -0.5 * kLogPi + 0.5 * digamma(half) + zeta_log_derivative(s, opt);
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound) {
  std::vector<std::uint32_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<Complex> euler_product_factors(Complex s, std::uint32_t prime_bound) {
  std::vector<Complex> factors;
  for (std::uint32_t p : primes_up_to(prime_bound)) {
    factors.push_back(1.0 / (1.0 - std::pow(static_cast<double>(p), -s)));
  }
  return factors;
}

}  // namespace zetakit::specfun
