#pragma once

#include <cstdint>
#include <vector>

#include "zetakit/numeric.hpp"

namespace zetakit::specfun {

/// Mathematical constants used across the library.
///
/// Values were evaluated at 40 digits and rounded to double; each carries an
/// absolute error of at most `abs_error_bound`. `zeta_prime_ratio_at_minus1`
/// is reproduced by this library's own zeta kernel in the unit tests.
struct NamedConstants {
  double euler_gamma = 0.57721566490153286061;
  double log_4pi_half = 1.26551212348464539649;
  double zeta_prime_ratio_at_minus1 = 1.98505372440541115057;
  double abs_error_bound = 1e-15;
};

inline constexpr NamedConstants kConstants{};

/// Tunables for the Euler-Maclaurin kernel.
struct ZetaOptions {
  /// Bernoulli tail terms stop once below this fraction of the running sum.
  double term_rel_cutoff = 1e-17;
  /// Extra summation terms beyond the automatic N = 12 + |s|/pi (4 + |s|/pi when Re s < 0).
  int extra_terms = 0;
};

Complex gamma(Complex z);
Complex log_gamma(Complex z);
Complex digamma(Complex z);

struct ValueAndDerivative {
  Complex value;
  Complex derivative;
};

/// Hurwitz zeta and its s-derivative, by Euler-Maclaurin summation.
ValueAndDerivative hurwitz_zeta_with_derivative(Complex s, double r, const ZetaOptions& opt = {});
Complex hurwitz_zeta(Complex s, double r, const ZetaOptions& opt = {});

Complex riemann_zeta(Complex s, const ZetaOptions& opt = {});
ValueAndDerivative riemann_zeta_with_derivative(Complex s, const ZetaOptions& opt = {});
/// zeta'(s)/zeta(s). Re s < 0 goes through the functional equation.
Complex zeta_log_derivative(Complex s, const ZetaOptions& opt = {});

/// pi^{-s/2} Gamma(s/2) zeta(s), without the optional 2^{-1/2} factor.
Complex completed_zeta(Complex s, const ZetaOptions& opt = {});
/// -(log pi)/2 + psi(s/2)/2 + zeta'(s)/zeta(s).
Complex log_deriv_completed_zeta(Complex s, const ZetaOptions& opt = {});

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound);

/// Factors 1/(1 - p^{-s}) of the Euler product of zeta, primes p <= bound, ascending.
std::vector<Complex> euler_product_factors(Complex s, std::uint32_t prime_bound);

}  // namespace zetakit::specfun
