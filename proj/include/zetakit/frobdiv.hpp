#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zetakit/curve_zeta.hpp"
#include "zetakit/numeric.hpp"

namespace zetakit::frobdiv {

using Rational = boost::multiprecision::cpp_rational;

/// f: p^Z -> Q with finite support, stored as n -> f(p^n).
class FiniteSupportFn {
 public:
  FiniteSupportFn(std::uint32_t p, std::map<int, Rational> values);
  static FiniteSupportFn delta(std::uint32_t p, int n, Rational value = 1);

  std::uint32_t p() const { return p_; }
  const std::map<int, Rational>& values() const { return values_; }
  Rational at(int n) const;
  bool is_zero() const { return values_.empty(); }
  /// max |n| over the support, 0 for the zero function.
  int radius() const;

  FiniteSupportFn operator+(const FiniteSupportFn& other) const;
  FiniteSupportFn scaled(const Rational& k) const;
  bool operator==(const FiniteSupportFn& other) const = default;

 private:
  std::uint32_t p_;
  std::map<int, Rational> values_;
};

/// Parses {"n": value, ...} with integer keys and values given as JSON
/// numbers or "num/den" strings.
FiniteSupportFn parse_finite_support_fn(std::uint32_t p, const std::string& json_text);

/// Frobenius eigenvalues over F_p with principal zeros s_i = Log(alpha_i)/log p.
struct CurveSpectrum {
  std::uint32_t p = 0;
  int g = 0;
  std::vector<Complex> alphas;
  std::vector<Complex> principal_zeros;
};

/// Requires q to be prime.
CurveSpectrum spectrum_from(const fqcurve::CurveZetaData& z);

/// sum_n f(p^n) p^{n s}.
Complex mellin_fq(const FiniteSupportFn& f, Complex s);

/// (f * g)(p^n) = sum_m f(p^m) g(p^{n-m}).
FiniteSupportFn convolve(const FiniteSupportFn& f, const FiniteSupportFn& g);
/// g*(p^n) = g(p^{-n}) p^{-n}.
FiniteSupportFn involute(const FiniteSupportFn& g);

/// f^(0) + f^(1) - sum over the 2g principal zeros of f^(s_i).
Complex diag_pairing_spectral_value(const FiniteSupportFn& f, const CurveSpectrum& spec);
double diag_pairing_spectral(const FiniteSupportFn& f, const CurveSpectrum& spec);

/// Intersection numbers of the Frobenius correspondences A^n with the diagonal.
/// c_0 = 2 - 2g, c_n = N_n and c_{-n} = p^{-n} N_n for n > 0.
Rational diagonal_weight(int n, const fqcurve::PointCounts& counts, int g);
/// sum_n f(p^n) c_n, exact.
Rational diag_pairing_geometric(const FiniteSupportFn& f, const fqcurve::PointCounts& counts, int g);

/// <f^(A), g^(A)> = <(f * g*)^(A), Diag>.
double pairing(const FiniteSupportFn& f, const FiniteSupportFn& g, const CurveSpectrum& spec);

struct FundamentalInequalityReport {
  double lhs = 0.0;    // f^(0) f^(1)
  double rhs = 0.0;    // <f^(A), f^(A)> / 2
  double slack = 0.0;  // lhs - rhs
  double q_form = 0.0;  // sum_i f^(s_i) f^(1 - s_i)
  double q_form_imag = 0.0;
  /// |2 slack - Q(f)|
  double identity_residual = 0.0;
  bool passed = true;
};
FundamentalInequalityReport fundamental_inequality_check(const FiniteSupportFn& f, const CurveSpectrum& spec,
                                                         double tol = 1e-9);

}  // namespace zetakit::frobdiv
