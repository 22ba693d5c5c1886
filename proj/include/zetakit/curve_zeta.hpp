#pragma once

#include <cstdint>
#include <vector>

#include "zetakit/fqcurve.hpp"
#include "zetakit/numeric.hpp"

namespace zetakit::fqcurve {

/// Z(X, t) = P_1(t) / ((1 - t)(1 - q t)) with P_1(t) = prod_i (1 - alpha_i t).
struct CurveZetaData {
  std::uint64_t q = 0;
  int g = 0;
  /// Coefficients of P_1 from t^0 to t^{2g}; numerator_coeffs[0] == 1.
  std::vector<long long> numerator_coeffs;
  std::vector<Complex> alphas;
  int chi = 2;

  Complex numerator(Complex t) const;
  Complex zeta(Complex t) const;
};

/// Rebuilds Z(X, t) from N_1..N_k.
///
/// Power sums q^n + 1 - N_n feed Newton's identities in exact rational
/// arithmetic; the coefficients must be integers. Counts beyond N_{2g} are
/// checked against the resulting numerator.
/// Throws LengthError (k < 2g), NonIntegralError, InconsistentCountsError.
CurveZetaData zeta_from_counts(const PointCounts& counts, int g);

/// Reciprocal roots of P_1 from integer coefficients; multiple roots are
/// separated with a square-free factorization first.
std::vector<Complex> reciprocal_roots(const std::vector<long long>& numerator_coeffs);

struct RhReport {
  bool passed = true;
  std::vector<double> moduli;
  double max_deviation = 0.0;
};
RhReport weil_rh_check(const CurveZetaData& z, double tol);

struct FunctionalEquationReport {
  bool passed = true;
  int epsilon = 1;
  double max_residual = 0.0;
};
/// Z(1/(q t)) = eps q^{chi/2} t^chi Z(t); eps comes from the first sample.
FunctionalEquationReport functional_equation_check(const CurveZetaData& z, const std::vector<Complex>& samples,
                                                   double tol = 1e-9);

/// 1 - sum_i alpha_i^m + q^m.
double lefschetz_count(const CurveZetaData& z, int m);

struct AsymptoticReport {
  bool passed = true;
  /// |N_n - q^n - 1| and 2 g q^{n/2}, n = 1..k.
  std::vector<double> deviations;
  std::vector<double> bounds;
};
AsymptoticReport asymptotic_check(const CurveZetaData& z, const PointCounts& counts);

/// max_{n <= n_max} |sum_i (alpha_i / sqrt q)^n|.
double max_normalized_power_sum(const CurveZetaData& z, int n_max);

}  // namespace zetakit::fqcurve
