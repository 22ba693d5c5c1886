#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zetakit/numeric.hpp"
#include "zetakit/zeros.hpp"

namespace zetakit::abszeta {

/// A counting function N(u) = sum of m(alpha) u^alpha with real exponents.
class ExponentSum {
 public:
  struct Term {
    double alpha;
    long long m;
    bool operator==(const Term&) const = default;
  };

  ExponentSum() = default;
  /// Exponents must be distinct and finite, multiplicities nonzero. Terms are stored by ascending alpha.
  explicit ExponentSum(std::vector<Term> terms);
  /// Also checks that chi equals the sum of multiplicities.
  ExponentSum(std::vector<Term> terms, long long chi);

  const std::vector<Term>& terms() const { return terms_; }
  /// N(1).
  long long chi() const { return chi_; }
  bool empty() const { return terms_.empty(); }
  /// Largest exponent; requires a nonempty sum.
  double max_alpha() const;
  double operator()(double u) const;
  std::string to_string() const;

  bool operator==(const ExponentSum&) const = default;

 private:
  std::vector<Term> terms_;
  long long chi_ = 0;
};

/// [{"alpha": 3, "m": 1}, {"alpha": 1, "m": -1}]
ExponentSum parse_exponent_sum(const std::string& json_text);
/// "point" (1), "Gm" (u - 1), "A1" (u), "P1" (u + 1), "SL2" (u^3 - u).
ExponentSum catalog_exponent_sum(const std::string& name);
/// Catalog name or JSON text.
ExponentSum exponent_sum_from_spec(const std::string& spec);

/// Merges terms, summing multiplicities and dropping zeros.
ExponentSum oplus(const ExponentSum& N, const ExponentSum& M);
/// All pairwise (alpha + beta, n(alpha) m(beta)), merged.
ExponentSum otimes(const ExponentSum& N, const ExponentSum& M);

/// Z_N(w; s) = sum m(alpha) (s - alpha)^{-w}, principal branch.
Complex zN_closed(const ExponentSum& N, Complex w, Complex s);
/// zeta_N(s) = prod (s - alpha)^{-m(alpha)}.
Complex zetaN_closed(const ExponentSum& N, Complex s);
/// d/ds log zeta_N(s) = -sum m(alpha) / (s - alpha).
Complex zetaN_log_derivative(const ExponentSum& N, Complex s);

/// (1/Gamma(w)) int_0^inf N(e^t) e^{-st} t^{w-1} dt for w in (0, 1], s > max alpha + 0.5.
/// The substitution t = v^{1/w} removes the endpoint singularity.
double zN_integral_oracle(const ExponentSum& N, double w, double s);

/// exp of the w-derivative of Z_N(w; s) at w = 0, by Richardson-extrapolated central differences.
Complex zetaN_via_wderiv(const ExponentSum& N, Complex s, double h = 1e-5);

struct LogDerivReport {
  Complex z_at_one;      // Z_N(1; s)
  Complex log_derivative;  // d/ds log zeta_N(s)
  double residual = 0.0;   // |Z_N(1; s) + d/ds log zeta_N(s)|
  bool passed = true;
};
LogDerivReport log_deriv_relation_check(const ExponentSum& N, Complex s, double tol = 1e-8);

struct GeneratingLimitReport {
  std::vector<double> x;
  /// Z(x, x^{-s}) (x - 1)^chi for each x.
  std::vector<double> values;
  std::vector<double> errors;
  double target = 0.0;  // zeta_N(s)
  std::vector<std::size_t> series_terms;
  bool passed = true;  // errors nonincreasing and shrinking linearly in x - 1
};

/// Z(x, T) = exp(sum_r N(x^r) T^r / r), the r-series summed until its tail is below roundoff.
/// Throws ConvergenceError unless s > max alpha, DomainError unless every x is in (1, 2].
GeneratingLimitReport generating_limit(const ExponentSum& N, double s, const std::vector<double>& xs);

struct IntegralLemmaReport {
  /// F(x, s) = d/ds sum_r N(x^r) x^{-rs} / r, extrapolated to x = 1.
  double limit_F = 0.0;
  std::vector<double> log_x;
  std::vector<double> F_values;
  /// int_1^inf N(u) u^{-s} du/u by quadrature.
  double integral = 0.0;
  /// d/ds log zeta_N(s), analytic.
  double log_derivative = 0.0;
  /// Largest pairwise difference of limit_F, -integral and log_derivative.
  double residual = 0.0;
  bool passed = true;
};
IntegralLemmaReport integral_lemma_check(const ExponentSum& N, double s, double tol = 1e-6);

/// Explicit-formula counting function of the first K zero pairs with Abel factor e^{-lambda gamma}.
struct CountingDistribution {
  const zeros::ZeroTable* table = nullptr;
  std::size_t K = 0;
  double lambda = 0.0;
};
/// Checks K <= table size and lambda >= 0.
void validate(const CountingDistribution& dist);

/// u + 1 - sum_{k <= K} ord_k e^{-lambda gamma_k} 2 Re(u^{rho_k}).
double cc_counting(const CountingDistribution& dist, double u);

struct CcConstantReport {
  std::size_t K = 0;
  double partial = 0.0;     // sum_{k <= K} ord_k 2 Re(1/(rho_k + 1))
  double tail_bound = 0.0;  // bound on the remaining zeros
  /// 1/2 + gamma/2 + log(4 pi)/2 - zeta'(-1)/zeta(-1), from the zeta kernel.
  double constant = 0.0;
  bool brackets = true;     // partial <= constant <= partial + tail_bound
};
CcConstantReport cc_value_at_one(const zeros::ZeroTable& table, std::size_t K);

struct CcIntegralReport {
  double s = 0.0;
  double U = 0.0;
  double value = 0.0;   // -int_1^U N_smoothed(u) u^{-s-1} du
  double target = 0.0;  // (zeta^c)'/zeta^c(s)
  double deviation = 0.0;
  /// Bound on |value - target| from truncation at K, the Abel factor and the cutoff U.
  double bias_bound = 0.0;
  double tol = 0.0;
  bool passed = true;  // deviation <= tol
};
CcIntegralReport cc_integral_check(const CountingDistribution& dist, double s, double U, double tol = 0.05);

}  // namespace zetakit::abszeta
