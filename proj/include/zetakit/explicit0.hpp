#pragma once

#include <functional>
#include <memory>
#include <string>

#include "zetakit/numeric.hpp"
#include "zetakit/zeros.hpp"

namespace zetakit::explicit0 {

enum class SmoothnessClass { compact_bump, log_gaussian };

std::string to_string(SmoothnessClass c);

/// A test function f on R+, stored through its log profile F(t) = f(e^t).
///
/// Outside [lo, hi] the profile is below 1e-16 in absolute value. Profiles are
/// called concurrently and must be pure.
class TestFunction {
 public:
  using Profile = std::function<double(double)>;
  /// |f^(1/2 + iy)| <= envelope(y) for y >= 0, nonincreasing for y >= e where tails are bounded.
  using Envelope = std::function<double(double)>;

  TestFunction(Profile profile, double lo, double hi, SmoothnessClass cls, std::string label = {},
               Envelope envelope = {});

  /// f(x) = exp(-((log x - center) / width)^2); Mellin transform
  /// width sqrt(pi) exp(center s + width^2 s^2 / 4).
  static TestFunction log_gaussian(double width, double center = 0.0);
  /// f(x) = exp(-1 / (1 - u^2)) for |u| < 1 with u = (log x - center) / halfwidth.
  static TestFunction bump(double center, double halfwidth);
  static TestFunction zero();

  double operator()(double x) const;
  double on_log_axis(double t) const { return (*profile_)(t); }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  SmoothnessClass smoothness() const { return cls_; }
  const std::string& label() const { return label_; }
  bool is_zero() const { return lo_ == hi_; }
  bool has_envelope() const { return static_cast<bool>(envelope_); }
  const Envelope& envelope() const { return envelope_; }

 private:
  std::shared_ptr<const Profile> profile_;
  double lo_;
  double hi_;
  SmoothnessClass cls_;
  std::string label_;
  Envelope envelope_;
};

/// Parses "log-gaussian width=W [center=C]" or "bump [center=C] halfwidth=H".
TestFunction parse_test_function(const std::string& spec);

/// a f + b g with support the hull of both supports.
TestFunction linear_combination(double a, const TestFunction& f, double b, const TestFunction& g);

/// f^(s) = int_0^inf f(x) x^s dx/x, by adaptive Gauss-Legendre on the log axis.
/// Throws QuadratureError when the error estimate exceeds `target`.
Complex mellin0(const TestFunction& f, Complex s, double target = 1e-10);

/// f*(x) = f(1/x) / x, so that Mellin(f*)(s) = f^(1 - s).
TestFunction involute0(const TestFunction& f);

/// (f . g)(x) = int_0^inf f(y) g(x/y) dy/y, so that Mellin(f . g) = f^ g^.
TestFunction convolve0(const TestFunction& f, const TestFunction& g);

/// Nonincreasing majorant of |f^(1/2 + iy)|. Uses the stored envelope when
/// there is one, else min(C0, C2/y^2, C4/y^4) with C_k the L1 norms of the
/// k-th derivative of F(t) e^{t/2}, estimated on a fine grid.
std::function<double(double)> critical_line_majorant(const TestFunction& f);

struct WeilValue {
  double value = 0.0;  // f^(0) + f^(1) - sum over zeros with gamma <= T
  double pole_terms = 0.0;
  double zero_sum = 0.0;
  double imag_residue = 0.0;  // imaginary part of the zero sum, zero up to roundoff
  double T = 0.0;
  std::size_t zeros_used = 0;
  /// Bound on sum over gamma > T of 2 |f^(rho)|, counted with multiplicity.
  double tail_bound = 0.0;
  /// T exceeds the last table ordinate.
  bool table_truncated = false;
};

WeilValue weil_functional(const TestFunction& f, const zeros::ZeroTable& table, double T, int threads = 0,
                          double target = 1e-10);

struct ContourValue {
  double value = 0.0;  // sign matched to weil_functional
  double imag_residue = 0.0;
  double error_estimate = 0.0;
  double T = 0.0;
};

/// -(1/2 pi i) times the counterclockwise integral of f^(s) (zeta^c)'/zeta^c(s)
/// around the rectangle -1 <= Re s <= 2, |Im s| <= T. Throws ContourError when
/// zeta^c has a zero on the critical line within 0.1 of height T.
/// Each edge is integrated to an absolute tolerance of 10 `target`.
ContourValue weil_contour_oracle(const TestFunction& f, double T, int threads = 0, double target = 1e-10);

struct FundamentalInequality0Report {
  double q_form = 0.0;  // Q_T(f) = sum over gamma <= T of f^(rho) f^(1 - rho) + conjugate
  double q_form_imag = 0.0;
  double lhs = 0.0;     // f^(0) f^(1)
  double w_conv = 0.0;  // W_T(f . f*)
  double slack = 0.0;   // lhs - W_T(f . f*) / 2
  double identity_residual = 0.0;  // |2 slack - Q_T(f)|
  std::size_t zeros_used = 0;
  bool passed = true;
};

FundamentalInequality0Report fundamental_inequality0(const TestFunction& f, const zeros::ZeroTable& table, double T,
                                                     int threads = 0, double target = 1e-10);

}  // namespace zetakit::explicit0
