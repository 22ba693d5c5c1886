#include "zetakit/explicit0.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "zetakit/errors.hpp"
#include "zetakit/parallel.hpp"
#include "zetakit/quadrature.hpp"
#include "zetakit/specfun.hpp"

namespace zetakit::explicit0 {

namespace {

constexpr double kDecayFloor = 1e-16;

// Gauss-Legendre panels so that each one spans about one period of e^{i y t} at |y| = freq.
std::size_t panels_for(double length, double freq) {
  return 4 + static_cast<std::size_t>(std::ceil(length * std::abs(freq) / (2.0 * kPi)));
}

}  // namespace

std::string to_string(SmoothnessClass c) { return c == SmoothnessClass::compact_bump ? "compact-bump" : "log-gaussian"; }

TestFunction::TestFunction(Profile profile, double lo, double hi, SmoothnessClass cls, std::string label,
                           Envelope envelope)
    : profile_(std::make_shared<const Profile>(std::move(profile))),
      lo_(lo),
      hi_(hi),
      cls_(cls),
      label_(std::move(label)),
      envelope_(std::move(envelope)) {
  if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) throw DomainError("log support must be a finite interval");
  if (lo == hi) return;
  for (const double t : {lo, hi, lo - 1.0, hi + 1.0}) {
    const double v = (*profile_)(t);
    if (!std::isfinite(v) || std::abs(v) > kDecayFloor) {
      throw DomainError("test function is not below 1e-16 outside its log support (|F(" + std::to_string(t) +
                        ")| = " + std::to_string(std::abs(v)) + ")");
    }
  }
}

TestFunction TestFunction::log_gaussian(double width, double center) {
  if (!(width > 0.0) || !std::isfinite(width) || !std::isfinite(center)) {
    throw DomainError("log-gaussian needs a positive finite width");
  }
  // (t - c)^2 / w^2 - 2 |t| >= 39 beyond c +- R, which keeps F(t) e^{2|t|} below 1e-16.
  const double w2 = width * width;
  const double R = w2 + std::sqrt(w2 * w2 + w2 * (39.0 + 2.0 * std::abs(center)));
  std::ostringstream label;
  label << "log-gaussian width=" << width << " center=" << center;
  const double amp = width * std::sqrt(kPi) * std::exp(0.5 * center);
  return TestFunction(
      [width, center](double t) {
        const double u = (t - center) / width;
        return std::exp(-u * u);
      },
      center - R, center + R, SmoothnessClass::log_gaussian, label.str(),
      [amp, w2](double y) { return amp * std::exp(w2 * (0.25 - y * y) / 4.0); });
}

TestFunction TestFunction::bump(double center, double halfwidth) {
  if (!(halfwidth > 0.0) || !std::isfinite(halfwidth) || !std::isfinite(center)) {
    throw DomainError("bump needs a positive finite halfwidth");
  }
  std::ostringstream label;
  label << "bump center=" << center << " halfwidth=" << halfwidth;
  return TestFunction(
      [center, halfwidth](double t) {
        const double u = (t - center) / halfwidth;
        if (std::abs(u) >= 1.0) return 0.0;
        return std::exp(-1.0 / (1.0 - u * u));
      },
      center - halfwidth, center + halfwidth, SmoothnessClass::compact_bump, label.str());
}

TestFunction TestFunction::zero() {
  return TestFunction([](double) { return 0.0; }, 0.0, 0.0, SmoothnessClass::compact_bump, "zero",
                      [](double) { return 0.0; });
}

double TestFunction::operator()(double x) const {
  if (!(x > 0.0)) throw DomainError("test functions live on x > 0");
  return on_log_axis(std::log(x));
}

TestFunction parse_test_function(const std::string& spec) {
  std::istringstream in(spec);
  std::string name;
  if (!(in >> name)) throw ParseError("empty test-function spec");
  double width = 1.0;
  double center = 0.0;
  double halfwidth = 1.0;
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value, got '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string text = token.substr(eq + 1);
    double v = 0.0;
    try {
      std::size_t used = 0;
      v = std::stod(text, &used);
      if (used != text.size()) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("value of '" + key + "' is not a number: '" + text + "'");
    }
    if (key == "width" && name == "log-gaussian") {
      width = v;
    } else if (key == "halfwidth" && name == "bump") {
      halfwidth = v;
    } else if (key == "center") {
      center = v;
    } else {
      throw ParseError("unknown parameter '" + key + "' for '" + name + "'");
    }
  }
  try {
    if (name == "log-gaussian") return TestFunction::log_gaussian(width, center);
    if (name == "bump") return TestFunction::bump(center, halfwidth);
    if (name == "zero") return TestFunction::zero();
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown test function '" + name + "' (expected log-gaussian, bump or zero)");
}

TestFunction linear_combination(double a, const TestFunction& f, double b, const TestFunction& g) {
  const bool use_f = a != 0.0 && !f.is_zero();
  const bool use_g = b != 0.0 && !g.is_zero();
  if (!use_f && !use_g) return TestFunction::zero();
  const double lo = !use_f ? g.lo() : !use_g ? f.lo() : std::min(f.lo(), g.lo());
  const double hi = !use_f ? g.hi() : !use_g ? f.hi() : std::max(f.hi(), g.hi());
  const bool compact = (!use_f || f.smoothness() == SmoothnessClass::compact_bump) &&
                       (!use_g || g.smoothness() == SmoothnessClass::compact_bump);
  TestFunction::Envelope env;
  if (f.has_envelope() && g.has_envelope()) {
    env = [a, b, ef = f.envelope(), eg = g.envelope()](double y) { return std::abs(a) * ef(y) + std::abs(b) * eg(y); };
  }
  std::ostringstream label;
  label << a << "*(" << f.label() << ") + " << b << "*(" << g.label() << ")";
  return TestFunction([a, b, f, g](double t) { return a * f.on_log_axis(t) + b * g.on_log_axis(t); }, lo, hi,
                      compact ? SmoothnessClass::compact_bump : SmoothnessClass::log_gaussian, label.str(), env);
}

Complex mellin0(const TestFunction& f, Complex s, double target) {
  if (f.is_zero()) return 0.0;
  quadrature::Options opt;
  opt.abs_tol = 0.1 * target;
  opt.initial_panels = panels_for(f.hi() - f.lo(), s.imag());
  opt.max_depth = 30;
  const auto r = quadrature::integrate([&](double t) { return f.on_log_axis(t) * std::exp(s * t); }, f.lo(), f.hi(), opt);
  if (!(r.error_estimate <= target) || !is_finite(r.value)) {
    throw QuadratureError("Mellin transform at s = (" + std::to_string(s.real()) + ", " + std::to_string(s.imag()) +
                          ") has error estimate " + std::to_string(r.error_estimate));
  }
  return r.value;
}

TestFunction involute0(const TestFunction& f) {
  if (f.is_zero()) return TestFunction::zero();
  // On the log axis F*(t) = F(-t) e^{-t}; |Mellin(f*)(1/2 + iy)| = |f^(1/2 - iy)|.
  return TestFunction([f](double t) { return f.on_log_axis(-t) * std::exp(-t); }, -f.hi(), -f.lo(), f.smoothness(),
                      "(" + f.label() + ")*", f.envelope());
}

TestFunction convolve0(const TestFunction& f, const TestFunction& g) {
  if (f.is_zero() || g.is_zero()) return TestFunction::zero();
  auto profile = [f, g](double t) {
    const double a = std::max(f.lo(), t - g.hi());
    const double b = std::min(f.hi(), t - g.lo());
    if (!(a < b)) return 0.0;
    quadrature::Options opt;
    opt.abs_tol = 1e-14;
    opt.initial_panels = 2;
    opt.max_depth = 30;
    return quadrature::integrate([&](double u) { return f.on_log_axis(u) * g.on_log_axis(t - u); }, a, b, opt).value;
  };
  const SmoothnessClass cls =
      f.smoothness() == SmoothnessClass::compact_bump && g.smoothness() == SmoothnessClass::compact_bump
          ? SmoothnessClass::compact_bump
          : SmoothnessClass::log_gaussian;
  TestFunction::Envelope env;
  if (f.has_envelope() && g.has_envelope()) {
    env = [ef = f.envelope(), eg = g.envelope()](double y) { return ef(y) * eg(y); };
  }
  return TestFunction(profile, f.lo() + g.lo(), f.hi() + g.hi(), cls, "(" + f.label() + ") . (" + g.label() + ")",
                      env);
}

std::function<double(double)> critical_line_majorant(const TestFunction& f) {
  if (f.is_zero()) return [](double) { return 0.0; };
  if (f.has_envelope()) return f.envelope();
  // |f^(1/2 + iy)| <= ||G^(k)||_1 / |y|^k after k integrations by parts, G = F e^{t/2}.
  const int n = 4096;
  const double pad = 0.01 * (f.hi() - f.lo());
  const double a = f.lo() - pad;
  const double h = (f.hi() - f.lo() + 2.0 * pad) / n;
  std::vector<double> G(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double t = a + h * i;
    G[i] = f.on_log_axis(t) * std::exp(0.5 * t);
  }
  auto at = [&](int i) { return i < 0 || i > n ? 0.0 : G[i]; };
  double c0 = 0.0;
  double c2 = 0.0;
  double c4 = 0.0;
  for (int i = 0; i <= n; ++i) {
    c0 += std::abs(G[i]);
    c2 += std::abs(at(i + 1) - 2.0 * G[i] + at(i - 1));
    c4 += std::abs(at(i + 2) - 4.0 * at(i + 1) + 6.0 * G[i] - 4.0 * at(i - 1) + at(i - 2));
  }
  c0 *= h;
  c2 *= 1.05 / h;
  c4 *= 1.05 / (h * h * h);
  return [c0, c2, c4](double y) {
    const double y2 = y * y;
    return std::min({c0, c2 / y2, c4 / (y2 * y2)});
  };
}

WeilValue weil_functional(const TestFunction& f, const zeros::ZeroTable& table, double T, int threads,
                          double target) {
  if (!(T > 0.0)) throw DomainError("truncation height T must be positive");
  WeilValue w;
  w.T = T;
  if (f.is_zero()) return w;
  w.pole_terms = mellin0(f, 0.0, target).real() + mellin0(f, 1.0, target).real();
  const zeros::ZeroSum zs =
      zeros::sum_over_zeros(table, [&f, target](Complex s) { return mellin0(f, s, target); }, T, threads);
  w.zero_sum = zs.value.real();
  w.imag_residue = zs.value.imag();
  w.zeros_used = zs.zeros_used;
  w.table_truncated = zs.truncated;
  w.value = w.pole_terms - w.zero_sum;
  const auto majorant = critical_line_majorant(f);
  const double Tt = std::max(T, std::exp(1.0));
  w.tail_bound = zeros::tail_bound([&](double y) { return 2.0 * majorant(y); }, Tt, table.count_up_to(Tt));
  return w;
}

ContourValue weil_contour_oracle(const TestFunction& f, double T, int threads, double target) {
  if (!(T > 0.0)) throw DomainError("contour height T must be positive");
  // Zeros of zeta^c near height T show up as sign changes of the real function on the critical line.
  const int steps = 100;
  double prev = zeros::completed_zeta_on_line(T - 0.1);
  for (int i = 1; i <= steps; ++i) {
    const double t = T - 0.1 + 0.2 * i / steps;
    const double cur = zeros::completed_zeta_on_line(t);
    if (cur == 0.0 || (prev < 0.0) != (cur < 0.0)) {
      throw ContourError("the contour edge at height " + std::to_string(T) + " passes within 0.1 of a zero near " +
                         std::to_string(t));
    }
    prev = cur;
  }
  ContourValue out;
  out.T = T;
  if (f.is_zero()) return out;

  const double freq = std::max(std::abs(f.lo()), std::abs(f.hi()));
  auto integrand = [&f, target](Complex s) { return mellin0(f, s, target) * specfun::log_deriv_completed_zeta(s); };
  // Edges: bottom (-1 - iT -> 2 - iT), right, top, left, each integrated in increasing parameter.
  const auto pieces = parallel_map<quadrature::Result<Complex>>(4, threads, [&](std::size_t k) {
    quadrature::Options opt;
    opt.abs_tol = 10.0 * target;
    opt.max_depth = 30;
    if (k == 0 || k == 2) {
      const double y = k == 0 ? -T : T;
      opt.initial_panels = 4;
      return quadrature::integrate([&](double x) { return integrand(Complex(x, y)); }, -1.0, 2.0, opt);
    }
    const double x = k == 1 ? 2.0 : -1.0;
    opt.initial_panels = panels_for(2.0 * T, freq);
    return quadrature::integrate([&](double y) { return integrand(Complex(x, y)) * kI; }, -T, T, opt);
  });
  CompensatedSum<Complex> loop;
  loop.add(pieces[0].value);
  loop.add(pieces[1].value);
  loop.add(-pieces[2].value);
  loop.add(-pieces[3].value);
  const Complex w = -loop.value() / (2.0 * kPi * kI);
  out.value = w.real();
  out.imag_residue = w.imag();
  for (const auto& p : pieces) out.error_estimate += p.error_estimate;
  out.error_estimate /= 2.0 * kPi;
  return out;
}

FundamentalInequality0Report fundamental_inequality0(const TestFunction& f, const zeros::ZeroTable& table, double T,
                                                     int threads, double target) {
  if (!(T > 0.0)) throw DomainError("truncation height T must be positive");
  FundamentalInequality0Report r;
  if (f.is_zero()) return r;
  const zeros::ZeroSum q = zeros::sum_over_zeros(
      table, [&f, target](Complex s) { return mellin0(f, s, target) * mellin0(f, 1.0 - s, target); }, T, threads);
  r.q_form = q.value.real();
  r.q_form_imag = q.value.imag();
  r.zeros_used = q.zeros_used;
  r.lhs = (mellin0(f, 0.0, target) * mellin0(f, 1.0, target)).real();
  r.w_conv = weil_functional(convolve0(f, involute0(f)), table, T, threads, target).value;
  r.slack = r.lhs - 0.5 * r.w_conv;
  r.identity_residual = std::abs(2.0 * r.slack - r.q_form);
  r.passed = r.q_form >= -1e-10 && r.identity_residual <= 1e-5;
  return r;
}

}  // namespace zetakit::explicit0
