#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zetakit/errors.hpp"
#include "zetakit/numeric.hpp"

namespace zetakit::quadrature {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached rule; computed once per n by Newton iteration on P_n.
const GaussLegendreRule& gauss_legendre(std::size_t n);

struct Options {
  double abs_tol = 1e-12;
  double rel_tol = 0.0;
  std::size_t initial_panels = 1;
  std::size_t max_depth = 40;
  std::size_t order = 20;
};

template <typename T>
struct Result {
  T value{};
  double error_estimate = 0.0;
  std::size_t panels = 0;
};

template <typename F>
auto gauss_panel(F&& f, double a, double b, const GaussLegendreRule& rule) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  using T = decltype(f(a));
  T acc{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return T(acc * half);
}

/// Adaptive composite Gauss-Legendre on [a, b].
///
/// Each panel is compared against the sum over its two halves; a panel is
/// accepted once the difference is below its share of `abs_tol` (or below
/// `rel_tol` times its magnitude). Accepted panels are accumulated left to
/// right, so the result is deterministic.
template <typename F>
auto integrate(F&& f, double a, double b, const Options& opt = {}) -> Result<decltype(f(a))> {
  using T = decltype(f(a));
  Result<T> out;
  if (a == b) return out;
  bool flip = false;
  if (b < a) {
    std::swap(a, b);
    flip = true;
  }
  const GaussLegendreRule& rule = gauss_legendre(opt.order);
  const double total = b - a;
  struct Panel {
    double lo, hi;
    T whole;
    std::size_t depth;
  };
  std::vector<Panel> stack;
  const std::size_t n0 = std::max<std::size_t>(1, opt.initial_panels);
  for (std::size_t k = n0; k-- > 0;) {
    const double lo = a + total * static_cast<double>(k) / static_cast<double>(n0);
    const double hi = (k + 1 == n0) ? b : a + total * static_cast<double>(k + 1) / static_cast<double>(n0);
    stack.push_back({lo, hi, gauss_panel(f, lo, hi, rule), 0});
  }
  CompensatedSum<T> sum;
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (p.lo + p.hi);
    const T left = gauss_panel(f, p.lo, mid, rule);
    const T right = gauss_panel(f, mid, p.hi, rule);
    const T refined = left + right;
    const double diff = std::abs(refined - p.whole);
    // The roundoff floor stops refinement once halves differ only by cancellation noise.
    const double budget = std::max({opt.abs_tol * (p.hi - p.lo) / total, opt.rel_tol * std::abs(refined),
                                    64.0 * std::numeric_limits<double>::epsilon() * std::abs(refined)});
    if (diff <= budget || diff == 0.0) {
      sum.add(refined);
      out.error_estimate += diff;
      ++out.panels;
      continue;
    }
    if (p.depth + 1 > opt.max_depth) {
      throw QuadratureError("adaptive quadrature exceeded depth " + std::to_string(opt.max_depth) + " on [" +
                            std::to_string(p.lo) + ", " + std::to_string(p.hi) + "]");
    }
    stack.push_back({mid, p.hi, right, p.depth + 1});
    stack.push_back({p.lo, mid, left, p.depth + 1});
  }
  out.value = flip ? T(-sum.value()) : sum.value();
  return out;
}

}  // namespace zetakit::quadrature
