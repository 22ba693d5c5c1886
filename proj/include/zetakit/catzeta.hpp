#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zetakit/numeric.hpp"

namespace zetakit::catzeta {

/// Isomorphism classes of finite simple objects sharing one norm |End(Z)|.
struct NormClass {
  std::uint64_t norm;
  std::uint64_t count;
  bool operator==(const NormClass&) const = default;
};

/// Caller's promise that every integer norm n carries at most `max_per_norm` classes.
struct DensityHint {
  double max_per_norm = 1.0;
};

/// Norm statistics of the simple objects of a category.
class SimpleObjectSpec {
 public:
  /// Returns classes with norm <= bound in nondecreasing norm order.
  using Enumerator = std::function<std::vector<NormClass>(std::uint64_t bound)>;

  SimpleObjectSpec(Enumerator enumerator, std::string name, std::optional<DensityHint> hint = std::nullopt);
  /// A fixed finite list; checked for norms >= 2, positive counts and order.
  static SimpleObjectSpec from_list(std::vector<NormClass> classes, std::string name,
                                    std::optional<DensityHint> hint = std::nullopt);

  /// Runs the enumerator and validates its output.
  std::vector<NormClass> enumerate(std::uint64_t bound) const;
  const std::string& name() const { return name_; }
  const std::optional<DensityHint>& hint() const { return hint_; }

 private:
  Enumerator enumerator_;
  std::string name_;
  std::optional<DensityHint> hint_;
};

/// Z/p for primes p <= bound, one class each, norm p.
SimpleObjectSpec abelian_group_simples(std::uint64_t bound);
SimpleObjectSpec empty_category();

/// "norm,count" lines with nondecreasing norms; an optional "norm,count" header and '#' comments are skipped.
SimpleObjectSpec parse_norm_csv(std::istream& in, const std::string& name);

/// 1/(1 - N^{-s}) for each class with norm <= bound, repeated class_count times, in enumeration order.
std::vector<Complex> euler_factors(const SimpleObjectSpec& spec, Complex s, std::uint64_t norm_bound);

struct CategoryZeta {
  Complex value{1.0, 0.0};
  Complex log_value{0.0, 0.0};  // sum of -count log(1 - N^{-s})
  std::size_t factors = 0;
  /// Bound on |log of the full product - log_value| when the spec carries a density hint and Re s > 1.
  std::optional<double> tail_log_bound;
};

/// Truncated Euler product, accumulated left to right. Requires norm_bound >= 2.
CategoryZeta category_zeta(const SimpleObjectSpec& spec, Complex s, std::uint64_t norm_bound);

}  // namespace zetakit::catzeta
