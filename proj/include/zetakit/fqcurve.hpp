#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zetakit/finite_field.hpp"
#include "zetakit/numeric.hpp"

namespace zetakit::fqcurve {

/// Exponents (i, j, k) of x^i y^j z^k.
using Exponents = std::array<int, 3>;

/// Homogeneous F(x, y, z) = 0 in P^2 over F_q.
class PlaneCurve {
 public:
  PlaneCurve(std::shared_ptr<const FiniteField> field, std::map<Exponents, FiniteField::Code> coefficients);

  const FiniteField& field() const { return *field_; }
  std::shared_ptr<const FiniteField> field_ptr() const { return field_; }
  std::uint64_t q() const { return field_->order(); }
  int degree() const { return degree_; }
  /// Nonzero coefficients only.
  const std::map<Exponents, FiniteField::Code>& coefficients() const { return coefficients_; }
  /// (d - 1)(d - 2)/2, the genus when the curve is smooth.
  int plane_genus() const { return (degree_ - 1) * (degree_ - 2) / 2; }
  std::string to_string() const;

  /// Partial derivative in variable 0, 1 or 2 (x, y, z); may be identically zero.
  std::map<Exponents, FiniteField::Code> partial(int var) const;

 private:
  std::shared_ptr<const FiniteField> field_;
  std::map<Exponents, FiniteField::Code> coefficients_;
  int degree_ = 0;
};

/// Parses "<polynomial> mod <q>", e.g. "y^2*z - x^3 - x*z^2 mod 3".
///
/// The polynomial uses x, y, z, integer constants, + - *, ^ with a
/// nonnegative integer exponent, and parentheses. For q = p^n with n > 1 the
/// symbol a denotes the class of the variable in F_p[a]/(m), m being the
/// first monic irreducible of degree n in the library's fixed ordering;
/// "mod 9 [a^2+1]" or "mod 3^2 [a^2+1]" selects m explicitly.
PlaneCurve parse_curve(const std::string& text);

struct CountOptions {
  int threads = 0;
  bool check_smooth = true;
};

/// Largest q^{2m} accepted by the enumerators.
inline constexpr double kEnumerationBudget = 1e8;
bool within_budget(std::uint64_t q, int m);

/// |X(F_{q^m})| by enumeration of normalized points of P^2 over F_{q^m}.
/// Uses Zech-logarithm tables and OpenMP over the affine x coordinate.
/// Throws BudgetError past the budget and SingularCurveError if some point
/// annihilates F and its three partials.
std::uint64_t count_points(const PlaneCurve& curve, int m, const CountOptions& opt = {});
/// Serial version using polynomial arithmetic for every field operation.
std::uint64_t count_points_reference(const PlaneCurve& curve, int m, bool check_smooth = true);

struct PointCounts {
  std::uint64_t q = 0;
  /// counts[n - 1] = N_n.
  std::vector<std::uint64_t> counts;
};

PointCounts count_points_range(const PlaneCurve& curve, int max_m, const CountOptions& opt = {});

}  // namespace zetakit::fqcurve
