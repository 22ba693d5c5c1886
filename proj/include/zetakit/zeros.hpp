#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "zetakit/numeric.hpp"

namespace zetakit::zeros {

/// Ordinates gamma_k of zeros rho_k = 1/2 + i gamma_k, ascending, with multiplicities.
struct ZeroTable {
  std::vector<double> ordinates;
  std::vector<int> multiplicities;
  std::string source_id;
  /// Input line of each ordinate when parsed from text.
  std::vector<std::size_t> source_lines;

  std::size_t size() const { return ordinates.size(); }
  bool empty() const { return ordinates.empty(); }
  double max_ordinate() const { return ordinates.empty() ? 0.0 : ordinates.back(); }
  /// Number of stored zeros with gamma <= t, counted with multiplicity.
  std::size_t count_up_to(double t) const;
  /// Same table restricted to its first k entries.
  ZeroTable first(std::size_t k) const;
};

/// One ordinate per line, optional multiplicity column, '#' comments.
ZeroTable parse_zero_table(std::istream& in, const std::string& source_id);
ZeroTable load_zero_table(const std::string& path);

/// $ABSZETA_ZEROS if set, else the bundled table.
std::string default_zero_table_path();
const ZeroTable& bundled_zero_table();

/// zeta^c(1/2 + i t), real up to roundoff.
double completed_zeta_on_line(double t);

/// |zeta^c(1/2 + i gamma)| < tol and zeta^c(1/2 + i t) changes sign on [gamma - 1e-4, gamma + 1e-4].
bool verify_zero(double gamma, double tol);

using Evaluator = std::function<Complex(Complex)>;

struct ZeroSum {
  Complex value;
  std::size_t zeros_used = 0;
  /// T is beyond the last stored ordinate, so zeros may be missing.
  bool truncated = false;
};

/// Sum over gamma_k <= T of ord_k (f(rho_k) + f(conj rho_k)), reduced in ascending order.
/// `f` is called concurrently and must be thread-safe.
ZeroSum sum_over_zeros(const ZeroTable& table, const Evaluator& f, double T, int threads = 0);
/// Single-threaded version of sum_over_zeros.
ZeroSum sum_over_zeros_reference(const ZeroTable& table, const Evaluator& f, double T);

/// Smooth main term of the zero counting function, t/(2 pi) log(t/(2 pi e)) + 7/8.
double counting_main_term(double t);
/// Explicit bound on |N(t) - counting_main_term(t)| valid for t >= e.
double counting_error_bound(double t);

/// Upper bound for sum over gamma > T of g(gamma), counted with multiplicity,
/// for g positive and nonincreasing on [T, inf). `count_le_T` must be the exact
/// number of zeros with 0 < gamma <= T.
double tail_bound(const std::function<double(double)>& g, double T, std::size_t count_le_T);

}  // namespace zetakit::zeros
