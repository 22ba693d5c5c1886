#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zetakit::fqcurve {

/// Polynomials over F_p, coefficient i at index i, no trailing zeros.
using FpPoly = std::vector<std::uint32_t>;

namespace fp_poly {
FpPoly mul(const FpPoly& a, const FpPoly& b, std::uint32_t p);
FpPoly mod(const FpPoly& a, const FpPoly& m, std::uint32_t p);
FpPoly sub(const FpPoly& a, const FpPoly& b, std::uint32_t p);
FpPoly gcd(FpPoly a, FpPoly b, std::uint32_t p);
/// base^e mod m.
FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m, std::uint32_t p);
/// Rabin's test; `f` must be monic of degree >= 1.
bool is_irreducible(const FpPoly& f, std::uint32_t p);
std::string to_string(const FpPoly& f, char var = 'a');
}  // namespace fp_poly

bool is_prime(std::uint64_t n);

/// GF(p^n) realized as F_p[a]/(modulus).
///
/// Elements are encoded as integers code = sum_i c_i p^i, where c_i is the
/// coefficient of a^i in the reduced representative. Arithmetic here goes
/// through polynomial multiplication and reduction; `ZechTables` provides the
/// table-driven version used by the point-counting kernel.
class FiniteField {
 public:
  using Code = std::uint32_t;

  /// Lexicographically first monic irreducible of the given degree.
  FiniteField(std::uint32_t p, int degree);
  /// Monic modulus, coefficients low to high; rejected unless irreducible.
  FiniteField(std::uint32_t p, FpPoly modulus);

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return degree_; }
  std::uint64_t order() const { return order_; }
  const FpPoly& modulus() const { return modulus_; }

  FpPoly to_poly(Code c) const;
  Code from_poly(const FpPoly& f) const;
  Code from_integer(long long n) const;
  /// Class of the polynomial variable a.
  Code generator_symbol() const;

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code pow(Code a, std::uint64_t e) const;
  Code inv(Code a) const;

  std::string to_string(Code c) const;

 private:
  std::uint32_t p_;
  int degree_;
  std::uint64_t order_;
  FpPoly modulus_;
};

/// Deterministic monic irreducible of given degree over F_p.
FpPoly first_irreducible(std::uint32_t p, int degree);

/// Discrete-log representation of a field of order <= 2^31.
///
/// Nonzero elements are stored as exponents of a fixed primitive element,
/// zero as `zero()`. Multiplication adds exponents; addition uses Zech
/// logarithms, log(1 + g^k).
class ZechTables {
 public:
  using Log = std::uint32_t;

  explicit ZechTables(const FiniteField& field);

  Log zero() const { return ord_; }
  Log one() const { return 0; }
  std::uint32_t group_order() const { return ord_; }
  FiniteField::Code primitive_element() const { return exp_[1 % ord_]; }

  Log log_of(FiniteField::Code c) const { return log_[c]; }
  FiniteField::Code code_of(Log l) const { return l == ord_ ? 0 : exp_[l]; }

  Log mul(Log a, Log b) const {
    if (a == ord_ || b == ord_) return ord_;
    const std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<Log>(s >= ord_ ? s - ord_ : s);
  }
  Log add(Log a, Log b) const {
    if (a == ord_) return b;
    if (b == ord_) return a;
    const Log d = b >= a ? b - a : b + (ord_ - a);
    const Log z = zech_[d];
    return z == ord_ ? ord_ : mul(a, z);
  }
  Log pow(Log a, std::uint64_t e) const {
    if (e == 0) return 0;
    if (a == ord_) return ord_;
    return static_cast<Log>((static_cast<unsigned __int128>(a) * e) % ord_);
  }

 private:
  std::uint32_t ord_;
  std::vector<FiniteField::Code> exp_;
  std::vector<Log> log_;
  std::vector<Log> zech_;
};

/// The image of F_q inside F_{q^m} under a fixed embedding.
///
/// The base generator a is sent to the smallest-code root of the base modulus
/// in the extension field, so the map is reproducible.
std::vector<FiniteField::Code> embedding_table(const FiniteField& base, const FiniteField& ext);

}  // namespace zetakit::fqcurve
