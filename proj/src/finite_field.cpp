#include "zetakit/finite_field.hpp"

#include <limits>
#include <sstream>

#include "zetakit/errors.hpp"

namespace zetakit::fqcurve {

namespace {

void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace fp_poly {

FpPoly mul(const FpPoly& a, const FpPoly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
  }
  FpPoly out(acc.begin(), acc.end());
  trim(out);
  return out;
}

FpPoly mod(const FpPoly& a, const FpPoly& m, std::uint32_t p) {
  if (m.empty()) throw DomainError("polynomial division by zero");
  FpPoly r = a;
  trim(r);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (r.size() > dm) {
    const std::size_t shift = r.size() - 1 - dm;
    const std::uint32_t factor = mulmod(r.back(), lead_inv, p);
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint32_t t = mulmod(factor, m[i], p);
      r[i + shift] = (r[i + shift] + p - t) % p;
    }
    trim(r);
  }
  return r;
}

FpPoly sub(const FpPoly& a, const FpPoly& b, std::uint32_t p) {
  FpPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint32_t x = i < a.size() ? a[i] : 0;
    const std::uint32_t y = i < b.size() ? b[i] : 0;
    out[i] = (x + p - y) % p;
  }
  trim(out);
  return out;
}

FpPoly gcd(FpPoly a, FpPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint32_t li = inv_mod(a.back(), p);
    for (auto& c : a) c = mulmod(c, li, p);
  }
  return a;
}

FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m, std::uint32_t p) {
  FpPoly result = mod({1}, m, p);
  FpPoly b = mod(base, m, p);
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mod(mul(result, b, p), m, p);
    b = mod(mul(b, b, p), m, p);
  }
  return result;
}

bool is_irreducible(const FpPoly& f, std::uint32_t p) {
  if (f.size() < 2 || f.back() != 1) throw DomainError("is_irreducible expects a monic polynomial of degree >= 1");
  const auto n = static_cast<std::uint64_t>(f.size() - 1);
  if (n == 1) return true;
  const FpPoly x{0, 1};
  // frob[k] = x^{p^k} mod f
  std::vector<FpPoly> frob{mod(x, f, p)};
  for (std::uint64_t k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), p, f, p));
  if (frob[n] != mod(x, f, p)) return false;
  for (std::uint64_t r : prime_factors(n)) {
    const FpPoly g = gcd(f, sub(frob[n / r], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::string to_string(const FpPoly& f, char var) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || f[i] != 1) os << f[i];
    if (i > 0) {
      if (f[i] != 1) os << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

}  // namespace fp_poly

FpPoly first_irreducible(std::uint32_t p, int degree) {
  if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  if (degree < 1) throw DomainError("field degree must be positive");
  std::uint64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    FpPoly f(static_cast<std::size_t>(degree) + 1, 0);
    std::uint64_t rest = c;
    for (int i = 0; i < degree; ++i) {
      f[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    f.back() = 1;
    if (fp_poly::is_irreducible(f, p)) return f;
  }
  throw DomainError("no irreducible polynomial found");
}

namespace {

std::uint64_t checked_order(std::uint32_t p, int degree) {
  if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  if (degree < 1) throw DomainError("field degree must be positive");
  std::uint64_t q = 1;
  for (int i = 0; i < degree; ++i) {
    q *= p;
    if (q > std::numeric_limits<std::uint32_t>::max()) throw DomainError("field order exceeds 2^32");
  }
  return q;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, int degree)
    : p_(p), degree_(degree), order_(checked_order(p, degree)), modulus_(first_irreducible(p, degree)) {}

FiniteField::FiniteField(std::uint32_t p, FpPoly modulus)
    : p_(p), degree_(static_cast<int>(modulus.size()) - 1), order_(0), modulus_(std::move(modulus)) {
  trim(modulus_);
  degree_ = static_cast<int>(modulus_.size()) - 1;
  order_ = checked_order(p, degree_);
  if (modulus_.back() != 1) throw DomainError("field modulus must be monic");
  for (auto c : modulus_) {
    if (c >= p) throw DomainError("modulus coefficient out of range");
  }
  if (!fp_poly::is_irreducible(modulus_, p)) {
    throw DomainError("modulus " + fp_poly::to_string(modulus_) + " is reducible over F_" + std::to_string(p));
  }
}

FpPoly FiniteField::to_poly(Code c) const {
  FpPoly f;
  for (int i = 0; i < degree_ && c > 0; ++i) {
    f.push_back(c % p_);
    c /= p_;
  }
  trim(f);
  return f;
}

FiniteField::Code FiniteField::from_poly(const FpPoly& f) const {
  const FpPoly r = fp_poly::mod(f, modulus_, p_);
  std::uint64_t code = 0;
  for (std::size_t i = r.size(); i-- > 0;) code = code * p_ + r[i];
  return static_cast<Code>(code);
}

FiniteField::Code FiniteField::from_integer(long long n) const {
  const long long r = ((n % static_cast<long long>(p_)) + p_) % p_;
  return static_cast<Code>(r);
}

FiniteField::Code FiniteField::generator_symbol() const { return from_poly({0, 1}); }

FiniteField::Code FiniteField::add(Code a, Code b) const {
  std::uint64_t out = 0;
  std::uint64_t scale = 1;
  for (int i = 0; i < degree_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return static_cast<Code>(out);
}

FiniteField::Code FiniteField::neg(Code a) const {
  std::uint64_t out = 0;
  std::uint64_t scale = 1;
  for (int i = 0; i < degree_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return static_cast<Code>(out);
}

FiniteField::Code FiniteField::sub(Code a, Code b) const { return add(a, neg(b)); }

FiniteField::Code FiniteField::mul(Code a, Code b) const {
  return from_poly(fp_poly::mul(to_poly(a), to_poly(b), p_));
}

FiniteField::Code FiniteField::pow(Code a, std::uint64_t e) const {
  Code result = 1;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
  }
  return result;
}

FiniteField::Code FiniteField::inv(Code a) const {
  if (a == 0) throw DomainError("inverse of zero in a finite field");
  return pow(a, order_ - 2);
}

std::string FiniteField::to_string(Code c) const { return fp_poly::to_string(to_poly(c)); }

ZechTables::ZechTables(const FiniteField& field) : ord_(static_cast<std::uint32_t>(field.order() - 1)) {
  const auto factors = prime_factors(ord_);
  FiniteField::Code g = 0;
  for (FiniteField::Code c = 1; c < field.order(); ++c) {
    bool primitive = true;
    for (std::uint64_t r : factors) {
      if (field.pow(c, ord_ / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = c;
      break;
    }
  }
  exp_.resize(ord_);
  log_.assign(field.order(), ord_);
  FiniteField::Code x = 1;
  for (std::uint32_t k = 0; k < ord_; ++k) {
    exp_[k] = x;
    log_[x] = k;
    x = field.mul(x, g);
  }
  zech_.resize(ord_);
  for (std::uint32_t k = 0; k < ord_; ++k) zech_[k] = log_[field.add(exp_[k], 1)];
}

std::vector<FiniteField::Code> embedding_table(const FiniteField& base, const FiniteField& ext) {
  if (base.characteristic() != ext.characteristic()) throw DomainError("embedding between different characteristics");
  if (ext.degree() % base.degree() != 0) throw DomainError("base degree does not divide extension degree");
  FiniteField::Code root = 0;
  bool found = false;
  for (FiniteField::Code r = 0; r < ext.order() && !found; ++r) {
    FiniteField::Code acc = 0;
    const FpPoly& m = base.modulus();
    for (std::size_t i = m.size(); i-- > 0;) acc = ext.add(ext.mul(acc, r), ext.from_integer(m[i]));
    if (acc == 0) {
      root = r;
      found = true;
    }
  }
  if (!found) throw DomainError("base modulus has no root in the extension field");
  std::vector<FiniteField::Code> image(base.order());
  for (FiniteField::Code c = 0; c < base.order(); ++c) {
    const FpPoly digits = base.to_poly(c);
    FiniteField::Code acc = 0;
    for (std::size_t i = digits.size(); i-- > 0;) acc = ext.add(ext.mul(acc, root), ext.from_integer(digits[i]));
    image[c] = acc;
  }
  return image;
}

}  // namespace zetakit::fqcurve
