#include "zetakit/fqcurve.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "zetakit/errors.hpp"
#include "zetakit/parallel.hpp"

namespace zetakit::fqcurve {

PlaneCurve::PlaneCurve(std::shared_ptr<const FiniteField> field, std::map<Exponents, FiniteField::Code> coefficients)
    : field_(std::move(field)) {
  for (const auto& [e, c] : coefficients) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw DomainError("negative exponent in plane curve");
    if (c >= field_->order()) throw DomainError("coefficient code out of range");
    if (c != 0) coefficients_.emplace(e, c);
  }
  if (coefficients_.empty()) throw DomainError("plane curve polynomial is identically zero");
  const Exponents& first = coefficients_.begin()->first;
  degree_ = first[0] + first[1] + first[2];
  for (const auto& [e, c] : coefficients_) {
    if (e[0] + e[1] + e[2] != degree_) throw DomainError("plane curve polynomial is not homogeneous");
  }
  if (degree_ < 1) throw DomainError("plane curve must have positive degree");
}

std::map<Exponents, FiniteField::Code> PlaneCurve::partial(int var) const {
  std::map<Exponents, FiniteField::Code> out;
  for (const auto& [e, c] : coefficients_) {
    const int power = e[static_cast<std::size_t>(var)];
    if (power == 0) continue;
    const FiniteField::Code factor = field_->from_integer(power);
    if (factor == 0) continue;
    Exponents d = e;
    d[static_cast<std::size_t>(var)] -= 1;
    out[d] = field_->add(out[d], field_->mul(factor, c));
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::string PlaneCurve::to_string() const {
  std::ostringstream os;
  bool first = true;
  static constexpr std::array<char, 3> kVars{'x', 'y', 'z'};
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    const bool unit = c == 1;
    const bool has_var = e[0] + e[1] + e[2] > 0;
    if (!unit || !has_var) {
      const std::string cs = field_->to_string(c);
      if (cs.find('+') != std::string::npos) {
        os << '(' << cs << ')';
      } else {
        os << cs;
      }
      if (has_var) os << '*';
    }
    bool first_var = true;
    for (std::size_t v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      if (!first_var) os << '*';
      first_var = false;
      os << kVars[v];
      if (e[v] > 1) os << '^' << e[v];
    }
  }
  os << " mod " << field_->order();
  if (field_->degree() > 1) os << " [" << fp_poly::to_string(field_->modulus()) << ']';
  return os.str();
}

namespace {

// Parsing. Polynomials are first built in F_p[x, y, z, a] and reduced into
// F_q afterwards.

using Exponents4 = std::array<int, 4>;
using Poly4 = std::map<Exponents4, std::uint32_t>;

constexpr int kMaxExponent = 64;

struct Token {
  enum Kind { kNumber, kIdent, kSymbol, kEnd } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::kNumber, s.substr(i, j - i), i});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::kIdent, s.substr(i, j - i), i});
      i = j;
    } else if (std::string("+-*^()[]").find(c) != std::string::npos) {
      out.push_back({Token::kSymbol, std::string(1, c), i});
      ++i;
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "' at column " + std::to_string(i + 1));
    }
  }
  out.push_back({Token::kEnd, "", s.size()});
  return out;
}

class PolyParser {
 public:
  PolyParser(const std::vector<Token>& toks, std::size_t begin, std::size_t end, std::uint32_t p, bool allow_xyz)
      : toks_(toks), pos_(begin), end_(end), p_(p), allow_xyz_(allow_xyz) {}

  Poly4 parse() {
    Poly4 out = expr();
    if (pos_ != end_) fail("unexpected '" + toks_[pos_].text + "'");
    return out;
  }

 private:
  const Token& peek() const { return pos_ < end_ ? toks_[pos_] : end_token_; }
  bool accept(const std::string& sym) {
    if (peek().kind == Token::kSymbol && peek().text == sym) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(peek().pos + 1));
  }

  Poly4 expr() {
    bool negate = false;
    if (accept("-")) {
      negate = true;
    } else {
      accept("+");
    }
    Poly4 acc = term();
    if (negate) acc = scale(acc, p_ - 1);
    while (true) {
      if (accept("+")) {
        acc = add(acc, term());
      } else if (accept("-")) {
        acc = add(acc, scale(term(), p_ - 1));
      } else {
        return acc;
      }
    }
  }

  Poly4 term() {
    Poly4 acc = power();
    while (accept("*")) acc = mul(acc, power());
    return acc;
  }

  Poly4 power() {
    const Poly4 base = atom();
    if (!accept("^")) return base;
    if (peek().kind != Token::kNumber) fail("expected a nonnegative integer exponent");
    const std::string digits = toks_[pos_++].text;
    if (digits.size() > 3 || std::stoi(digits) > kMaxExponent) fail("exponent larger than " + std::to_string(kMaxExponent));
    const int e = std::stoi(digits);
    Poly4 acc{{Exponents4{0, 0, 0, 0}, 1}};
    for (int i = 0; i < e; ++i) acc = mul(acc, base);
    return acc;
  }

  Poly4 atom() {
    const Token& t = peek();
    if (t.kind == Token::kNumber) {
      ++pos_;
      std::uint64_t r = 0;
      for (char c : t.text) r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % p_;
      Poly4 out;
      if (r != 0) out[{0, 0, 0, 0}] = static_cast<std::uint32_t>(r);
      return out;
    }
    if (t.kind == Token::kIdent) {
      static const std::string kNames = "xyza";
      if (t.text.size() != 1 || kNames.find(t.text[0]) == std::string::npos) fail("unknown symbol '" + t.text + "'");
      const std::size_t v = kNames.find(t.text[0]);
      if (v < 3 && !allow_xyz_) fail("only the symbol a may appear here");
      ++pos_;
      Exponents4 e{0, 0, 0, 0};
      e[v] = 1;
      return Poly4{{e, 1}};
    }
    if (accept("(")) {
      Poly4 inner = expr();
      if (!accept(")")) fail("expected ')'");
      return inner;
    }
    fail(t.kind == Token::kEnd ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  Poly4 add(Poly4 a, const Poly4& b) const {
    for (const auto& [e, c] : b) {
      auto& slot = a[e];
      slot = static_cast<std::uint32_t>((static_cast<std::uint64_t>(slot) + c) % p_);
      if (slot == 0) a.erase(e);
    }
    return a;
  }
  Poly4 scale(const Poly4& a, std::uint32_t k) const {
    Poly4 out;
    for (const auto& [e, c] : a) {
      const auto v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * k % p_);
      if (v != 0) out[e] = v;
    }
    return out;
  }
  Poly4 mul(const Poly4& a, const Poly4& b) const {
    Poly4 out;
    for (const auto& [ea, ca] : a) {
      for (const auto& [eb, cb] : b) {
        Exponents4 e{};
        for (std::size_t i = 0; i < 4; ++i) {
          e[i] = ea[i] + eb[i];
          if (e[i] > 4 * kMaxExponent) fail("polynomial degree too large");
        }
        auto& slot = out[e];
        slot = static_cast<std::uint32_t>((slot + static_cast<std::uint64_t>(ca) * cb) % p_);
        if (slot == 0) out.erase(e);
      }
    }
    return out;
  }

  const std::vector<Token>& toks_;
  std::size_t pos_;
  std::size_t end_;
  std::uint32_t p_;
  bool allow_xyz_;
  Token end_token_{Token::kEnd, "", 0};
};

std::uint64_t parse_uint(const Token& t) {
  if (t.kind != Token::kNumber || t.text.size() > 9) {
    throw ParseError("expected a field size after 'mod' at column " + std::to_string(t.pos + 1));
  }
  return std::stoull(t.text);
}

}  // namespace

PlaneCurve parse_curve(const std::string& text) {
  const std::vector<Token> toks = tokenize(text);
  std::size_t mod_at = toks.size();
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i].kind == Token::kIdent && toks[i].text == "mod") {
      if (mod_at != toks.size()) throw ParseError("'mod' appears twice");
      mod_at = i;
    }
  }
  if (mod_at == toks.size()) throw ParseError("missing 'mod <q>'");
  if (mod_at == 0) throw ParseError("missing polynomial before 'mod'");

  std::size_t pos = mod_at + 1;
  std::uint64_t q = parse_uint(toks[pos++]);
  if (toks[pos].kind == Token::kSymbol && toks[pos].text == "^") {
    const std::uint64_t base = q;
    const std::uint64_t e = parse_uint(toks[++pos]);
    ++pos;
    q = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
      q *= base;
      if (q > 1000000000ULL) throw ParseError("field size too large");
    }
  }
  std::uint32_t p = 0;
  int n = 0;
  for (std::uint64_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = static_cast<std::uint32_t>(d);
      break;
    }
  }
  if (p == 0) throw ParseError("field size must be a prime power >= 2");
  for (std::uint64_t r = q; r > 1; r /= p) {
    if (r % p != 0) throw ParseError(std::to_string(q) + " is not a prime power");
    ++n;
  }

  std::shared_ptr<const FiniteField> field;
  if (toks[pos].kind == Token::kSymbol && toks[pos].text == "[") {
    std::size_t close = pos + 1;
    while (close < toks.size() && !(toks[close].kind == Token::kSymbol && toks[close].text == "]")) ++close;
    if (close == toks.size()) throw ParseError("missing ']' after modulus");
    const Poly4 m = PolyParser(toks, pos + 1, close, p, false).parse();
    FpPoly mod_poly;
    for (const auto& [e, c] : m) {
      const auto idx = static_cast<std::size_t>(e[3]);
      if (mod_poly.size() <= idx) mod_poly.resize(idx + 1, 0);
      mod_poly[idx] = c;
    }
    if (static_cast<int>(mod_poly.size()) - 1 != n) {
      throw ParseError("modulus degree must be " + std::to_string(n));
    }
    try {
      field = std::make_shared<const FiniteField>(p, mod_poly);
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
    pos = close + 1;
  } else {
    field = std::make_shared<const FiniteField>(p, n);
  }
  if (toks[pos].kind != Token::kEnd) {
    throw ParseError("unexpected '" + toks[pos].text + "' at column " + std::to_string(toks[pos].pos + 1));
  }

  const Poly4 poly = PolyParser(toks, 0, mod_at, p, true).parse();
  std::map<Exponents, FiniteField::Code> coeffs;
  const FiniteField::Code a = field->generator_symbol();
  for (const auto& [e, c] : poly) {
    if (e[3] > 0 && n == 1) throw ParseError("the symbol a needs a field of size p^n with n > 1");
    const FiniteField::Code value = field->mul(c, field->pow(a, static_cast<std::uint64_t>(e[3])));
    auto& slot = coeffs[{e[0], e[1], e[2]}];
    slot = field->add(slot, value);
  }
  std::erase_if(coeffs, [](const auto& kv) { return kv.second == 0; });
  if (coeffs.empty()) throw ParseError("polynomial is identically zero");
  try {
    return PlaneCurve(field, coeffs);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

bool within_budget(std::uint64_t q, int m) {
  return 2.0 * static_cast<double>(m) * std::log(static_cast<double>(q)) <= std::log(kEnumerationBudget) + 1e-12;
}

namespace {

void check_budget(std::uint64_t q, int m) {
  if (m < 1) throw DomainError("extension degree m must be positive");
  if (!within_budget(q, m)) {
    throw BudgetError("enumerating P^2 over F_{" + std::to_string(q) + "^" + std::to_string(m) +
                      "} exceeds the budget q^{2m} <= 1e8");
  }
}

struct LogTerm {
  int i, j, k;
  ZechTables::Log c;
};

std::vector<LogTerm> to_log_terms(const std::map<Exponents, FiniteField::Code>& poly,
                                  const std::vector<FiniteField::Code>& emb, const ZechTables& z) {
  std::vector<LogTerm> out;
  for (const auto& [e, c] : poly) out.push_back({e[0], e[1], e[2], z.log_of(emb[c])});
  return out;
}

ZechTables::Log eval_terms(const std::vector<LogTerm>& terms, const ZechTables& z, ZechTables::Log x,
                           ZechTables::Log y, ZechTables::Log w) {
  ZechTables::Log acc = z.zero();
  for (const LogTerm& t : terms) {
    const ZechTables::Log v = z.mul(t.c, z.mul(z.pow(x, t.i), z.mul(z.pow(y, t.j), z.pow(w, t.k))));
    acc = z.add(acc, v);
  }
  return acc;
}

struct RowCount {
  std::uint64_t points = 0;
  bool singular = false;
  FiniteField::Code sx = 0, sy = 0, sz = 0;
};

[[noreturn]] void throw_singular(const FiniteField& ext, const RowCount& r, int m) {
  throw SingularCurveError("curve is singular at [" + ext.to_string(r.sx) + " : " + ext.to_string(r.sy) + " : " +
                           ext.to_string(r.sz) + "] over the degree-" + std::to_string(m) + " extension");
}

}  // namespace

std::uint64_t count_points(const PlaneCurve& curve, int m, const CountOptions& opt) {
  check_budget(curve.q(), m);
  const FiniteField& base = curve.field();
  const FiniteField ext(base.characteristic(), base.degree() * m);
  const ZechTables z(ext);
  const auto emb = embedding_table(base, ext);
  const auto Q = static_cast<std::uint32_t>(ext.order());
  const int d = curve.degree();

  const auto f_terms = to_log_terms(curve.coefficients(), emb, z);
  std::array<std::vector<LogTerm>, 3> partials;
  for (int v = 0; v < 3; ++v) partials[static_cast<std::size_t>(v)] = to_log_terms(curve.partial(v), emb, z);

  // On the chart z = 1, F(x, y, 1) = sum_j g_j(x) y^j with g_j(x) = sum_i c_ij x^i.
  std::vector<std::vector<std::pair<int, ZechTables::Log>>> by_y(static_cast<std::size_t>(d) + 1);
  for (const LogTerm& t : f_terms) by_y[static_cast<std::size_t>(t.j)].push_back({t.i, t.c});

  auto singular_at = [&](ZechTables::Log x, ZechTables::Log y, ZechTables::Log w) {
    for (const auto& part : partials) {
      if (eval_terms(part, z, x, y, w) != z.zero()) return false;
    }
    return true;
  };

  const auto rows = parallel_map<RowCount>(Q, opt.threads, [&](std::size_t xc) {
    RowCount row;
    const ZechTables::Log lx = z.log_of(static_cast<FiniteField::Code>(xc));
    std::vector<ZechTables::Log> g(static_cast<std::size_t>(d) + 1, z.zero());
    for (std::size_t j = 0; j <= static_cast<std::size_t>(d); ++j) {
      for (const auto& [i, c] : by_y[j]) g[j] = z.add(g[j], z.mul(c, z.pow(lx, static_cast<std::uint64_t>(i))));
    }
    for (std::uint32_t yc = 0; yc < Q; ++yc) {
      const ZechTables::Log ly = z.log_of(yc);
      ZechTables::Log v = g[static_cast<std::size_t>(d)];
      for (int j = d - 1; j >= 0; --j) v = z.add(z.mul(v, ly), g[static_cast<std::size_t>(j)]);
      if (v != z.zero()) continue;
      ++row.points;
      if (opt.check_smooth && !row.singular && singular_at(lx, ly, z.one())) {
        row.singular = true;
        row.sx = static_cast<FiniteField::Code>(xc);
        row.sy = yc;
        row.sz = 1;
      }
    }
    return row;
  });

  RowCount total;
  for (const RowCount& r : rows) {
    total.points += r.points;
    if (r.singular && !total.singular) total = RowCount{total.points, true, r.sx, r.sy, r.sz};
  }
  // Line at infinity: [x : 1 : 0] and [1 : 0 : 0].
  auto visit = [&](FiniteField::Code xc, FiniteField::Code yc) {
    const ZechTables::Log lx = z.log_of(xc);
    const ZechTables::Log ly = z.log_of(yc);
    if (eval_terms(f_terms, z, lx, ly, z.zero()) != z.zero()) return;
    ++total.points;
    if (opt.check_smooth && !total.singular && singular_at(lx, ly, z.zero())) {
      total.singular = true;
      total.sx = xc;
      total.sy = yc;
      total.sz = 0;
    }
  };
  for (std::uint32_t xc = 0; xc < Q; ++xc) visit(xc, 1);
  visit(1, 0);
  if (total.singular) throw_singular(ext, total, m);
  return total.points;
}

std::uint64_t count_points_reference(const PlaneCurve& curve, int m, bool check_smooth) {
  check_budget(curve.q(), m);
  const FiniteField& base = curve.field();
  const FiniteField ext(base.characteristic(), base.degree() * m);
  const auto emb = embedding_table(base, ext);
  const auto Q = static_cast<std::uint32_t>(ext.order());

  auto lift = [&](const std::map<Exponents, FiniteField::Code>& poly) {
    std::vector<std::pair<Exponents, FiniteField::Code>> out;
    for (const auto& [e, c] : poly) out.push_back({e, emb[c]});
    return out;
  };
  const auto f = lift(curve.coefficients());
  const std::array<std::vector<std::pair<Exponents, FiniteField::Code>>, 3> partials{
      lift(curve.partial(0)), lift(curve.partial(1)), lift(curve.partial(2))};

  auto eval = [&](const auto& poly, FiniteField::Code x, FiniteField::Code y, FiniteField::Code w) {
    FiniteField::Code acc = 0;
    for (const auto& [e, c] : poly) {
      FiniteField::Code t = c;
      t = ext.mul(t, ext.pow(x, static_cast<std::uint64_t>(e[0])));
      t = ext.mul(t, ext.pow(y, static_cast<std::uint64_t>(e[1])));
      t = ext.mul(t, ext.pow(w, static_cast<std::uint64_t>(e[2])));
      acc = ext.add(acc, t);
    }
    return acc;
  };

  std::uint64_t n = 0;
  auto visit = [&](FiniteField::Code x, FiniteField::Code y, FiniteField::Code w) {
    if (eval(f, x, y, w) != 0) return;
    ++n;
    if (!check_smooth) return;
    for (const auto& part : partials) {
      if (eval(part, x, y, w) != 0) return;
    }
    throw_singular(ext, RowCount{n, true, x, y, w}, m);
  };
  for (std::uint32_t x = 0; x < Q; ++x) {
    for (std::uint32_t y = 0; y < Q; ++y) visit(x, y, 1);
  }
  for (std::uint32_t x = 0; x < Q; ++x) visit(x, 1, 0);
  visit(1, 0, 0);
  return n;
}

PointCounts count_points_range(const PlaneCurve& curve, int max_m, const CountOptions& opt) {
  if (max_m < 1) throw DomainError("max_m must be positive");
  for (int m = 1; m <= max_m; ++m) check_budget(curve.q(), m);
  PointCounts out{curve.q(), {}};
  for (int m = 1; m <= max_m; ++m) out.counts.push_back(count_points(curve, m, opt));
  return out;
}

}  // namespace zetakit::fqcurve
