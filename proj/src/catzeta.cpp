#include "zetakit/catzeta.hpp"

#include <cmath>
#include <istream>
#include <limits>

#include "zetakit/errors.hpp"
#include "zetakit/specfun.hpp"

namespace zetakit::catzeta {

namespace {

void check_classes(const std::vector<NormClass>& classes) {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].norm < 2) {
      throw DomainError("norm " + std::to_string(classes[i].norm) + " < 2 makes the Euler factor singular");
    }
    if (classes[i].count == 0) throw DomainError("class counts must be positive");
    if (i > 0 && classes[i].norm < classes[i - 1].norm) throw DomainError("norms must be nondecreasing");
  }
}

}  // namespace

SimpleObjectSpec::SimpleObjectSpec(Enumerator enumerator, std::string name, std::optional<DensityHint> hint)
    : enumerator_(std::move(enumerator)), name_(std::move(name)), hint_(hint) {
  if (hint_ && !(hint_->max_per_norm >= 0.0)) throw DomainError("density hint must be nonnegative");
}

SimpleObjectSpec SimpleObjectSpec::from_list(std::vector<NormClass> classes, std::string name,
                                             std::optional<DensityHint> hint) {
  check_classes(classes);
  return SimpleObjectSpec(
      [classes = std::move(classes)](std::uint64_t bound) {
        std::vector<NormClass> out;
        for (const NormClass& c : classes) {
          if (c.norm > bound) break;
          out.push_back(c);
        }
        return out;
      },
      std::move(name), hint);
}

std::vector<NormClass> SimpleObjectSpec::enumerate(std::uint64_t bound) const {
  std::vector<NormClass> out = enumerator_(bound);
  check_classes(out);
  if (!out.empty() && out.back().norm > bound) throw DomainError("enumerator returned a norm above the bound");
  return out;
}

SimpleObjectSpec abelian_group_simples(std::uint64_t bound) {
  if (bound < 2) throw DomainError("abelian_group_simples needs bound >= 2");
  if (bound > std::numeric_limits<std::uint32_t>::max()) throw BudgetError("prime sieve bound too large");
  std::vector<NormClass> classes;
  for (const std::uint32_t p : specfun::primes_up_to(static_cast<std::uint32_t>(bound))) classes.push_back({p, 1});
  return SimpleObjectSpec::from_list(std::move(classes), "finite abelian groups", DensityHint{1.0});
}

SimpleObjectSpec empty_category() { return SimpleObjectSpec::from_list({}, "empty"); }

SimpleObjectSpec parse_norm_csv(std::istream& in, const std::string& name) {
  std::vector<NormClass> classes;
  std::string line;
  std::size_t lineno = 0;
  auto parse_u64 = [&](const std::string& text) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      if (text.empty() || text[0] == '-' || text[0] == '+') throw ParseError("");
      v = std::stoull(text, &used);
    } catch (const std::exception&) {
      throw ParseError("'" + text + "' is not a nonnegative integer", lineno);
    }
    if (used != text.size()) throw ParseError("'" + text + "' is not a nonnegative integer", lineno);
    return static_cast<std::uint64_t>(v);
  };
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto comma = t.find(',');
    if (comma == std::string::npos || t.find(',', comma + 1) != std::string::npos) {
      throw ParseError("expected 'norm,count'", lineno);
    }
    const std::string a = trim(t.substr(0, comma));
    const std::string b = trim(t.substr(comma + 1));
    if (classes.empty() && a == "norm" && b == "count") continue;
    const NormClass c{parse_u64(a), parse_u64(b)};
    if (c.norm < 2) throw ParseError("norm must be at least 2", lineno);
    if (c.count == 0) throw ParseError("count must be positive", lineno);
    if (!classes.empty() && c.norm < classes.back().norm) throw ParseError("norms must be nondecreasing", lineno);
    classes.push_back(c);
  }
  return SimpleObjectSpec::from_list(std::move(classes), name);
}

std::vector<Complex> euler_factors(const SimpleObjectSpec& spec, Complex s, std::uint64_t norm_bound) {
  std::vector<Complex> factors;
  for (const NormClass& c : spec.enumerate(norm_bound)) {
    const Complex f = 1.0 / (1.0 - std::pow(static_cast<double>(c.norm), -s));
    for (std::uint64_t k = 0; k < c.count; ++k) factors.push_back(f);
  }
  return factors;
}

CategoryZeta category_zeta(const SimpleObjectSpec& spec, Complex s, std::uint64_t norm_bound) {
  if (norm_bound < 2) throw DomainError("norm_bound must be at least 2");
  CategoryZeta out;
  CompensatedSum<Complex> log_acc;
  for (const NormClass& c : spec.enumerate(norm_bound)) {
    const Complex term = std::pow(static_cast<double>(c.norm), -s);
    const Complex f = 1.0 / (1.0 - term);
    const Complex lf = -std::log(1.0 - term);
    for (std::uint64_t k = 0; k < c.count; ++k) {
      out.value *= f;
      log_acc.add(lf);
      ++out.factors;
    }
  }
  out.log_value = log_acc.value();
  const double sigma = s.real();
  if (spec.hint() && sigma > 1.0) {
    // |log(1 - x)| <= |x| / (1 - |x|) and sum_{n > B} n^{-sigma} <= B^{1 - sigma} / (sigma - 1).
    const double B = static_cast<double>(norm_bound);
    const double x = std::pow(B + 1.0, -sigma);
    out.tail_log_bound = spec.hint()->max_per_norm * std::pow(B, 1.0 - sigma) / (sigma - 1.0) / (1.0 - x);
  }
  return out;
}

}  // namespace zetakit::catzeta
