#include <doctest.h>

#include <cmath>
#include <random>

#include "zetakit/abszeta.hpp"
#include "zetakit/errors.hpp"

using namespace zetakit;
using namespace zetakit::abszeta;

namespace {

ExponentSum random_sum(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> mult(-3, 3);
  std::uniform_real_distribution<double> alpha(0.0, 4.0);
  std::vector<ExponentSum::Term> terms;
  while (static_cast<int>(terms.size()) < n) {
    const int m = mult(rng);
    const double a = std::round(alpha(rng) * 100.0) / 100.0;
    bool dup = false;
    for (const auto& t : terms) dup = dup || t.alpha == a;
    if (m != 0 && !dup) terms.push_back({a, m});
  }
  return ExponentSum(terms);
}

const ExponentSum& sl2() {
  static const ExponentSum n = catalog_exponent_sum("SL2");
  return n;
}

}  // namespace

TEST_CASE("exponent sums") {
  const ExponentSum n = parse_exponent_sum(R"([{"alpha": 3, "m": 1}, {"alpha": 1, "m": -1}])");
  CHECK(n == sl2());
  CHECK(n.chi() == 0);
  CHECK(n.max_alpha() == 3.0);
  CHECK(n(2.0) == 6.0);
  CHECK(n.to_string() == "u^3 - u");
  CHECK(catalog_exponent_sum("P1").to_string() == "u + 1");
  CHECK(catalog_exponent_sum("Gm").chi() == 0);
  CHECK(exponent_sum_from_spec("point").chi() == 1);
  CHECK(exponent_sum_from_spec(" [{\"alpha\": 0.5, \"m\": 2}]").chi() == 2);
  CHECK_THROWS_AS(ExponentSum({{1.0, 1}, {1.0, 2}}), DomainError);
  CHECK_THROWS_AS(ExponentSum({{1.0, 0}}), DomainError);
  CHECK_THROWS_AS(ExponentSum({{1.0, 1}}, 2), DomainError);
  CHECK_THROWS_AS(parse_exponent_sum(R"([{"alpha": 1}])"), ParseError);
  CHECK_THROWS_AS(parse_exponent_sum(R"([{"alpha": 1, "m": 1.5}])"), ParseError);
  CHECK_THROWS_AS(parse_exponent_sum(R"({"alpha": 1, "m": 1})"), ParseError);
  CHECK_THROWS_AS(parse_exponent_sum(R"([{"alpha": 1, "m": 0}])"), ParseError);
  CHECK_THROWS_AS(catalog_exponent_sum("P2"), ParseError);
}

TEST_CASE("closed forms") {
  for (double s : {3.5, 4.0, 5.0, 7.25}) {
    CHECK(std::abs(zetaN_closed(sl2(), s) - (s - 1.0) / (s - 3.0)) <= 1e-14);
    for (double w : {0.25, 1.0, 2.5}) {
      CHECK(std::abs(zN_closed(sl2(), w, s) - (std::pow(s - 3.0, -w) - std::pow(s - 1.0, -w))) <= 1e-14);
    }
  }
  CHECK(zN_closed(catalog_exponent_sum("P1"), 1.0, 5.0).real() == doctest::Approx(0.45).epsilon(1e-15));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 5; ++i) {
    const ExponentSum n = random_sum(rng, 4);
    CHECK(zN_closed(n, 0.0, Complex(2.0, 1.0)) == Complex(static_cast<double>(n.chi())));
  }
  const Complex s(2.0, 0.7);
  CHECK(std::abs(zetaN_closed(catalog_exponent_sum("P1"), s) - 1.0 / (s * (s - 1.0))) <= 1e-15);
  CHECK(std::abs(zetaN_closed(catalog_exponent_sum("Gm"), s) - s / (s - 1.0)) <= 1e-15);
  CHECK_THROWS_AS(zetaN_closed(sl2(), 3.0), PoleError);
  CHECK(zetaN_closed(sl2(), 1.0) == 0.0);
  CHECK_THROWS_AS(zN_closed(sl2(), 0.5, 2.0), BranchError);
  CHECK(std::abs(zN_closed(sl2(), 2.0, 2.0) - (1.0 - 1.0)) <= 1e-15);
  CHECK_THROWS_AS(zN_closed(sl2(), 0.5, 3.0), PoleError);
}

TEST_CASE("integral oracle") {
  CHECK(std::abs(zN_integral_oracle(catalog_exponent_sum("A1"), 1.0, 3.0) - 0.5) <= 1e-12);
  CHECK(std::abs(zN_integral_oracle(catalog_exponent_sum("point"), 1.0, 2.0) - 0.5) <= 1e-12);
  CHECK(std::abs(zN_integral_oracle(sl2(), 0.5, 5.0) - (1.0 / std::sqrt(2.0) - 0.5)) <= 1e-10);
  CHECK(std::abs(zN_integral_oracle(sl2(), 0.5, 5.0) - 0.207106781186547524400) <= 1e-10);
  const ExponentSum n({{2.5, 2}, {0.7, -3}, {0.0, 1}});
  CHECK(std::abs(zN_integral_oracle(n, 0.3, 5.5) - 0.164176344284237309178) <= 1e-10);
  CHECK_THROWS_AS(zN_integral_oracle(sl2(), 0.5, 3.4), ConvergenceError);
  CHECK_THROWS_AS(zN_integral_oracle(sl2(), 1.5, 5.0), DomainError);

  std::mt19937_64 rng(2);
  for (int i = 0; i < 10; ++i) {
    const ExponentSum r = random_sum(rng, 1 + i % 5);
    for (double w : {0.25, 0.5, 1.0}) {
      for (double ds : {1.0, 2.0, 5.0}) {
        const double s = r.max_alpha() + ds;
        const double closed = zN_closed(r, w, s).real();
        CHECK(std::abs(zN_integral_oracle(r, w, s) - closed) <= 1e-6 * std::abs(closed) + 1e-14);
      }
    }
  }
}

TEST_CASE("canonical normalization") {
  CHECK(std::abs(zetaN_via_wderiv(sl2(), 5.0) - 2.0) <= 1e-6);
  CHECK(std::abs(zetaN_via_wderiv(catalog_exponent_sum("point"), 2.0) - 0.5) <= 1e-6);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    const ExponentSum r = random_sum(rng, 1 + i % 5);
    const Complex s(r.max_alpha() + 1.5, 0.3 * i);
    const Complex z = zetaN_closed(r, s);
    CHECK(std::abs(zetaN_via_wderiv(r, s) - z) <= 1e-6 * std::max(1.0, std::abs(z)));
    const LogDerivReport rep = log_deriv_relation_check(r, s);
    CHECK(rep.residual <= 1e-10);
    CHECK(rep.passed);
  }
  const LogDerivReport rep = log_deriv_relation_check(sl2(), 5.0);
  CHECK(std::abs(rep.z_at_one - 0.25) <= 1e-15);
  CHECK(std::abs(rep.log_derivative + 0.25) <= 1e-15);
  CHECK(log_deriv_relation_check(catalog_exponent_sum("P1"), 4.0).residual <= 1e-15);
}

TEST_CASE("sums and products of counting functions") {
  const ExponentSum u = catalog_exponent_sum("A1");
  CHECK(oplus(u, u) == ExponentSum({{1.0, 2}}));
  CHECK(otimes(u, u) == ExponentSum({{2.0, 1}}));
  CHECK(std::abs(zetaN_closed(otimes(u, u), 4.0) - 0.5) <= 1e-15);
  const ExponentSum d = otimes(catalog_exponent_sum("Gm"), catalog_exponent_sum("P1"));
  CHECK(d == ExponentSum({{2.0, 1}, {0.0, -1}}));
  CHECK(oplus(catalog_exponent_sum("Gm"), catalog_exponent_sum("point")) == u);

  std::mt19937_64 rng(4);
  for (int i = 0; i < 10; ++i) {
    const ExponentSum n = random_sum(rng, 3);
    const ExponentSum m = random_sum(rng, 2);
    const Complex w(0.4, 0.2);
    const Complex s(9.5, 1.0);
    CHECK(std::abs(zN_closed(oplus(n, m), w, s) - zN_closed(n, w, s) - zN_closed(m, w, s)) <= 1e-12);
    Complex pairwise = 0.0;
    Complex product = 1.0;
    for (const auto& a : n.terms()) {
      for (const auto& b : m.terms()) {
        pairwise += static_cast<double>(a.m * b.m) * std::exp(-w * std::log(s - (a.alpha + b.alpha)));
        product *= std::pow(s - (a.alpha + b.alpha), -static_cast<double>(a.m * b.m));
      }
    }
    CHECK(std::abs(zN_closed(otimes(n, m), w, s) - pairwise) <= 1e-12);
    CHECK(std::abs(zetaN_closed(otimes(n, m), s) - product) <= 1e-10 * std::abs(product));
    CHECK(otimes(n, m).chi() == n.chi() * m.chi());
  }
}

TEST_CASE("generating function limit") {
  const std::vector<double> xs{1.1, 1.01, 1.001};
  const GeneratingLimitReport p1 = generating_limit(catalog_exponent_sum("P1"), 3.0, xs);
  CHECK(p1.target == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(p1.passed);
  CHECK(p1.errors.back() <= 1e-3);
  // Z(x, T) = 1/((1 - xT)(1 - T)) for N = u + 1.
  const double x = 1.1;
  const double T = std::pow(x, -3.0);
  CHECK(std::abs(p1.values[0] - (x - 1.0) * (x - 1.0) / ((1.0 - x * T) * (1.0 - T))) <= 1e-13);

  const GeneratingLimitReport s = generating_limit(sl2(), 5.0, xs);
  CHECK(s.target == doctest::Approx(2.0));
  CHECK(s.passed);
  CHECK(s.errors[2] <= 1e-2);
  for (std::size_t i = 1; i < s.errors.size(); ++i) CHECK(s.errors[i] < s.errors[i - 1]);
  const double slope0 = s.errors[0] / 0.1;
  const double slope2 = s.errors[2] / 0.001;
  CHECK(slope2 == doctest::Approx(slope0).epsilon(0.2));

  CHECK(generating_limit(catalog_exponent_sum("point"), 2.0, xs).passed);
  CHECK_THROWS_AS(generating_limit(sl2(), 3.0, xs), ConvergenceError);
  CHECK_THROWS_AS(generating_limit(sl2(), 5.0, {2.5}), DomainError);
}

TEST_CASE("integral lemma") {
  const IntegralLemmaReport a = integral_lemma_check(catalog_exponent_sum("A1"), 3.0);
  CHECK(std::abs(a.limit_F + 0.5) <= 1e-8);
  CHECK(std::abs(a.integral - 0.5) <= 1e-12);
  CHECK(std::abs(a.log_derivative + 0.5) <= 1e-15);
  CHECK(a.passed);
  const IntegralLemmaReport b = integral_lemma_check(sl2(), 6.0);
  CHECK(std::abs(b.integral - (1.0 / 3.0 - 1.0 / 5.0)) <= 1e-12);
  CHECK(b.passed);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 5; ++i) {
    const ExponentSum r = random_sum(rng, 4);
    const IntegralLemmaReport rep = integral_lemma_check(r, r.max_alpha() + 0.75 + i);
    CHECK(rep.residual <= 1e-6);
  }
  CHECK_THROWS_AS(integral_lemma_check(sl2(), 3.2), ConvergenceError);
}

TEST_CASE("counting distribution") {
  const zeros::ZeroTable& table = zeros::bundled_zero_table();
  CHECK(cc_counting({&table, 0, 0.0}, 3.0) == 4.0);
  CHECK(std::abs(cc_counting({&table, 100, 10.0}, 2.0) - 3.0) <= 1e-50 + 1e-12);
  const double v = cc_counting({&table, 100, 0.05}, 2.0);
  CHECK(v > 0.0);
  CHECK(std::abs(v - 5.96244697295455776005) <= 1e-11);
  CHECK_THROWS_AS(cc_counting({&table, 100, 0.05}, 1.0), DomainError);
  CHECK_THROWS_AS(cc_counting({&table, 101, 0.05}, 2.0), DomainError);
  CHECK_THROWS_AS(cc_counting({&table, 10, -1.0}, 2.0), DomainError);
}

TEST_CASE("value at one") {
  const zeros::ZeroTable& table = zeros::bundled_zero_table();
  const CcConstantReport r0 = cc_value_at_one(table, 0);
  CHECK(r0.partial == 0.0);
  const CcConstantReport r10 = cc_value_at_one(table, 10);
  const CcConstantReport r100 = cc_value_at_one(table, 100);
  CHECK(std::abs(r100.constant - 0.06906623153000067622) <= 1e-13);
  CHECK(std::abs(r10.partial - 0.04039030741218074719) <= 1e-13);
  CHECK(std::abs(r100.partial - 0.05973375677503513873) <= 1e-13);
  CHECK(r10.partial < r100.partial);
  CHECK(r0.brackets);
  CHECK(r10.brackets);
  CHECK(r100.brackets);
  CHECK(r100.tail_bound <= 1e-2);
  CHECK(r100.tail_bound < r10.tail_bound);
}

TEST_CASE("integral check of the counting distribution") {
  const zeros::ZeroTable& table = zeros::bundled_zero_table();
  const CountingDistribution dist{&table, 100, 0.01};
  const CcIntegralReport r2 = cc_integral_check(dist, 2.0, 1e3);
  CHECK(std::abs(r2.value + 1.46003204166278833569) <= 1e-11);
  CHECK(std::abs(r2.target + 1.43093376846999932377) <= 1e-11);
  CHECK(r2.deviation <= 0.05);
  CHECK(r2.passed);
  CHECK(r2.deviation <= r2.bias_bound);

  // The truncation bias grows like s - 1/2, so s = 4 is farther off than s = 2.
  const CcIntegralReport r4 = cc_integral_check(dist, 4.0, 1e3);
  CHECK(std::abs(r4.value + 0.49445267711869913555) <= 1e-11);
  CHECK(std::abs(r4.target + 0.42464254033083764387) <= 1e-11);
  CHECK(r4.deviation <= r4.bias_bound);
  CHECK(r4.deviation > r2.deviation);

  // Only the pole terms: -(1/(s-1) + 1/s).
  const CcIntegralReport r0 = cc_integral_check({&table, 0, 0.0}, 3.0, 1e12);
  CHECK(std::abs(r0.value + (0.5 + 1.0 / 3.0)) <= 1e-12);
  CHECK_THROWS_AS(cc_integral_check(dist, 1.0, 1e3), DomainError);
}
