#include <doctest.h>

#include <cmath>

#include "curve_suite.hpp"
#include "zetakit/curve_zeta.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/finite_field.hpp"
#include "zetakit/fqcurve.hpp"

using namespace zetakit;
using namespace zetakit::fqcurve;

TEST_CASE("finite field construction") {
  const FiniteField f9(3, 2);
  CHECK(f9.order() == 9);
  CHECK(f9.modulus() == FpPoly{1, 0, 1});  // a^2 + 1 is first in the ordering
  CHECK(fp_poly::is_irreducible({2, 2, 0, 1}, 3));
  CHECK_FALSE(fp_poly::is_irreducible({2, 0, 1}, 3));  // a^2 + 2 = (a - 1)(a + 1)
  CHECK_THROWS_AS(FiniteField(3, FpPoly{2, 0, 1}), DomainError);
  CHECK_THROWS_AS(FiniteField(6, 1), DomainError);

  const FiniteField::Code a = f9.generator_symbol();
  CHECK(f9.mul(a, a) == f9.from_integer(-1));
  for (FiniteField::Code c = 1; c < 9; ++c) CHECK(f9.mul(c, f9.inv(c)) == 1);
  CHECK_THROWS_AS(f9.inv(0), DomainError);
}

TEST_CASE("Zech tables agree with polynomial arithmetic") {
  for (auto [p, n] : {std::pair{2u, 4}, std::pair{3u, 3}, std::pair{5u, 2}, std::pair{7u, 1}}) {
    const FiniteField f(p, n);
    const ZechTables z(f);
    for (FiniteField::Code a = 0; a < f.order(); ++a) {
      CHECK(z.code_of(z.log_of(a)) == a);
      for (FiniteField::Code b = 0; b < f.order(); ++b) {
        CHECK(z.code_of(z.mul(z.log_of(a), z.log_of(b))) == f.mul(a, b));
        CHECK(z.code_of(z.add(z.log_of(a), z.log_of(b))) == f.add(a, b));
      }
    }
  }
}

TEST_CASE("embedding maps the base field homomorphically") {
  const FiniteField base(3, FpPoly{2, 2, 1});  // a^2 + 2a + 2
  const FiniteField ext(3, 4);
  const auto emb = embedding_table(base, ext);
  for (FiniteField::Code a = 0; a < base.order(); ++a) {
    for (FiniteField::Code b = 0; b < base.order(); ++b) {
      CHECK(emb[base.mul(a, b)] == ext.mul(emb[a], emb[b]));
      CHECK(emb[base.add(a, b)] == ext.add(emb[a], emb[b]));
    }
  }
}

TEST_CASE("parse_curve") {
  const PlaneCurve e = parse_curve("y^2*z - x^3 - x*z^2 mod 3");
  CHECK(e.q() == 3);
  CHECK(e.degree() == 3);
  CHECK(e.plane_genus() == 1);
  CHECK(e.coefficients().size() == 3);
  CHECK(e.coefficients().at({0, 2, 1}) == 1);
  CHECK(e.coefficients().at({3, 0, 0}) == 2);

  const PlaneCurve same = parse_curve(e.to_string());
  CHECK(same.coefficients() == e.coefficients());

  const PlaneCurve f9 = parse_curve("y^2*z - x^3 - a*x*z^2 mod 9");
  CHECK(f9.q() == 9);
  const PlaneCurve explicit_mod = parse_curve("(x + y)^2 - (a+1)*z^2 mod 3^2 [a^2 + 2*a + 2]");
  CHECK(explicit_mod.field().modulus() == FpPoly{2, 2, 1});
  CHECK(explicit_mod.coefficients().at({1, 1, 0}) == 2);

  CHECK_THROWS_AS(parse_curve("y^^2*z mod 3"), ParseError);
  CHECK_THROWS_AS(parse_curve("y^2*z - x^3"), ParseError);
  CHECK_THROWS_AS(parse_curve("y^2 - x^3 mod 3"), ParseError);       // not homogeneous
  CHECK_THROWS_AS(parse_curve("3*x^3 mod 3"), ParseError);           // zero polynomial
  CHECK_THROWS_AS(parse_curve("x^3 + y^3 + z^3 mod 6"), ParseError);  // not a prime power
  CHECK_THROWS_AS(parse_curve("a*x^3 + y^3 + z^3 mod 5"), ParseError);
  CHECK_THROWS_AS(parse_curve("x^3 + w^3 mod 5"), ParseError);
  CHECK_THROWS_AS(parse_curve("x^2 - a*z^2 mod 9 [a^2 + 2]"), ParseError);  // reducible modulus
}

TEST_CASE("count_points examples") {
  CHECK(count_points(parse_curve("x^2 + y^2 - z^2 mod 3"), 1) == 4);
  const PlaneCurve e = parse_curve("y^2*z - x^3 - x*z^2 mod 3");
  CHECK(count_points(e, 1) == 4);
  CHECK(count_points(e, 2) == 16);
  CHECK(count_points(e, 3) == 28);
}

TEST_CASE("fast and reference counters agree with the oracle counts") {
  for (const SuiteCurve& c : smooth_cubic_suite()) {
    const PlaneCurve curve = parse_curve(c.text);
    for (int m = 1; m <= 3; ++m) {
      CAPTURE(c.text);
      CAPTURE(m);
      CHECK(count_points(curve, m) == c.counts[static_cast<std::size_t>(m - 1)]);
      if (m <= 2) CHECK(count_points_reference(curve, m) == c.counts[static_cast<std::size_t>(m - 1)]);
    }
  }
  const PlaneCurve quartic = parse_curve("x^4 + y^4 + z^4 mod 3");
  const std::vector<std::uint64_t> want{4, 28, 28, 28, 244, 892};
  CHECK(count_points_range(quartic, 6).counts == want);
}

TEST_CASE("counting over a non-prime base field") {
  // An F_3 curve read over F_9 has N_1(F_9) = N_2(F_3), whatever the modulus of F_9.
  const PlaneCurve over3 = parse_curve("y^2*z - x^3 - x*z^2 mod 3");
  const PlaneCurve over9 = parse_curve("y^2*z - x^3 - x*z^2 mod 9");
  const PlaneCurve over9b = parse_curve("y^2*z - x^3 - x*z^2 mod 9 [a^2 + a + 2]");
  CHECK(count_points(over9, 1) == count_points(over3, 2));
  CHECK(count_points(over9b, 1) == count_points(over3, 2));
  CHECK(count_points(over9, 2) == count_points(over3, 4));
  CHECK(count_points(over9b, 2) == count_points(over3, 4));

  const PlaneCurve twisted = parse_curve("y^2*z - x^3 - a*x*z^2 - z^3 mod 9");
  for (int m = 1; m <= 2; ++m) CHECK(count_points(twisted, m) == count_points_reference(twisted, m));
}

TEST_CASE("point counts are independent of the thread count") {
  const PlaneCurve curve = parse_curve("y^2*z - x^3 - x*z^2 - z^3 mod 7");
  const std::uint64_t serial = count_points(curve, 2, {1, true});
  for (int threads : {2, 3, 8}) CHECK(count_points(curve, 2, {threads, true}) == serial);
}

TEST_CASE("singular curves and budget") {
  CHECK_THROWS_AS(count_points(parse_curve("x^3 + y^3 + z^3 mod 3"), 1), SingularCurveError);
  CHECK_THROWS_AS(count_points(parse_curve("y^2*z - x^3 mod 5"), 1), SingularCurveError);
  CHECK_THROWS_AS(count_points_reference(parse_curve("y^2*z - x^3 mod 5"), 1), SingularCurveError);
  CHECK(count_points(parse_curve("y^2*z - x^3 mod 5"), 2, {0, false}) == 26);
  CHECK_THROWS_AS(count_points(parse_curve("x^4 + y^4 + z^4 mod 101"), 2), BudgetError);
  CHECK(within_budget(101, 1));
  CHECK_FALSE(within_budget(101, 2));
  CHECK(within_budget(10, 4));
  CHECK_THROWS_AS(count_points_range(parse_curve("x^4 + y^4 + z^4 mod 101"), 4), BudgetError);
}

TEST_CASE("zeta_from_counts") {
  const CurveZetaData p1 = zeta_from_counts({5, {6, 26, 126}}, 0);
  CHECK(p1.numerator_coeffs == std::vector<long long>{1});
  CHECK(p1.alphas.empty());
  CHECK(p1.chi == 2);

  const CurveZetaData e = zeta_from_counts({3, {4, 16}}, 1);
  CHECK(e.numerator_coeffs == std::vector<long long>{1, 0, 3});
  REQUIRE(e.alphas.size() == 2);
  for (const Complex& a : e.alphas) {
    CHECK(std::abs(a.real()) <= 1e-12);
    CHECK(std::abs(std::abs(a.imag()) - std::sqrt(3.0)) <= 1e-12);
  }

  CHECK_THROWS_AS(zeta_from_counts({2, {0}}, 0), InconsistentCountsError);
  CHECK_THROWS_AS(zeta_from_counts({3, {4}}, 1), LengthError);
  CHECK_THROWS_AS(zeta_from_counts({3, {4, 17}}, 1), NonIntegralError);
  CHECK_THROWS_AS(zeta_from_counts({3, {4, 16, 29}}, 1), InconsistentCountsError);
}

TEST_CASE("repeated reciprocal roots") {
  // (1 + 3t)^2: alpha = -3 twice (supersingular over F_9)
  const auto roots = reciprocal_roots({1, 6, 9});
  REQUIRE(roots.size() == 2);
  for (const Complex& r : roots) CHECK(std::abs(r + 3.0) <= 1e-13);
  // (1 + 3t^2)^2
  const auto quad = reciprocal_roots({1, 0, 6, 0, 9});
  REQUIRE(quad.size() == 4);
  for (const Complex& r : quad) CHECK(std::abs(std::abs(r) - std::sqrt(3.0)) <= 1e-13);
}

TEST_CASE("Weil checks on the F_3 elliptic curve") {
  const CurveZetaData e = zeta_from_counts({3, {4, 16, 28}}, 1);
  const RhReport rh = weil_rh_check(e, 1e-10);
  CHECK(rh.passed);
  CHECK(rh.moduli.size() == 2);

  const FunctionalEquationReport fe = functional_equation_check(e, {0.2, Complex(0.1, 0.3), -0.7});
  CHECK(fe.passed);
  CHECK(fe.epsilon == 1);
  CHECK(std::abs(e.zeta(1.0 / (3.0 * 0.2)) - e.zeta(0.2)) <= 1e-12);
  CHECK_THROWS_AS(functional_equation_check(e, {1.0}), PoleError);
  CHECK_THROWS_AS(functional_equation_check(e, {1.0 / 3.0}), PoleError);

  CHECK(lefschetz_count(e, 1) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(lefschetz_count(e, 2) == doctest::Approx(16.0).epsilon(1e-12));

  const AsymptoticReport as = asymptotic_check(e, {3, {4, 16, 28}});
  CHECK(as.passed);
  CHECK(as.deviations[0] == 0.0);
}

TEST_CASE("Weil checks on degenerate and synthetic data") {
  const CurveZetaData p1 = zeta_from_counts({7, {8}}, 0);
  CHECK(weil_rh_check(p1, 1e-10).passed);
  const FunctionalEquationReport fe = functional_equation_check(p1, {0.1});
  CHECK(fe.passed);
  CHECK(fe.epsilon == 1);
  for (int m = 1; m <= 5; ++m) CHECK(lefschetz_count(p1, m) == std::pow(7.0, m) + 1.0);
  CHECK(asymptotic_check(p1, {7, {8, 50}}).passed);

  CurveZetaData fake = p1;
  fake.q = 3;
  fake.g = 1;
  fake.alphas = {2.0, 1.5};
  const RhReport rh = weil_rh_check(fake, 1e-10);
  CHECK_FALSE(rh.passed);
  CHECK(rh.max_deviation == doctest::Approx(2.0 - std::sqrt(3.0)));

  const CurveZetaData e = zeta_from_counts({3, {4, 16}}, 1);
  const std::uint64_t too_many = 3 + 1 + 2 * 2 + 5;
  CHECK_FALSE(asymptotic_check(e, {3, {too_many}}).passed);
}

TEST_CASE("round trip, power sums and bounded normalized sums") {
  for (const SuiteCurve& c : smooth_cubic_suite()) {
    const PlaneCurve curve = parse_curve(c.text);
    const CurveZetaData z = zeta_from_counts({curve.q(), c.counts}, curve.plane_genus());
    CAPTURE(c.text);
    for (int m = 1; m <= 3; ++m) {
      CHECK(std::llround(lefschetz_count(z, m)) == static_cast<long long>(c.counts[static_cast<std::size_t>(m - 1)]));
    }
    CHECK(weil_rh_check(z, 1e-10).passed);
    CHECK(max_normalized_power_sum(z, 50) <= 2.0 * z.g + 1e-9);

    // t Z'/Z = sum_n (1 + q^n - sum_i alpha_i^n) t^n
    const double t = 0.01;
    const double h = 1e-6;
    const Complex dlog = (std::log(z.zeta(t + h)) - std::log(z.zeta(t - h))) / (2 * h) * t;
    Complex series = 0.0;
    for (int n = 1; n <= 40; ++n) series += lefschetz_count(z, n) * std::pow(t, n);
    CHECK(std::abs(dlog - series) <= 1e-8);
  }
  const CurveZetaData g3 = zeta_from_counts({3, {4, 28, 28, 28, 244, 892}}, 3);
  CHECK(g3.numerator_coeffs.size() == 7);
  CHECK(weil_rh_check(g3, 1e-10).passed);
  CHECK(lefschetz_count(g3, 6) == doctest::Approx(892.0).epsilon(1e-12));
}
