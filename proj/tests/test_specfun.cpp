#include <doctest.h>

#include <cmath>
#include <random>

#include "zetakit/errors.hpp"
#include "zetakit/specfun.hpp"

using namespace zetakit;
using namespace zetakit::specfun;

namespace {

double rel_err(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("gamma at integers and half-integers") {
  CHECK(rel_err(specfun::gamma(1.0), 1.0) < 1e-13);
  CHECK(rel_err(specfun::gamma(0.5), std::sqrt(kPi)) < 1e-13);
  CHECK(rel_err(specfun::gamma(5.0), 24.0) < 1e-13);
  CHECK(specfun::gamma(5.0).imag() == 0.0);
}

TEST_CASE("gamma against high-precision values") {
  // mpmath, 40 digits (tests/oracles/constants.py)
  CHECK(rel_err(specfun::gamma({3, 4}), {0.0052255384713692141947, -0.17254707929430018772}) < 1e-12);
  CHECK(rel_err(specfun::gamma({-2.5, 0.5}), {-0.3338752035224323374, -0.20645730796360841492}) < 1e-12);
  CHECK(rel_err(specfun::gamma({0.25, 40}), {4.8318236203355450856e-28, 1.7560326729457916659e-28}) < 1e-12);
  CHECK(rel_err(specfun::gamma(50.0), 6.0828186403426e62) < 1e-12);
}

TEST_CASE("gamma poles") {
  CHECK_THROWS_AS(specfun::gamma(0.0), PoleError);
  CHECK_THROWS_AS(specfun::gamma(-3.0), PoleError);
  CHECK_NOTHROW(specfun::gamma({-3.0, 1e-9}));
}

TEST_CASE("gamma reflection formula on a grid") {
  for (double x = -4.75; x <= 5.0; x += 0.5) {
    for (double y = -6.0; y <= 6.0; y += 1.5) {
      const Complex z{x, y};
      const Complex r = specfun::gamma(z) * specfun::gamma(1.0 - z) * std::sin(kPi * z) / kPi;
      CHECK(std::abs(r - 1.0) <= 1e-10);
    }
  }
}

TEST_CASE("digamma") {
  const double g = kConstants.euler_gamma;
  CHECK(std::abs(digamma(1.0) + g) < 1e-14);
  CHECK(std::abs(digamma(5.0) - (-g + 1.0 + 0.5 + 1.0 / 3 + 0.25)) < 1e-14);
  CHECK(rel_err(digamma({0.3, -7}), {1.9454668402635380622, -1.5994088476567767548}) < 1e-13);
  CHECK(rel_err(digamma({-2.2, 45}), {3.80843890057387735465, 1.63072693378899102377}) < 1e-13);
}

TEST_CASE("euler_gamma equals minus the derivative of gamma at 1") {
  const double h = 1e-5;
  const double d = (specfun::gamma(1.0 + h).real() - specfun::gamma(1.0 - h).real()) / (2 * h);
  CHECK(std::abs(-d - kConstants.euler_gamma) <= 1e-8);
}

TEST_CASE("riemann_zeta special values") {
  CHECK(rel_err(riemann_zeta(2.0), kPi * kPi / 6) <= 1e-13);
  CHECK(std::abs(riemann_zeta(0.0) + 0.5) <= 1e-13);
  CHECK(std::abs(riemann_zeta(-1.0) + 1.0 / 12) <= 1e-13);
  CHECK(rel_err(riemann_zeta(3.0), 1.2020569031595942854) <= 1e-13);
  CHECK_THROWS_AS(riemann_zeta(1.0), PoleError);
}

TEST_CASE("riemann_zeta in the critical strip and at height") {
  CHECK(rel_err(riemann_zeta({0.5, 14}), {0.022241142609993589246, -0.1032581232664500579}) <= 1e-10);
  CHECK(rel_err(riemann_zeta({0.5, 100}), {2.6926198856813240905, -0.020386029602598161771}) <= 1e-10);
  CHECK(rel_err(riemann_zeta({-2.5, 40}), {-26.945810496095300892, -243.92570583329353365}) <= 1e-10);
  CHECK(rel_err(riemann_zeta({-10.5, 3}), {-0.469924500374471347635957654264, -0.349275549668033373733715464062}) <= 1e-12);
  CHECK(std::abs(riemann_zeta(-4.0)) == 0.0);
}

TEST_CASE("zeta derivative reproduces the frozen ratio at -1") {
  const ValueAndDerivative v = riemann_zeta_with_derivative(-1.0);
  // zeta'(-1) = 1/12 - log A (Glaisher), mpmath: -0.16542114370045092921
  CHECK(std::abs(v.derivative.real() + 0.16542114370045092921) <= 1e-13);
  CHECK(std::abs(v.derivative.real() / v.value.real() - kConstants.zeta_prime_ratio_at_minus1) <= 1e-12);
  CHECK(std::abs(kConstants.log_4pi_half - std::log(4 * kPi) / 2) <= 1e-15);
}

TEST_CASE("hurwitz_zeta") {
  CHECK(rel_err(hurwitz_zeta(3.0, 1.0), riemann_zeta(3.0)) <= 1e-12);
  CHECK(rel_err(hurwitz_zeta(2.0, 0.5), kPi * kPi / 2) <= 1e-12);
  CHECK(rel_err(hurwitz_zeta(2.0, 2.0), riemann_zeta(2.0) - 1.0) <= 1e-12);
  CHECK(rel_err(hurwitz_zeta({2.5, 3}, 0.3), {-17.845367541338890361, -9.5769005801285360174}) <= 1e-10);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, -1.0), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 0.5), PoleError);
}

TEST_CASE("hurwitz_zeta(s, 1) equals riemann_zeta on a grid") {
  for (double x = -3.0; x <= 4.0; x += 0.7) {
    for (double y = -60.0; y <= 60.0; y += 15.0) {
      const Complex s{x, y};
      if (s == Complex(1.0, 0.0)) continue;
      CHECK(rel_err(hurwitz_zeta(s, 1.0), riemann_zeta(s)) <= 1e-10);
    }
  }
}

TEST_CASE("completed_zeta") {
  CHECK(rel_err(completed_zeta(2.0), kPi / 6) <= 1e-13);
  const Complex s{0.3, 2.0};
  CHECK(std::abs(completed_zeta(s) - completed_zeta(1.0 - s)) <= 1e-10);
  CHECK(rel_err(completed_zeta(s), {-0.20717261339322476216, 0.043375669082548639749}) <= 1e-11);
  CHECK(std::abs(completed_zeta(0.5).imag()) <= 1e-12);
  CHECK_THROWS_AS(completed_zeta(0.0), PoleError);
  CHECK_THROWS_AS(completed_zeta(1.0), PoleError);
  // trivial zeros of zeta cancel the gamma poles
  CHECK(rel_err(completed_zeta(-2.0), completed_zeta(3.0)) <= 1e-12);
}

TEST_CASE("completed_zeta functional equation on random points of the strip") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> re(-2.0, 3.0);
  std::uniform_real_distribution<double> im(-50.0, 50.0);
  for (int i = 0; i < 100; ++i) {
    const Complex s{re(rng), im(rng)};
    const Complex a = completed_zeta(s);
    const Complex b = completed_zeta(1.0 - s);
    CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("log_deriv_completed_zeta") {
  SUBCASE("finite-difference oracle at s = 2") {
    const double h = 1e-5;
    const double fd = (std::log(completed_zeta(2.0 + h).real()) - std::log(completed_zeta(2.0 - h).real())) / (2 * h);
    CHECK(std::abs(log_deriv_completed_zeta(2.0).real() - fd) <= 1e-7);
    CHECK(std::abs(log_deriv_completed_zeta(2.0).real() + 1.430933768469999323774834) <= 1e-12);
  }
  SUBCASE("real on the real axis") {
    CHECK(std::abs(log_deriv_completed_zeta(0.5).imag()) <= 1e-10);
    CHECK(std::abs(log_deriv_completed_zeta(0.5).real()) <= 1e-12);
  }
  SUBCASE("termwise at s = 10") {
    const double g = kConstants.euler_gamma;
    const double psi5 = -g + 1.0 + 0.5 + 1.0 / 3 + 0.25;
    const double z10 = std::pow(kPi, 10) / 93555.0;
    double dz10 = 0.0;
    for (int n = 2000; n >= 2; --n) dz10 -= std::log(n) * std::pow(n, -10.0);
    const double expect = -std::log(kPi) / 2 + psi5 / 2 + dz10 / z10;
    CHECK(std::abs(log_deriv_completed_zeta(10.0).real() - expect) <= 1e-8 * std::abs(expect));
    CHECK(std::abs(expect - 0.1799975508459161288551017) <= 1e-13);
  }
  SUBCASE("odd under s -> 1 - s") {
    for (const Complex s : {Complex(-1.0, 7.0), Complex(2.0, 33.0), Complex(-1.0, -90.0), Complex(0.2, 0.1)}) {
      CHECK(std::abs(log_deriv_completed_zeta(s) + log_deriv_completed_zeta(1.0 - s)) <= 1e-9);
    }
  }
  SUBCASE("poles") {
    CHECK_THROWS_AS(log_deriv_completed_zeta(0.0), PoleError);
    CHECK_THROWS_AS(log_deriv_completed_zeta(1.0), PoleError);
  }
}

TEST_CASE("primes and Euler factors") {
  CHECK(primes_up_to(10) == std::vector<std::uint32_t>{2, 3, 5, 7});
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(10000).size() == 1229);
  const auto f = euler_product_factors(2.0, 10);
  REQUIRE(f.size() == 4);
  CHECK(rel_err(f[0], 4.0 / 3) < 1e-15);
}
