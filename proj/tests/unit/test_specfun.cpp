#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bargmann/specfun.hpp"

using namespace bargmann;
using doctest::Approx;

TEST_CASE("laguerre values") {
  CHECK(laguerre(0, 0.7, 3.3) == 1.0);
  CHECK(laguerre(2, 2, 0) == Approx(6.0));
  CHECK(laguerre(1, 0, 2) == Approx(-1.0));
  // mpmath, 40 digits
  CHECK(laguerre(7, 2.5, 13.3) == Approx(-87.221549424444476451).epsilon(1e-13));
  CHECK(laguerre(12, 0, 30) == Approx(-313710.94805194805195).epsilon(1e-12));
  CHECK_THROWS_AS(laguerre(2, -1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(laguerre(-1, 0.0, 0.5), std::invalid_argument);
}

TEST_CASE("laguerre exact coefficients") {
  CHECK(laguerre_exact(0, Rational(3)) == RationalPoly{1});
  CHECK(laguerre_exact(1, Rational(0)) == RationalPoly{1, -1});
  CHECK(laguerre_exact(2, Rational(0)) == RationalPoly{Rational(1), Rational(-2), Rational(1, 2)});
  // L_m^{(n-1)}(0) = Gamma(n+m)/(Gamma(m+1)Gamma(n)), m = 2, n = 3
  CHECK(laguerre_exact(2, Rational(2))(Rational(0)) == Rational(6));
}

TEST_CASE("script laguerre") {
  CHECK(script_laguerre(0, 1.5, 2.0) == Approx(std::exp(-1.0)));
  CHECK(script_laguerre(5, 2.5, 0.0) == Approx(1.0));
  CHECK(script_laguerre(1, 0, 2) == Approx(-std::exp(-1.0)));
  CHECK(script_laguerre(4, 1.5, 2.2) == Approx(-0.058144018779902248259).epsilon(1e-13));
}

TEST_CASE("normalized jacobi") {
  for (int k = 0; k <= 12; ++k) CHECK(jacobi_normalized(k, 0.5, 3.0, 1.0) == 1.0);
  CHECK(jacobi_normalized(1, 0, 0, 0.3) == Approx(0.3));
  const double g = 1.7;
  CHECK(jacobi_normalized(1, g, 0, -1) == Approx(-1.0 / (g + 1.0)));
  CHECK(jacobi_normalized(5, 1, 2, 0.3) == Approx(0.11556203124999999836).epsilon(1e-13));
}

TEST_CASE("disk polynomials") {
  const std::complex<double> xi(0.3, 0.4);
  CHECK(std::abs(disk_polynomial(3, 2, 0.5, 1.0) - 1.0) < 1e-14);
  CHECK(std::abs(disk_polynomial(4, 0, 0.5, xi) - std::pow(xi, 4)) < 1e-14);
  CHECK(std::abs(disk_polynomial(1, 1, 0, xi) - (2.0 * std::norm(xi) - 1.0)) < 1e-14);
  CHECK(std::abs(disk_polynomial(3, 1, 0.5, xi) - std::complex<double>(0.0875, -0.3)) < 1e-14);
  CHECK(std::abs(disk_polynomial(2, 0, 0.0, 0.0)) == 0.0);
  CHECK(std::abs(disk_polynomial(2, 5, 1.0, xi) - std::conj(disk_polynomial(5, 2, 1.0, xi))) < 1e-14);
  CHECK_THROWS_AS(disk_polynomial(1, 0, 0.0, {0.9, 0.5}), std::domain_error);
}

TEST_CASE("pochhammer binomial factorial") {
  CHECK(pochhammer(Rational(7, 3), 0) == Rational(1));
  CHECK(pochhammer(Rational(2), 3) == Rational(24));
  CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(pochhammer(2.0, 3) == 24.0);
  CHECK(factorial(10) == Rational(3628800));
  CHECK(binomial_general(9, 0) == Rational(1));
  CHECK(binomial_general(1, -1) == Rational(0));
  CHECK(binomial_general(3, 5) == Rational(0));
  CHECK(binomial_general(4, 2) == Rational(6));
  CHECK(binomial_general(-2, 3) == Rational(-4));
  CHECK(binomial_general(Rational(1, 2), 2) == Rational(-1, 8));
}

TEST_CASE("dimension of H(p,q)") {
  CHECK(dimension_hpq(3, 0, 0) == 1);
  CHECK(dimension_hpq(2, 1, 1) == 3);
  for (int p = 0; p < 8; ++p) CHECK(dimension_hpq(2, p, 0) == static_cast<std::uint64_t>(p + 1));
  for (int p = 0; p < 5; ++p) {
    for (int q = 0; q < 5; ++q) CHECK(dimension_hpq(4, p, q) == dimension_hpq(4, q, p));
  }
  // n = 3: d(3;1,0) = 3 (linear holomorphic functions of three variables)
  CHECK(dimension_hpq(3, 1, 0) == 3);
  CHECK_THROWS_AS(dimension_hpq(1, 1, 1), std::invalid_argument);
}

TEST_CASE("bessel J") {
  CHECK(bessel_j(0, 0) == 1.0);
  CHECK(bessel_j(1, 0) == 0.0);
  CHECK(bessel_j(0, 10) == Approx(-0.2459357644513483352).epsilon(1e-14));
  CHECK(bessel_j(1, 25.5) == Approx(-0.062048536491484101721).epsilon(1e-13));
  CHECK(bessel_j(2, 50) == Approx(-0.059712800794258820511).epsilon(1e-12));
  CHECK(bessel_j(5, 3.7) == Approx(0.09948541700833390963).epsilon(1e-14));
  CHECK(bessel_j(3, 40.25) == Approx(-0.12018237776850455358).epsilon(1e-12));
  for (double x : {0.5, 3.0, 11.0, 27.0, 49.0}) {
    for (int nu = 0; nu <= 4; ++nu) CHECK(std::abs(bessel_j(nu, x) - std::cyl_bessel_j(nu, x)) < 1e-12);
  }
}

TEST_CASE("terminating 1F1") {
  CHECK(hyp1f1_terminating(0, 2.5, 7.0) == 1.0);
  CHECK(hyp1f1_terminating(1, 4.0, 2.0) == Approx(0.5));
  CHECK_THROWS_AS(hyp1f1_terminating(3, -1.0, 2.0), std::domain_error);
  // Relation to Laguerre holds with bottom parameter alpha + 1.
  for (int k = 0; k <= 8; ++k) {
    for (double a : {1.0, 2.0, 3.0}) {
      for (double u : {0.0, 1.5, 4.0, 10.0}) {
        const double pref = factorial(k).to_double() * std::tgamma(a + 1) / std::tgamma(a + k + 1);
        CHECK(std::abs(hyp1f1_terminating(k, a + 1, u) - pref * laguerre(k, a, u)) <=
              1e-12 * std::max(1.0, std::abs(hyp1f1_terminating(k, a + 1, u))));
      }
    }
  }
  // Read with bottom parameter alpha the relation breaks: k = 1, alpha = 2, u = 1.
  CHECK(hyp1f1_terminating(1, 2.0, 1.0) == Approx(0.5));
  CHECK(1.0 * 2.0 / 6.0 * laguerre(1, 2.0, 1.0) == Approx(2.0 / 3.0));
}

TEST_CASE("terminating 3F2") {
  CHECK(hyp3f2_terminating(Rational(0), Rational(5), Rational(1, 3), Rational(2), Rational(7)) == Rational(1));
  CHECK(hyp3f2_terminating(Rational(-1), Rational(1, 2), Rational(3), Rational(2), Rational(2)) == Rational(5, 8));
  try {
    hyp3f2_terminating(Rational(-2), Rational(1), Rational(1), Rational(0), Rational(1));
    FAIL("expected PoleError");
  } catch (const PoleError& e) {
    CHECK(e.term_index() == 1);
  }
  // Saalschuetz: 3F2(-k, a, b; c, 1+a+b-c-k; 1) = (c-a)_k (c-b)_k / ((c)_k (c-a-b)_k)
  const Rational a(1, 2), b(5, 3), c(7, 2);
  for (int k = 0; k <= 6; ++k) {
    const Rational lhs = hyp3f2_terminating(Rational(-k), a, b, c, Rational(1) + a + b - c - Rational(k));
    const Rational rhs = pochhammer(c - a, k) * pochhammer(c - b, k) / (pochhammer(c, k) * pochhammer(c - a - b, k));
    CHECK(lhs == rhs);
  }
}
