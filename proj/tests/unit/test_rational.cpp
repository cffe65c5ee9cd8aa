#include <doctest.h>

#include "bargmann/rational.hpp"

using bargmann::Rational;
using bargmann::RationalPoly;

TEST_CASE("rational stays canonical") {
  const Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.to_string() == "-3/2");
  CHECK(Rational(10, 5).to_string() == "2");
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(3, 4)).to_string() == "1/2");
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational parse and conversions") {
  CHECK(Rational::parse("-7/21") == Rational(-1, 3));
  CHECK(Rational::parse("42") == Rational(42));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK(Rational(3, 8).to_double() == 0.375);
  CHECK(Rational(12).to_long() == 12);
  CHECK_THROWS(Rational(1, 2).to_long());
  CHECK(bargmann::pow(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK(bargmann::pow(Rational(2), -2) == Rational(1, 4));
  CHECK(bargmann::abs(Rational(-5, 7)) == Rational(5, 7));
}

TEST_CASE("big values do not overflow") {
  Rational f(1);
  for (int k = 1; k <= 40; ++k) f *= k;
  CHECK(f.to_string() == "815915283247897734345611269596115894272000000000");
}

TEST_CASE("polynomial arithmetic") {
  const RationalPoly one_minus_u{Rational(1), Rational(-1)};
  const RationalPoly sq = one_minus_u * one_minus_u;
  CHECK(sq == RationalPoly{1, -2, 1});
  CHECK(sq.degree() == 2);
  CHECK(sq(Rational(3)) == Rational(4));
  CHECK(sq.evaluate(0.5) == doctest::Approx(0.25));
  CHECK((sq - sq).is_zero());
  CHECK((sq - sq).degree() == -1);
  CHECK(RationalPoly::monomial(3, Rational(2)).coeff(3) == Rational(2));
  CHECK(RationalPoly::monomial(3).coeff(7) == Rational(0));
  CHECK(sq.to_string() == "1 - 2*t + t^2");
}
