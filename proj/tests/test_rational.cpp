#include <catch2/catch.hpp>

#include "test_support.hpp"

using namespace kstab;

TEST_CASE("rational canonical form") {
  Rational r(2, 4);
  CHECK(r.numerator() == 1);
  CHECK(r.denominator() == 2);

  Rational neg(3, -6);
  CHECK(neg.numerator() == -1);
  CHECK(neg.denominator() == 2);

  CHECK(Rational(0, 5) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational arithmetic and comparison") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(a > b);
  CHECK((-a).sign() == -1);
  CHECK(Rational(-7, 2).abs() == Rational(7, 2));
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(5).is_integer());
  CHECK_FALSE(a.is_integer());
  CHECK_THROWS_AS(a / Rational(0), Error);
  CHECK_THROWS_AS(Rational(0).inverse(), Error);
}

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse(" 12 ") == Rational(12));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK(Rational(3, 4).str() == "3/4");
  CHECK(Rational(-5).str() == "-5");

  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  try {
    Rational::parse("1/0");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
  }
  CHECK_THROWS_AS(Rational::parse("a/b"), Error);
  CHECK_THROWS_AS(Rational::parse(""), Error);
}

TEST_CASE("big values stay exact") {
  Rational big = Rational(1);
  for (int i = 1; i <= 40; ++i) big *= Rational(i, i + 1);
  CHECK(big == Rational(1, 41));
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(binomial(50, 25) == BigInt("126410606437752"));
}
