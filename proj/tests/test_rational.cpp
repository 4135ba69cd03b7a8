#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dslap/rational.hpp"

using dslap::BigInt;
using dslap::Rational;

TEST_CASE("construction reduces and fixes the sign") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(0, -7) == Rational(0));
  CHECK(Rational(0).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic stays reduced with positive denominator") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 2000; ++iter) {
    const auto draw = [&]() {
      const long long num = static_cast<long long>(rng() % 2001) - 1000;
      const long long den = static_cast<long long>(rng() % 1000) + 1;
      return Rational(num, den);
    };
    const Rational a = draw(), b = draw();
    for (const Rational& r : {a + b, a - b, a * b}) {
      CHECK(r.den() > 0);
      CHECK(boost::multiprecision::gcd(BigInt(boost::multiprecision::abs(r.num())), r.den()) == 1);
    }
    if (!b.is_zero()) {
      const Rational q = a / b;
      CHECK(q * b == a);
    }
  }
}

TEST_CASE("comparisons are exact") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(7, 5) > 1);
  CHECK(Rational(1000000007LL) * Rational(1000000007LL) ==
        Rational(BigInt("1000000014000000049")));
}

TEST_CASE("inverse and pow") {
  CHECK(Rational(3, 7).inverse() == Rational(7, 3));
  CHECK(Rational(-3, 7).inverse() == Rational(-7, 3));
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK(pow(Rational(1, 2), 10) == Rational(1, 1024));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow(Rational(5), 0) == 1);
}

TEST_CASE("to_double handles huge magnitudes") {
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  BigInt big = 1;
  for (int i = 0; i < 300; ++i) big *= 10;  // 10^300
  const Rational r(big, big + 1);
  CHECK(r.to_double() == doctest::Approx(1.0).epsilon(1e-12));
  const Rational tiny(1, big);
  CHECK(tiny.to_double() == doctest::Approx(1e-300).epsilon(1e-6));
  // ratio of two overflowing values stays finite
  const Rational huge_ratio(big * big * 3, big * big);
  CHECK(huge_ratio.to_double() == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("str and parse round trip") {
  CHECK(Rational(13, 21).str() == "13/21");
  CHECK(Rational(-1, 3).str() == "-1/3");
  CHECK(Rational(4).str() == "4/1");
  CHECK(Rational::parse("13/21") == Rational(13, 21));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("42") == Rational(42));
  CHECK(Rational::parse("0.5") == Rational(1, 2));
  CHECK(Rational::parse("0.1") == Rational(1, 10));
  CHECK(Rational::parse("-2.25") == Rational(-9, 4));
  CHECK(Rational::parse("10") == Rational(10));
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS(Rational::parse("1/0"));
}
