#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reebforge/rational.hpp"

using reebforge::Rational;

TEST_CASE("construction normalizes sign and gcd") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, -7).den() == 1);
}

TEST_CASE("parse accepts p/q and integers") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK_FALSE(Rational::parse("").has_value());
    CHECK_FALSE(Rational::parse("1/0").has_value());
    CHECK_FALSE(Rational::parse("a/b").has_value());
    CHECK_FALSE(Rational::parse("1.5").has_value());
}

TEST_CASE("parse_decimal handles decimals exactly") {
    CHECK(Rational::parse_decimal("1.25") == Rational(5, 4));
    CHECK(Rational::parse_decimal("-0.5") == Rational(-1, 2));
    CHECK(Rational::parse_decimal("10") == Rational(10));
    CHECK(Rational::parse_decimal("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse_decimal("0.000") == Rational(0));
    CHECK_FALSE(Rational::parse_decimal("1.").has_value());
    CHECK_FALSE(Rational::parse_decimal("1.2.3").has_value());
}

TEST_CASE("ordering is exact") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(2, 6) == Rational(1, 3));
    CHECK(Rational(7, 2) > Rational(3));
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
}

TEST_CASE("str prints canonical p/q") {
    CHECK(Rational(3).str() == "3/1");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(0).str() == "0/1");
}
