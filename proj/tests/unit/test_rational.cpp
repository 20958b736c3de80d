#include "doctest.h"
#include "ssz/rational.hpp"

using ssz::Rational;

TEST_CASE("normalisation and printing") {
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(-6, -4).str() == "3/2");
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(8, 4).str() == "2");
}

TEST_CASE("parsing") {
    CHECK(Rational::parse("31/30") == Rational(31, 30));
    CHECK(Rational::parse("2.5") == Rational(5, 2));
    CHECK(Rational::parse("-0.25") == Rational(-1, 4));
    CHECK(Rational::parse("17") == Rational(17));
    CHECK_THROWS_AS(Rational::parse("abc"), ssz::InvalidArgument);
    CHECK_THROWS_AS(Rational::parse("1/0"), ssz::InvalidArgument);
}

TEST_CASE("floor, ceil and ordering") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
}

TEST_CASE("overflow is reported") {
    const Rational big(INT64_MAX / 2);
    CHECK_THROWS_AS(big * big, ssz::OutOfRange);
}
