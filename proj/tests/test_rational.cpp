#include "comprelie/error.hpp"
#include "comprelie/rational.hpp"

#include <doctest.h>

#include <sstream>

using comprelie::input_error;
using comprelie::Rational;

TEST_CASE("parse accepts integers and fractions") {
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-12") == Rational(-12));
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("3/-4") == Rational(-3, 4));
    CHECK(Rational::parse("-0") == Rational(0));
}

TEST_CASE("parse normalizes to lowest terms") {
    Rational r = Rational::parse("6/4");
    CHECK(r.numerator() == 3);
    CHECK(r.denominator() == 2);
    CHECK(Rational::parse("-6/-4") == Rational(3, 2));
    CHECK(Rational::parse("0/5") == Rational(0));
    CHECK(Rational::parse("0/5").denominator() == 1);
}

TEST_CASE("parse rejects malformed input") {
    for (const char* bad : {"", "x", "1.5", "1e3", "1//2", "/2", "1/", "- 1", " 1", "1 ",
                            "++1", "--1", "1/2/3", "3_4"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::parse(bad), input_error);
    }
}

TEST_CASE("zero denominators are input errors everywhere") {
    CHECK_THROWS_AS(Rational::parse("1/0"), input_error);
    CHECK_THROWS_AS(Rational::parse("0/0"), input_error);
    CHECK_THROWS_AS(Rational(1, 0), input_error);
    CHECK_THROWS_AS(Rational(3) / Rational(0), input_error);
}

TEST_CASE("constructor normalizes sign and gcd") {
    Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(-6, -4) == Rational(3, 2));
}

TEST_CASE("arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    // a classic floating-point trap, exact here
    Rational tenth(1, 10);
    CHECK(tenth + tenth + tenth == Rational(3, 10));
}

TEST_CASE("comparisons use the rational order") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(5) >= Rational(5));
    CHECK(Rational(1, 7) != Rational(1, 8));
}

TEST_CASE("str round trips through parse") {
    for (const char* text : {"0", "7", "-12", "3/4", "-3/4", "1000000000000000000000/7"}) {
        Rational r = Rational::parse(text);
        CHECK(Rational::parse(r.str()) == r);
    }
    CHECK(Rational(3, 2).str() == "3/2");
    CHECK(Rational(-3, 2).str() == "-3/2");
    CHECK(Rational(4).str() == "4");
    CHECK(Rational(0).str() == "0");
}

TEST_CASE("big values do not overflow") {
    Rational big = Rational::parse("123456789012345678901234567890");
    Rational r = big * big / big;
    CHECK(r == big);
    std::ostringstream os;
    os << Rational(22, 7);
    CHECK(os.str() == "22/7");
}

TEST_CASE("is_zero") {
    CHECK(Rational(0).is_zero());
    CHECK(Rational(0, 5).is_zero());
    CHECK_FALSE(Rational(1, 5).is_zero());
}
