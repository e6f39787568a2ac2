#include <doctest.h>

#include <random>

#include "walras/rational.hpp"

using namespace walras;

TEST_CASE("parse accepts integers and fractions") {
    CHECK(*parse_rational("3") == Rational(3));
    CHECK(*parse_rational("-7") == Rational(-7));
    CHECK(*parse_rational("0") == Rational(0));
    CHECK(*parse_rational("-5/2") == Rational(-5) / 2);
    CHECK(*parse_rational("22/7") == Rational(22) / 7);
}

TEST_CASE("parse normalizes to lowest terms") {
    const Rational q = *parse_rational("4/6");
    CHECK(q == Rational(2) / 3);
    CHECK(to_string(q) == "2/3");
    CHECK(to_string(*parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(*parse_rational("0/17")) == "0");
}

TEST_CASE("parse rejects malformed text") {
    CHECK(!parse_rational(""));
    CHECK(!parse_rational("1/0"));
    CHECK(!parse_rational("a"));
    CHECK(!parse_rational("1.5"));
    CHECK(!parse_rational("1/"));
    CHECK(!parse_rational("/2"));
    CHECK(!parse_rational("1/-2"));
    CHECK(!parse_rational("1 / 2"));
    CHECK(!parse_rational("2/4/8"));
}

TEST_CASE("rendering uses a bare integer when the denominator is 1") {
    CHECK(to_string(Rational(7)) == "7");
    CHECK(to_string(Rational(-3) / 4) == "-3/4");
    CHECK(to_string(Rational(8) / 4) == "2");
}

TEST_CASE("parse and print round trip on random rationals") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 500; ++t) {
        const long num = long(rng() % 2001) - 1000;
        const long den = 1 + long(rng() % 999);
        const Rational q = Rational(num) / den;
        CHECK(*parse_rational(to_string(q)) == q);
    }
}

TEST_CASE("arithmetic stays exact where doubles would drift") {
    Rational third = Rational(1) / 3;
    Rational sum = 0;
    for (int i = 0; i < 3000; ++i) sum += third;
    CHECK(sum == Rational(1000));
}
