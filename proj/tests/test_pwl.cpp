#include <doctest.h>

#include <stdexcept>

#include "walras/pwl.hpp"

using namespace walras;

namespace {
PwlCurve curve523() {
    // breakpoints (0,5), (2,3), (10,2)
    PwlCurve c;
    c.points = {{0, 5}, {2, 3}, {10, 2}};
    return c;
}
}  // namespace

TEST_CASE("interpolation is exact at and between breakpoints") {
    const PwlCurve c = curve523();
    CHECK(c.evaluate(0) == Rational(5));
    CHECK(c.evaluate(2) == Rational(3));
    CHECK(c.evaluate(10) == Rational(2));
    CHECK(c.evaluate(1) == Rational(4));  // midpoint of the first segment
    CHECK(c.evaluate(6) == Rational(5) / 2);
    CHECK(c.evaluate(Rational(1) / 3) == Rational(5) - Rational(1) / 3);
    CHECK(c.last_payment() == Rational(10));
}

TEST_CASE("evaluation outside the span throws") {
    const PwlCurve c = curve523();
    CHECK_THROWS_AS(c.evaluate(Rational(-1) / 2), std::domain_error);
    CHECK_THROWS_AS(c.evaluate(11), std::domain_error);
}

TEST_CASE("segment lookup prefers the left segment at interior breakpoints") {
    const PwlCurve c = curve523();
    CHECK(c.segment_index(0) == 0);
    CHECK(c.segment_index(1) == 0);
    CHECK(c.segment_index(2) == 0);  // left preference
    CHECK(c.segment_index(3) == 1);
    CHECK(c.segment_index(10) == 1);
}

TEST_CASE("shape violations are reported, not thrown") {
    PwlCurve single;
    single.points = {{0, 1}};
    CHECK(!single.shape_violations().empty());

    PwlCurve late_start;
    late_start.points = {{1, 5}, {2, 3}};
    CHECK(!late_start.shape_violations().empty());

    PwlCurve non_increasing_payment;
    non_increasing_payment.points = {{0, 5}, {2, 3}, {2, 1}};
    CHECK(!non_increasing_payment.shape_violations().empty());

    PwlCurve flat_utility;  // (0,5),(2,5): utilities must strictly decrease
    flat_utility.points = {{0, 5}, {2, 5}};
    CHECK(!flat_utility.shape_violations().empty());

    CHECK(curve523().shape_violations().empty());
}
