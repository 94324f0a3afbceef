#include <cstdint>
#include <limits>

#include "doctest.h"
#include "latcoh/rational.hpp"
#include "test_support.hpp"

using namespace latcoh;

TEST_CASE("checked arithmetic rejects overflow") {
    const int64_t big = std::numeric_limits<int64_t>::max();
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_sub(2, 5) == -3);
    CHECK(checked_mul(-4, 6) == -24);
    CHECK_ERR(checked_add(big, 1), Err::Overflow);
    CHECK_ERR(checked_sub(std::numeric_limits<int64_t>::min(), 1), Err::Overflow);
    CHECK_ERR(checked_mul(big, 2), Err::Overflow);
}

TEST_CASE("rational normalization and ordering") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6).num() == -1);
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK_ERR(Rational(1, 0), Err::BadInput);
}

TEST_CASE("rational arithmetic is exact") {
    Rational a(1, 6), b(1, 10);
    CHECK(a + b == Rational(4, 15));
    CHECK(a - b == Rational(1, 15));
    CHECK(a * b == Rational(1, 60));
    CHECK(a / b == Rational(5, 3));
    CHECK(-a == Rational(-1, 6));
    CHECK_ERR(a / Rational(0), Err::BadInput);
}

TEST_CASE("floor and integer accessors") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-4, 2).floor() == -2);
    CHECK(Rational(5).is_integer());
    CHECK(Rational(5).as_integer() == 5);
    CHECK_FALSE(Rational(5, 3).is_integer());
    CHECK_ERR(Rational(5, 3).as_integer(), Err::Internal);
}

TEST_CASE("string round trip") {
    CHECK(Rational(10, 3).str() == "10/3");
    CHECK(Rational(-4).str() == "-4");
    CHECK(Rational::parse("10/3") == Rational(10, 3));
    CHECK(Rational::parse("-4") == Rational(-4));
    CHECK(Rational::parse("-9/6") == Rational(-3, 2));
    CHECK_ERR(Rational::parse("1/2/3"), Err::BadInput);
    CHECK_ERR(Rational::parse("x"), Err::BadInput);
    CHECK_ERR(Rational::parse(""), Err::BadInput);
}
