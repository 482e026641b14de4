#include "qgenus/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qgenus;

TEST_CASE("canonical form: lowest terms, positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2).num() == BigInt(-1));
    CHECK(Rational(1, -2).den() == BigInt(2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(0, 7).is_zero());
    CHECK(Rational(0, 7).den() == BigInt(1));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("exact arithmetic") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);

    // no drift over many operations
    Rational sum = 0;
    for (int n = 1; n <= 50; ++n)
        sum += Rational(1, n);
    Rational back = sum;
    for (int n = 1; n <= 50; ++n)
        back -= Rational(1, n);
    CHECK(back.is_zero());
}

TEST_CASE("powers") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2).pow(-3) == Rational(1, 8));
    CHECK(Rational::pow2(14) == Rational(16384));
    CHECK(Rational::pow2(-3) == Rational(1, 8));
    CHECK(Rational::pow2(0) == Rational(1));
    CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("integrality and divisibility") {
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).as_integer() == BigInt(2));
    CHECK_FALSE(Rational(1, 2).is_integer());
    CHECK_THROWS_AS(Rational(1, 2).as_integer(), std::domain_error);
    CHECK(divides(BigInt(256), Rational(-256)));
    CHECK(divides(BigInt(256), Rational(0)));
    CHECK_FALSE(divides(BigInt(256), Rational(128)));
    CHECK_FALSE(divides(BigInt(2), Rational(1, 2)));
}

TEST_CASE("printing") {
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(-16).str() == "-16");
}
