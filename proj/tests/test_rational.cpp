#include "bindet/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace bindet;

TEST_CASE("construction normalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(-3, 6).denominator() == 2);
    CHECK(Rational(-3, 6).numerator() == -1);
    CHECK_THROWS_AS(Rational(1, 0), pole_error);
}

TEST_CASE("parse and str round-trip") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-7/14") == Rational(-1, 2));
    CHECK(Rational(22, 7).str() == "22/7");
    CHECK(Rational(-8, 4).str() == "-2");
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS_AS(Rational::parse("1/0"), pole_error);
}

TEST_CASE("exactness: random inverses multiply to one") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> d(-1000000, 1000000);
    for (int i = 0; i < 200; ++i) {
        long p = d(rng), q = d(rng);
        if (p == 0 || q == 0) continue;
        Rational r(p, q);
        CHECK(r * r.inverse() == Rational(1));
        CHECK((r / r) == Rational(1));
    }
}

TEST_CASE("arithmetic and comparisons") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(3, 4) * Rational(2, 3) == Rational(1, 2));
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK(Rational(7).pow(-2) == Rational(1, 49));
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK_THROWS_AS(Rational(1) / Rational(0), pole_error);
}

TEST_CASE("factorial and helpers") {
    CHECK(Rational::factorial(0) == Rational(1));
    CHECK(Rational::factorial(5) == Rational(120));
    CHECK(pow2(-3) == Rational(1, 8));
    CHECK(parity_sign(-3) == -1);
    CHECK(parity_sign(-4) == 1);
}
