#include "doctest.h"

#include <random>

#include "manin/bigint.hpp"
#include "manin/rational.hpp"

using namespace manin;

TEST_CASE("bigint basic arithmetic") {
    CHECK(BigInt(0).str() == "0");
    CHECK(BigInt(-7).str() == "-7");
    CHECK((BigInt(123456789) * BigInt(987654321)).str() == "121932631112635269");
    CHECK((BigInt(2).pow(100)).str() == "1267650600228229401496703205376");
    CHECK((BigInt(7).pow(30) - BigInt(7).pow(30)).is_zero());
    CHECK(BigInt::from_string("-000123").str() == "-123");

    BigInt q, r;
    BigInt::divmod(BigInt(-17), BigInt(5), q, r);
    CHECK(q.str() == "-3");
    CHECK(r.str() == "-2");
    CHECK(BigInt::gcd(BigInt(48), BigInt(-18)).str() == "6");
}

TEST_CASE("bigint matches 64-bit arithmetic on random values") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 500; ++i) {
        long long a = static_cast<long long>(rng() % 2000001) - 1000000;
        long long b = static_cast<long long>(rng() % 2000001) - 1000000;
        CHECK((BigInt(a) + BigInt(b)).str() == std::to_string(a + b));
        CHECK((BigInt(a) - BigInt(b)).str() == std::to_string(a - b));
        CHECK((BigInt(a) * BigInt(b)).str() == std::to_string(a * b));
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).str() == std::to_string(a / b));
            CHECK((BigInt(a) % BigInt(b)).str() == std::to_string(a % b));
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("bigint long division round-trips") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        BigInt a = BigInt(static_cast<long long>(rng())).pow(3);
        BigInt b = BigInt(static_cast<long long>(rng() % 100000 + 1));
        if (rng() % 2) b = -b;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
    }
}

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, 5).str() == "0/1");
    CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
    CHECK((Rational(7, 2) * Rational(2, 7)).str() == "1/1");
    CHECK((Rational(7, 2).pow(3)).str() == "343/8");
    CHECK((Rational(7, 2).pow(-2)).str() == "4/49");
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK(Rational(-5, 3).floor().str() == "-2");
    CHECK(Rational(-5, 3).ceil().str() == "-1");
    CHECK(Rational(6, 3).is_integer());
}

TEST_CASE("rational parsing is exact and strict") {
    CHECK(Rational::from_string("7/2").str() == "7/2");
    CHECK(Rational::from_string("-14/-4").str() == "7/2");
    CHECK(Rational::from_string("12").str() == "12/1");
    CHECK_THROWS_AS(Rational::from_string("3.5"), parse_error);
    CHECK_THROWS_AS(Rational::from_string("1/2/3"), parse_error);
    CHECK_THROWS_AS(Rational::from_string(""), parse_error);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), error);
}
