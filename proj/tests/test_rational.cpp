#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "netcf/rational.hpp"

using netcf::Rational;

TEST_CASE("rational arithmetic stays in lowest terms") {
    Rational a(2, 4);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);

    Rational b(-6, -9);
    CHECK(b.num() == 2);
    CHECK(b.den() == 3);

    Rational c(3, -6);
    CHECK(c.num() == -1);
    CHECK(c.den() == 2);

    CHECK((a + b) == Rational(7, 6));
    CHECK((a - b) == Rational(-1, 6));
    CHECK((a * b) == Rational(1, 3));
    CHECK((a / b) == Rational(3, 4));
    CHECK(-a == Rational(-1, 2));
}

TEST_CASE("rational ordering is exact") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(2, 3) > Rational(1, 2));
    CHECK(Rational(2, 6) == Rational(1, 3));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational::min(Rational(5, 3), Rational(7, 4)) == Rational(5, 3));
    CHECK(Rational::max(Rational(5, 3), Rational(7, 4)) == Rational(7, 4));
}

TEST_CASE("rational parse and print round trip") {
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("5/1") == Rational(5));
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational(7, 3).str() == "7/3");
    CHECK(Rational(4).str() == "4");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("rational errors") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    // 2^62 * 4 does not fit an int64 numerator after normalization
    CHECK_THROWS_AS(Rational(1LL << 62) * Rational(4), std::overflow_error);
}

TEST_CASE("rational arithmetic matches integer cross-multiplication on random values") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 2000; ++iter) {
        long long an = (long long)(rng() % 2001) - 1000;
        long long ad = (long long)(rng() % 50) + 1;
        long long bn = (long long)(rng() % 2001) - 1000;
        long long bd = (long long)(rng() % 50) + 1;
        Rational a(an, ad), b(bn, bd);
        Rational s = a + b;
        // exact cross-check: s == (an*bd + bn*ad) / (ad*bd)
        CHECK(s * Rational(ad * bd) == Rational(an * bd + bn * ad));
        CHECK(((a < b) || (a == b) || (a > b)));
        CHECK((a < b) == (an * bd < bn * ad));
    }
}
