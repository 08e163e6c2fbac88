#include <catch2/catch_amalgamated.hpp>

#include "polyfol/rational.hpp"

using namespace polyfol;

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-2") == Rational(-2));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("-1.5") == Rational(-3, 2));
    CHECK(parse_rational("10/4") == Rational(5, 2));
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1.2/3"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("rational complex field operations") {
    RationalComplex a(Rational(1), Rational(2));   // 1 + 2i
    RationalComplex b(Rational(3), Rational(-1));  // 3 - i
    CHECK((a / b) * b == a);
    CHECK(a * inverse(a) == RationalComplex(1));
    CHECK((a - a).is_zero());
    CHECK(a.conj().im == Rational(-2));
    CHECK(a.norm2() == Rational(5));
    CHECK(a.pow(3) == a * a * a);
    CHECK_THROWS(a / RationalComplex(0));
}

TEST_CASE("rational reconstruction of floating-point ratios") {
    auto r = reconstruct_rational(2.0);
    REQUIRE(r.found);
    CHECK(r.num == 2);
    CHECK(r.den == 1);

    r = reconstruct_rational(3.0 / 7.0);
    REQUIRE(r.found);
    CHECK(r.num == 3);
    CHECK(r.den == 7);

    // irrational: no small-denominator hit
    r = reconstruct_rational(std::sqrt(2.0));
    CHECK_FALSE(r.found);

    // near-rational within tolerance
    r = reconstruct_rational(0.5 + 1e-13);
    REQUIRE(r.found);
    CHECK(r.num == 1);
    CHECK(r.den == 2);
}
