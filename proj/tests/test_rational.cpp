#include "doctest.h"

#include "surfstrat/rational.hpp"

using namespace surfstrat;

TEST_CASE("rational canonical form") {
    Rational a(Int(6), Int(-4));
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(a.str() == "-3/2");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(Int(0), Int(7)) == Rational(0));
    CHECK_THROWS(Rational(Int(1), Int(0)));
}

TEST_CASE("rational arithmetic") {
    Rational a(1), b(Int(1), Int(3));
    CHECK((a + b).str() == "4/3");
    CHECK((a - b).str() == "2/3");
    CHECK((b * b).str() == "1/9");
    CHECK((a / b).str() == "3");
    CHECK(b.inv().str() == "3");
    CHECK(Rational(Int(-2), Int(5)).pow(2).str() == "4/25");
    CHECK(Rational(Int(-2), Int(5)).pow(-1).str() == "-5/2");
    CHECK(Rational::from_string("10/15").str() == "2/3");
}

TEST_CASE("rational gcd convention") {
    CHECK(rat_gcd(Rational(6), Rational(4)).str() == "2");
    CHECK(rat_gcd(Rational(Int(1), Int(2)), Rational(Int(1), Int(3))).str() == "1/6");
    CHECK(rat_gcd(Rational(0), Rational(-5)).str() == "5");
    CHECK(rat_gcd(Rational(0), Rational(0)).is_zero());
}
