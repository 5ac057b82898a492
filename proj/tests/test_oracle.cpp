#include "doctest.h"

#include "surfstrat/oracle.hpp"
#include "surfstrat/parse.hpp"

using namespace surfstrat;

static AffineParam make_q(const char* n1, const char* n2, const char* n3, const char* d = "1") {
    AffineParam Q;
    Q.comp[0] = RatFunc(parse_poly(n1), parse_poly(d));
    Q.comp[1] = RatFunc(parse_poly(n2), parse_poly(d));
    Q.comp[2] = RatFunc(parse_poly(n3), parse_poly(d));
    Q.num_index = {1, 2, 3};
    Q.origin = 4;
    return Q;
}

TEST_CASE("implicitize graph surface") {
    ImplicitSurface S = implicitize(make_q("t", "s", "t*s"));
    CHECK(S.f == parse_poly("x*y - z"));
    CHECK(S.degree() == 2);
    CHECK(mult_translate(S, {Rational(0), Rational(0), Rational(0)}) == 1);
    CHECK(mult_translate(S, {Rational(2), Rational(1), Rational(1)}) == 0);  // off surface
}

TEST_CASE("implicitize whitney umbrella") {
    ImplicitSurface S = implicitize(make_q("t*s", "t", "s^2"));
    CHECK(canonical(S.f) == canonical(parse_poly("x^2 - y^2*z")));
    CHECK(S.degree() == 3);
    CHECK(mult_translate(S, {Rational(0), Rational(0), Rational(0)}) == 2);
    CHECK(mult_translate(S, {Rational(1), Rational(1), Rational(1)}) == 1);
    CHECK(mult_translate(S, {Rational(0), Rational(0), Rational(1)}) == 2);
}

TEST_CASE("implicitize golden example quartic") {
    AffineParam Q;
    Q.comp[0] = RatFunc(parse_poly("s^2"), parse_poly("s + t"));
    Q.comp[1] = RatFunc(parse_poly("s^2 + t^2 + 1"), parse_poly("s + t"));
    Q.comp[2] = RatFunc(parse_poly("t + 2*s"), parse_poly("s + t"));
    ImplicitSurface S = implicitize(Q);
    CHECK(S.degree() == 4);
    CHECK(S.f.degree(var("x")) == 2);
    // (1,1,1) is the off-surface reference point used throughout
    CHECK(mult_translate(S, {Rational(1), Rational(1), Rational(1)}) == 0);
}

TEST_CASE("implicitize cone") {
    ImplicitSurface S = implicitize(make_q("t", "t*s", "t*s^2"));
    CHECK(S.degree() == 2);  // y^2 = x z
    CHECK(mult_translate(S, {Rational(0), Rational(0), Rational(0)}) == 2);
}

TEST_CASE("mult_translate over an extension") {
    ImplicitSurface S = implicitize(make_q("t*s", "t", "s^2"));
    NFPtr qi = make_number_field(parse_poly("r^2 + 1"), var("r"), "i");
    NFElem i = NFElem::generator(qi);
    NFElem zero, one = NFElem::from_base(qi, Rational(1));
    // (0, 0, i): on the singular line x=y=0 of x^2 = y^2 z
    CHECK(mult_translate(S, {zero, zero, i}, qi) == 2);
    CHECK(mult_translate(S, {one, i, zero}, qi) == 0);  // off the surface
}

TEST_CASE("oracle rejects oversized inputs") {
    CHECK_THROWS_AS(implicitize(make_q("t^9", "s", "t*s")), OracleError);
}
