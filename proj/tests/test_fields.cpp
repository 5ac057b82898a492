#include "doctest.h"

#include "surfstrat/algebra.hpp"
#include "surfstrat/parse.hpp"
#include "test_util.hpp"

using namespace surfstrat;
using surfstrat::testutil::Rng;
using surfstrat::testutil::random_poly;

TEST_CASE("number field arithmetic Q(i)") {
    NFPtr qi = make_number_field(parse_poly("r^2 + 1"), var("r"), "i");
    NFElem i = NFElem::generator(qi);
    NFElem one = NFElem::from_base(qi, Rational(1));
    NFElem a = one + i;
    CHECK((a * a) == i + i);                  // (1+i)^2 = 2i
    NFElem inv = a.inv();
    CHECK((a * inv) == one);
    CHECK((i * i) == -one);
    CHECK_THROWS(make_number_field(parse_poly("r^2 - 1"), var("r"), "a"));
}

TEST_CASE("number field polynomial evaluation") {
    NFPtr qi = make_number_field(parse_poly("r^2 + 1"), var("r"), "i");
    NFElem i = NFElem::generator(qi);
    PolyQ f = parse_poly("t^2 + s^2");
    // f(1, i) = 1 + i^2 = 0
    NFElem val = eval_nf(f, {{var("t"), NFElem::from_base(qi, Rational(1))}, {var("s"), i}}, qi);
    CHECK(val.is_zero());
}

TEST_CASE("ff_normalize reduction") {
    FunctionFieldCtx ctx = make_ffctx(parse_poly("t^2 + s^2"), var("t"));
    CHECK(ff_normalize(parse_poly("t^2"), ctx) == parse_poly("-s^2"));
    CHECK(ff_normalize(parse_poly("s"), ctx) == parse_poly("s"));
    CHECK(ff_normalize(parse_poly("t^3"), ctx) == parse_poly("-s^2*t"));
    CHECK(ff_normalize(parse_poly("t^2 + s^2"), ctx).is_zero());
}

TEST_CASE("ff_normalize ring homomorphism on monic contexts") {
    FunctionFieldCtx ctx = make_ffctx(parse_poly("t^3 + s*t + 1"), var("t"));
    Rng rng(55);
    std::vector<VarId> vars{var("t"), var("s"), var("h1")};
    for (int it = 0; it < 30; it++) {
        PolyQ f = random_poly(rng, vars, 4, 3);
        PolyQ g = random_poly(rng, vars, 4, 3);
        PolyQ nf = ff_normalize(f, ctx), ng = ff_normalize(g, ctx);
        CHECK(ff_normalize(f + g, ctx) == nf + ng);
        CHECK(ff_normalize(f * g, ctx) == ff_normalize(nf * ng, ctx));
        CHECK(ff_normalize(nf, ctx) == nf);  // idempotent
    }
}

TEST_CASE("gcd over a function field sees algebraic relations") {
    FunctionFieldCtx ctx = make_ffctx(parse_poly("ss^2 + tt^2"), var("tt"));
    PolyQ f = parse_poly("X1^2 + ss^2");    // == (X1-tt)(X1+tt) mod ss^2+tt^2
    PolyQ g = parse_poly("X1 - tt");
    PolyQ d = gcd_ff(f, g, ctx);
    CHECK(d.degree(var("X1")) == 1);
    // over Q the same pair is coprime
    CHECK(mgcd(f, g).degree(var("X1")) == 0);

    PolyQ r = resultant_ff(f, g, var("X1"), ctx);
    CHECK(r.is_zero());
    PolyQ r2 = resultant_ff(parse_poly("X1 - tt"), parse_poly("X1 - ss"), var("X1"), ctx);
    CHECK_FALSE(r2.is_zero());
}

TEST_CASE("content_primitive surface") {
    auto [c, p] = content_primitive(parse_poly("(s+1)*t^2 + (s+1)"), {var("t")});
    CHECK(c == parse_poly("s+1"));
    CHECK(p == parse_poly("t^2+1"));
    CHECK(c * p == parse_poly("(s+1)*t^2 + (s+1)"));
    CHECK_THROWS_AS(content_primitive(PolyQ(), {var("t")}), std::invalid_argument);

    // primitive part of primitive part is itself
    auto [c2, p2] = content_primitive(p, {var("t")});
    CHECK(p2 == p);
    CHECK(c2 == poly_const(1));
}
