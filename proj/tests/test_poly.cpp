#include "doctest.h"

#include "surfstrat/parse.hpp"
#include "surfstrat/poly.hpp"
#include "test_util.hpp"

using namespace surfstrat;
using surfstrat::testutil::Rng;
using surfstrat::testutil::random_poly;

TEST_CASE("poly basics") {
    PolyQ t = poly_var("t"), s = poly_var("s");
    PolyQ f = t * t - s * s;
    CHECK(f.degree(var("t")) == 2);
    CHECK(f.total_degree() == 2);
    CHECK(f.str() == "t^2 - s^2");
    CHECK((f + s * s) == t * t);
    CHECK((t - t).is_zero());
    CHECK(f.subst(var("t"), s) .is_zero());
    CHECK(poly_const(0).is_zero());
}

TEST_CASE("poly parse") {
    PolyQ p = parse_poly("t^2 - 2*t*s + 1/2");
    CHECK(p.degree(var("t")) == 2);
    CHECK(p.str() == "t^2 - 2*t*s + 1/2");
    CHECK_THROWS_AS(parse_poly("2t"), ParseError);
    CHECK_THROWS_AS(parse_poly("t +"), ParseError);
    CHECK_THROWS_AS(parse_poly("(t"), ParseError);
    CHECK(parse_poly("-t^2 + (s - 1)^2").degree(var("s")) == 2);
    std::set<std::string> ok{"t", "s", "v"};
    CHECK_THROWS_AS(parse_poly("q + 1", ok), ParseError);
}

TEST_CASE("poly division exact") {
    PolyQ t = poly_var("t"), s = poly_var("s");
    PolyQ f = (t + s) * (t - s) * (t + poly_const(3));
    auto q = f.divide_exact(t + s);
    REQUIRE(q.has_value());
    CHECK(*q == (t - s) * (t + poly_const(3)));
    CHECK_FALSE(f.divide_exact(t + poly_const(1)).has_value());
}

TEST_CASE("pseudo division invariant") {
    Rng rng(42);
    std::vector<VarId> vars{var("t"), var("s")};
    VarId t = var("t");
    for (int it = 0; it < 60; it++) {
        PolyQ f = random_poly(rng, vars, 5, 3);
        PolyQ g = random_poly(rng, vars, 4, 2, true);
        if (g.degree(t) < 0 || g.degree(t) > f.degree(t)) continue;
        if (f.is_zero()) continue;
        PolyQ q, r;
        PolyQ::pseudo_divrem(f, g, t, q, r);
        long m = f.degree(t), n = g.degree(t);
        PolyQ lhs = f * g.lc_in(t).pow(m - n + 1);
        CHECK(lhs == q * g + r);
        CHECK(r.degree(t) < g.degree(t));
    }
}

TEST_CASE("poly substitution and derivative") {
    PolyQ t = poly_var("t"), s = poly_var("s");
    PolyQ f = t.pow(3) * s + s * s;
    CHECK(f.derivative(var("t")) == poly_const(3) * t * t * s);
    CHECK(f.derivative(var("s")) == t.pow(3) + poly_const(2) * s);
    PolyQ g = f.subst(var("t"), s + poly_const(1));
    CHECK(g == (s + poly_const(1)).pow(3) * s + s * s);
    std::map<VarId, PolyQ> swap{{var("t"), s}, {var("s"), t}};
    CHECK(f.subst_many(swap) == s.pow(3) * t + t * t);
}

TEST_CASE("coefficients_wrt groups") {
    PolyQ t = poly_var("t"), s = poly_var("s"), h = poly_var("h1");
    PolyQ f = (s + h) * t * t + s * h;
    auto groups = f.coefficients_wrt({var("t")});
    REQUIRE(groups.size() == 2);
    CHECK(groups[0].second == s * h);
    CHECK(groups[1].second == s + h);
}
