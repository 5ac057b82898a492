#include "doctest.h"

#include "surfstrat/parse.hpp"
#include "surfstrat/polyops.hpp"
#include "test_util.hpp"

using namespace surfstrat;
using surfstrat::testutil::Rng;
using surfstrat::testutil::random_poly;
using surfstrat::testutil::sylvester_resultant;

TEST_CASE("gcd reference cases") {
    PolyQ t = poly_var("t"), s = poly_var("s");
    CHECK(mgcd(t * t - s * s, t - s) == t - s);
    PolyQ f = parse_poly("(s+1)*t^2 + (s+1)");
    CHECK(mgcd(f, PolyQ()) == canonical(f));
    CHECK(mgcd(PolyQ(), PolyQ()).is_zero());
    // canonical output: positive leading coefficient, integer-primitive
    CHECK(mgcd(-poly_const(2) * (t - s), poly_const(4) * (s - t)) == t - s);
}

TEST_CASE("content and primitive part") {
    PolyQ f = parse_poly("(s+1)*t^2 + (s+1)");
    PolyQ c = content_in(f, {var("t")});
    CHECK(c == parse_poly("s+1"));
    CHECK(primitive_part_in(f, {var("t")}) == parse_poly("t^2+1"));
    CHECK(c * primitive_part_in(f, {var("t")}) == f);

    PolyQ g = parse_poly("6*t^2 + 4*t");
    CHECK(content_in(g, {var("t")}) == poly_const(2));
    CHECK(primitive_part_in(g, {var("t")}) == parse_poly("3*t^2 + 2*t"));
}

TEST_CASE("resultant reference cases") {
    PolyQ x = poly_var("x"), t = poly_var("t"), s = poly_var("s");
    CHECK(resultant(x - poly_const(1), x * x - poly_const(2), var("x")) == poly_const(-1));
    CHECK(resultant(t * t + s, t + poly_const(1), var("t")) == s + poly_const(1));
    CHECK_THROWS(resultant(PolyQ(), PolyQ(), var("t")));
    // common factor => zero
    CHECK(resultant((t - s) * (t + s), t - s, var("t")).is_zero());
}

TEST_CASE("resultant matches Sylvester determinant") {
    Rng rng(7);
    std::vector<VarId> vars{var("t"), var("s")};
    VarId t = var("t");
    int done = 0;
    for (int it = 0; it < 200 && done < 60; it++) {
        PolyQ f = random_poly(rng, vars, 4, 2, true);
        PolyQ g = random_poly(rng, vars, 4, 2, true);
        if (f.degree(t) < 1 || g.degree(t) < 1) continue;
        PolyQ r1 = resultant(f, g, t);
        PolyQ r2 = sylvester_resultant(f, g, t);
        CHECK(r1 == r2);
        done++;
    }
    CHECK(done >= 40);
}

TEST_CASE("gcd multiplicative property") {
    Rng rng(11);
    std::vector<VarId> vars{var("t"), var("s"), var("v")};
    int done = 0;
    for (int it = 0; it < 200 && done < 50; it++) {
        PolyQ f = random_poly(rng, vars, 3, 2);
        PolyQ g = random_poly(rng, vars, 3, 2);
        PolyQ h = random_poly(rng, vars, 2, 2, true);
        if (f.is_zero() && g.is_zero()) continue;
        PolyQ lhs = mgcd(f * h, g * h);
        PolyQ rhs = canonical(h * mgcd(f, g));
        CHECK(lhs == rhs);
        done++;
    }
    CHECK(done >= 40);
}

TEST_CASE("resultant vanishes iff gcd has positive degree") {
    Rng rng(13);
    std::vector<VarId> vars{var("t"), var("s")};
    VarId t = var("t");
    int done = 0;
    for (int it = 0; it < 300 && done < 60; it++) {
        PolyQ f = random_poly(rng, vars, 3, 2, true);
        PolyQ g = random_poly(rng, vars, 3, 2, true);
        if (rng.range(0, 1)) {  // force a common factor half the time
            PolyQ h = random_poly(rng, vars, 2, 1, true);
            f *= h;
            g *= h;
        }
        if (f.degree(t) < 1 || g.degree(t) < 1) continue;
        bool res_zero = resultant(f, g, t).is_zero();
        bool gcd_pos = mgcd(f, g).degree(t) > 0;
        CHECK(res_zero == gcd_pos);
        done++;
    }
    CHECK(done >= 40);
}

TEST_CASE("squarefree part") {
    PolyQ t = poly_var("t"), s = poly_var("s");
    PolyQ f = (t - s).pow(3) * (t + s);
    PolyQ sf = squarefree_part(f, var("t"));
    CHECK(sf == canonical((t - s) * (t + s)));
}
