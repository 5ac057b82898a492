#include "doctest.h"

#include "surfstrat/maps.hpp"
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

static AffineParam ex1_pw() {
    AffineParam Q;
    Q.comp[0] = RatFunc(parse_poly("s^2"), parse_poly("s + t"));
    Q.comp[1] = RatFunc(parse_poly("s^2 + t^2 + 1"), parse_poly("s + t"));
    Q.comp[2] = RatFunc(parse_poly("t + 2*s"), parse_poly("s + t"));
    Q.num_index = {1, 2, 3};
    Q.origin = 4;
    return Q;
}

static AffineParam ex1_py() {
    AffineParam Q;
    Q.comp[0] = RatFunc(parse_poly("s^2"), parse_poly("s^2 + t^2 + 1"));
    Q.comp[1] = RatFunc(parse_poly("(t + 2*s)"), parse_poly("s^2 + t^2 + 1"));
    Q.comp[2] = RatFunc(parse_poly("(s + t)"), parse_poly("s^2 + t^2 + 1"));
    Q.num_index = {1, 3, 4};
    Q.origin = 2;
    return Q;
}

TEST_CASE("map_degree examples") {
    CHECK(map_degree(ex1_pw()) == 1);
    CHECK(map_degree(make_q("t^2", "t^4", "s")) == 2);
    CHECK(map_degree(make_q("t", "s", "t*s")) == 1);
    CHECK(map_degree(make_q("t*s", "t", "s^2")) == 1);  // whitney umbrella is proper
}

TEST_CASE("shift_parameters identity on golden example") {
    CHECK(find_shift(ex1_pw()) == 0);
    // denominator t: the line t = 0 passes through (0:1:0)
    AffineParam Q = make_q("s", "s^2", "s^3", "t");
    CHECK(find_shift(Q) == 1);
}

TEST_CASE("partial degrees") {
    CHECK(partial_degree(make_q("t", "s", "t*s")) == 1);
    CHECK(partial_degree(make_q("t*s", "t", "s^2")) == 2);
    CHECK(partial_degree(ex1_pw()) == 2);
}

TEST_CASE("g_poly cone detection") {
    AffineParam cone = make_q("t", "t*s", "t*s^2");
    PolyQ g = g_poly(cone, {Rational(0), Rational(0), Rational(0)});
    CHECK(g.degree_in({var("t"), var("s")}) > 0);
    // any off-surface point has g = 1
    PolyQ g2 = g_poly(cone, {Rational(1), Rational(1), Rational(1)});
    CHECK(g2 == poly_const(1));
}

TEST_CASE("off surface point verified") {
    AffineParam graph = make_q("t", "s", "t*s");
    auto A0 = off_surface_point(graph);
    ImplicitSurface S = implicitize(graph);
    CHECK(mult_translate(S, {A0[0], A0[1], A0[2]}) == 0);
    for (auto& c : A0) CHECK_FALSE(c.is_zero());

    auto A1 = off_surface_point(ex1_pw());
    ImplicitSurface S1 = implicitize(ex1_pw());
    CHECK(mult_translate(S1, {A1[0], A1[1], A1[2]}) == 0);
}

TEST_CASE("cache and degree identity on small instances") {
    for (auto Q : {make_q("t", "s", "t*s"), make_q("t*s", "t", "s^2"), ex1_pw()}) {
        SurfaceCache cache = build_cache(Q);
        ImplicitSurface S = implicitize(Q);
        CHECK(cache.deg_z == S.degree());
        CHECK(cache.n1 == S.degree() * cache.n2);
    }
}

TEST_CASE("golden example n1 n2") {
    SurfaceCache cache = build_cache(ex1_pw());
    CHECK(cache.n2 == 1);
    CHECK(cache.n1 == 4);
    CHECK(cache.deg_z == 4);
    // the classical reference point (1,1,1) is also a valid off-surface point
    PointAnalysis pa = analyze_point(ex1_pw(), {Rational(1), Rational(1), Rational(1)});
    CHECK(pa.g_is_one);
    CHECK(pa.m1 == 4);
}

TEST_CASE("multiplicity golden values") {
    AffineParam Pw = ex1_pw();
    SurfaceCache cache = build_cache(Pw);
    // (0:0:1) has multiplicity 3, computed in chart 2 at P_y(0,0) = (0,0,0)
    long m = multiplicity_at(ex1_py(), {Rational(0), Rational(0), Rational(0)}, cache);
    CHECK(m == 3);
    // off-surface point has multiplicity 0
    CHECK(multiplicity_at(Pw, cache.A0, cache) == 0);
}

TEST_CASE("multiplicity whitney umbrella") {
    AffineParam W = make_q("t*s", "t", "s^2");
    SurfaceCache cache = build_cache(W);
    CHECK(cache.deg_z == 3);
    CHECK(multiplicity_at(W, {Rational(0), Rational(0), Rational(0)}, cache) == 2);
    CHECK(multiplicity_at(W, {Rational(0), Rational(0), Rational(1)}, cache) == 2);
    CHECK(multiplicity_at(W, {Rational(1), Rational(1), Rational(1)}, cache) == 1);
    // cross-check against the oracle on sampled parameter points
    ImplicitSurface S = implicitize(W);
    for (long t0 = -2; t0 <= 2; t0++) {
        for (long s0 = -2; s0 <= 2; s0++) {
            std::array<Rational, 3> A{Rational(t0) * Rational(s0), Rational(t0),
                                      Rational(s0) * Rational(s0)};
            CHECK(multiplicity_at(W, A, cache) == mult_translate(S, {A[0], A[1], A[2]}));
        }
    }
}

TEST_CASE("multiplicity cone vertex flags") {
    AffineParam cone = make_q("t", "t*s", "t*s^2");
    SurfaceCache cache = build_cache(cone);
    CHECK(cache.deg_z == 2);
    bool cone_flag = false;
    long m = multiplicity_at(cone, {Rational(0), Rational(0), Rational(0)}, cache, &cone_flag);
    CHECK(m == 2);
    CHECK(cone_flag);
    m = multiplicity_at(cone, {Rational(1), Rational(1), Rational(1)}, cache, &cone_flag);
    CHECK_FALSE(cone_flag);
}

TEST_CASE("multiplicity at infinity via tilde chart") {
    // P~_{x1} of the golden example: (1+t^2+s^2, (t+2)*s, (1+t)*s)
    AffineParam T = make_q("1 + t^2 + s^2", "(t + 2)*s", "(1 + t)*s");
    SurfaceCache cache = build_cache(ex1_pw());
    long m = multiplicity_at(T, {Rational(1), Rational(0), Rational(0)}, cache);
    CHECK(m == 2);  // mult((0:1:0)) = 2
}

TEST_CASE("multiplicity invariant under parameter shift") {
    AffineParam W = make_q("t*s", "t", "s^2");
    SurfaceCache cache = build_cache(W);
    AffineParam W2 = shift_parameters(W, 3);
    SurfaceCache cache2 = build_cache(W2);
    CHECK(cache2.n1 == cache.n1);
    CHECK(cache2.n2 == cache.n2);
    for (auto A : {std::array<Rational, 3>{Rational(0), Rational(0), Rational(0)},
                   std::array<Rational, 3>{Rational(2), Rational(1), Rational(4)}}) {
        CHECK(multiplicity_at(W, A, cache) == multiplicity_at(W2, A, cache2));
    }
}

TEST_CASE("multiplicity over extension coordinates") {
    AffineParam W = make_q("t*s", "t", "s^2");
    SurfaceCache cache = build_cache(W);
    NFPtr qi = make_number_field(parse_poly("r^2 + 1"), var("r"), "i");
    NFElem i = NFElem::generator(qi);
    NFElem zero;
    // (0, 0, i) lies on the singular line of x^2 = y^2 z
    long m = multiplicity_at_nf(W, {zero, zero, i}, qi, cache);
    CHECK(m == 2);
}

TEST_CASE("reembed offpoint") {
    std::array<Rational, 3> A0{Rational(2), Rational(3), Rational(5)};
    auto B = reembed_offpoint(A0, 4, 2);  // (2:3:5:1) -> chart 2: (2/3, 5/3, 1/3)
    CHECK(B[0] == Rational(Int(2), Int(3)));
    CHECK(B[1] == Rational(Int(5), Int(3)));
    CHECK(B[2] == Rational(Int(1), Int(3)));
}
