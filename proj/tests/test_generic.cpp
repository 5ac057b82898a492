#include "doctest.h"

#include "surfstrat/generic.hpp"
#include "surfstrat/oracle.hpp"
#include "surfstrat/parse.hpp"

#include <algorithm>

using namespace surfstrat;

static ProjParam ex1() {
    auto r = validate({parse_poly("s^2"), parse_poly("s^2 + t^2 + v^2"),
                       parse_poly("(t + 2*s)*v"), parse_poly("(s + t)*v")});
    return std::get<ProjParam>(r);
}

static bool has_curve(const VarietyDesc& v, const char* poly) {
    PolyQ p = canonical(parse_poly(poly));
    return std::any_of(v.curves.begin(), v.curves.end(), [&](const PolyQ& c) { return c == p; });
}

TEST_CASE("golden guard sets") {
    ProjParam P = ex1();
    AffineParam Pw = dehomogenize(P, 4, Flavor::affine);
    SurfaceCache cache = build_cache(Pw);
    GenericOutcome out = generic_g_and_guards(Pw, &cache);
    REQUIRE_FALSE(out.plane);
    const GuardSets& g = out.guards;

    CHECK(g.K_gcd == parse_poly("tt + ss"));
    CHECK(canonical(g.upsilon2) ==
          canonical(parse_poly("(ss + tt) * h2 * ss * (h2 - ss)")));
    CHECK(g.m1_generic == 3);  // n1 - n2 = 4 - 1
    CHECK(g.cardJ == 6);
    CHECK(canonical(g.a_content) == canonical(parse_poly("(ss + tt)^2 * (t - tt)")));

    // Delta_0^* = {tt + ss = 0}
    REQUIRE(g.delta[0].curves.size() == 1);
    CHECK(has_curve(g.delta[0], "tt + ss"));
    CHECK(g.delta[0].points.empty());
    // Delta_1^* = Delta_0^* union {tt = 0}
    CHECK(g.delta[1].curves.size() == 2);
    CHECK(has_curve(g.delta[1], "tt + ss"));
    CHECK(has_curve(g.delta[1], "tt"));
    // Delta_2^* = Delta_0^*
    CHECK(g.delta[2].curves.size() == 1);
    CHECK(has_curve(g.delta[2], "tt + ss"));
    // Delta_3^* = {ss = 0}
    CHECK(g.delta[3].curves.size() == 1);
    CHECK(has_curve(g.delta[3], "ss"));
    // Delta_4^* = {ss^2 + tt^2 = 0} union Delta_0^*
    CHECK(g.delta[4].curves.size() == 2);
    CHECK(has_curve(g.delta[4], "ss^2 + tt^2"));
    CHECK(has_curve(g.delta[4], "tt + ss"));

    // Delta^* = the four lines plus the conjugate pair
    CHECK(g.delta_star.curves.size() == 4);
    CHECK(has_curve(g.delta_star, "ss"));
    CHECK(has_curve(g.delta_star, "tt"));
    CHECK(has_curve(g.delta_star, "tt + ss"));
    CHECK(has_curve(g.delta_star, "ss^2 + tt^2"));
    CHECK(g.delta_star.points.empty());
}

TEST_CASE("plane detection through the generic run") {
    auto r = validate({parse_poly("t*v"), parse_poly("s*v"), parse_poly("t*v + s*v + v^2"),
                       parse_poly("v^2")});
    ProjParam P = std::get<ProjParam>(r);
    AffineParam Pw = dehomogenize(P, 4, Flavor::affine);
    CHECK(is_plane_generic(Pw));

    ProjParam E = ex1();
    CHECK_FALSE(is_plane_generic(dehomogenize(E, 4, Flavor::affine)));
}

TEST_CASE("golden curve verdicts level 1") {
    ProjParam P = ex1();
    AffineParam Pw = dehomogenize(P, 4, Flavor::affine);
    SurfaceCache cache = build_cache(Pw);

    // line s = 0 maps to double points (lambda != 0)
    CurveVerdict v1 = curve_analyze(Pw, parse_poly("ss"), cache);
    CHECK(v1.generic_mult == 2);
    CHECK_FALSE(v1.cone_locus);
    bool has_origin = false;
    for (auto& p : v1.exceptional) {
        if (p.is_rational() && p.coords[0].is_zero() && p.coords[1].is_zero()) has_origin = true;
    }
    CHECK(has_origin);

    // line t = 0 maps to simple points (lambda != 0)
    CurveVerdict v2 = curve_analyze(Pw, parse_poly("tt"), cache);
    CHECK(v2.generic_mult == 1);

    // the auxiliary map degrees along the curves
    CHECK(v1.m1 == 2);
    CHECK(v2.m1 == 3);

    // the conjugate pair ss^2 + tt^2 through the function field
    CurveVerdict v3 = curve_analyze(Pw, parse_poly("ss^2 + tt^2"), cache);
    CHECK(v3.method == "function-field");
    CHECK(v3.generic_mult == 1);
    CHECK(v3.m1 == 3);
}

TEST_CASE("parametrized and function-field routes agree") {
    ProjParam P = ex1();
    AffineParam Pw = dehomogenize(P, 4, Flavor::affine);
    SurfaceCache cache = build_cache(Pw);
    for (const char* c : {"ss", "tt"}) {
        CurveVerdict a = curve_analyze(Pw, parse_poly(c), cache, false);
        CurveVerdict b = curve_analyze(Pw, parse_poly(c), cache, true);
        CHECK(a.method != b.method);
        CHECK(a.generic_mult == b.generic_mult);
        CHECK(a.m1 == b.m1);
    }
    // a conic with a rational point, on the whitney umbrella chart
    auto r = validate({parse_poly("t*s"), parse_poly("t*v"), parse_poly("s^2"), parse_poly("v^2")});
    ProjParam W = std::get<ProjParam>(r);
    AffineParam Ww = dehomogenize(W, 4, Flavor::affine);
    SurfaceCache wc = build_cache(Ww);
    PolyQ conic = parse_poly("tt^2 + ss^2 - 1");
    CurveVerdict a = curve_analyze(Ww, conic, wc, false);
    CurveVerdict b = curve_analyze(Ww, conic, wc, true);
    CHECK(a.method == "conic-param");
    CHECK(b.method == "function-field");
    CHECK(a.generic_mult == b.generic_mult);
}

TEST_CASE("golden level-2 curve via chart 3") {
    ProjParam P = ex1();
    AffineParam Pw = dehomogenize(P, 4, Flavor::affine);
    AffineParam Pz = dehomogenize(P, 3, Flavor::affine);
    SurfaceCache cache = build_cache(Pw);
    CurveVerdict v = curve_analyze(Pz, parse_poly("ss + tt"), cache);
    CHECK(v.generic_mult == 1);
}

TEST_CASE("golden zero-dimensional point via chart 2") {
    ProjParam P = ex1();
    AffineParam Pw = dehomogenize(P, 4, Flavor::affine);
    AffineParam Py = dehomogenize(P, 2, Flavor::affine);
    SurfaceCache cache = build_cache(Pw);
    AlgPoint origin;
    origin.coords = {NFElem(), NFElem()};
    CHECK(multiplicity_at_point(Py, origin, cache) == 3);
}

TEST_CASE("golden infinity family") {
    ProjParam P = ex1();
    AffineParam Pw = dehomogenize(P, 4, Flavor::affine);
    AffineParam hat1 = dehomogenize(P, 1, Flavor::hat);
    SurfaceCache cache = build_cache(Pw);
    InfinityFamily fam = infinity_family_analyze(hat1, cache);
    CHECK(fam.generic_mult == 2);
    // exceptional lambdas include 0, 1, -1
    std::set<std::string> seen;
    for (auto& r : fam.exceptional_lambdas) {
        if (!r.field) seen.insert(r.value.is_zero() ? "0" : r.value.rep().c[0].str());
    }
    CHECK(seen.count("0"));
    CHECK(seen.count("1"));
    CHECK(seen.count("-1"));
}

TEST_CASE("golden infinity points") {
    ProjParam P = ex1();
    AffineParam Pw = dehomogenize(P, 4, Flavor::affine);
    SurfaceCache cache = build_cache(Pw);
    // mult((0:1:0)) via the tilde chart of x1
    AffineParam tilde1 = dehomogenize(P, 1, Flavor::tilde);
    AlgPoint origin;
    origin.coords = {NFElem(), NFElem()};
    CHECK(multiplicity_at_point(tilde1, origin, cache) == 2);
    // mult((1:0:0)) via the hat chart of x2 at (s^, v^) = (0, 0)
    AffineParam hat2 = dehomogenize(P, 2, Flavor::hat);
    CHECK(multiplicity_at_point(hat2, origin, cache) == 3);
    // the directions (1:1:0), (1:-1:0) both map to (1:2:0:0), a point of the
    // double line y = z = 0 of the chart-1 quartic: multiplicity 2
    AffineParam hat1 = dehomogenize(P, 1, Flavor::hat);
    AlgPoint one_pt, minus_pt;
    one_pt.coords = {NFElem(nullptr, UPoly<Rational>::constant(Rational(1))), NFElem()};
    minus_pt.coords = {NFElem(nullptr, UPoly<Rational>::constant(Rational(-1))), NFElem()};
    CHECK(multiplicity_at_point(hat1, one_pt, cache) == 2);
    CHECK(multiplicity_at_point(hat1, minus_pt, cache) == 2);
    // independent check through the oracle
    ImplicitSurface S1 = implicitize(hat1);
    CHECK(mult_translate(S1, {Rational(2), Rational(0), Rational(0)}) == 2);
}

TEST_CASE("guard soundness sampling") {
    ProjParam P = ex1();
    AffineParam Pw = dehomogenize(P, 4, Flavor::affine);
    SurfaceCache cache = build_cache(Pw);
    GenericOutcome out = generic_g_and_guards(Pw, &cache);
    // points outside Delta_4 and Delta^*: multiplicity must be 1
    int tested = 0;
    for (long a = 2; a <= 6 && tested < 8; a++) {
        for (long b = a + 1; b <= 7 && tested < 8; b++) {
            Rational t0(a), s0(b);
            bool on_guard = (s0 + t0).is_zero();
            for (auto& c : out.guards.delta_star.curves) {
                if (c.eval_all({{var("tt"), t0}, {var("ss"), s0}}).is_zero()) on_guard = true;
            }
            if (on_guard) continue;
            CHECK(multiplicity_at_param(Pw, t0, s0, cache) == 1);
            tested++;
        }
    }
    CHECK(tested >= 6);
}

TEST_CASE("whitney umbrella curve verdict") {
    auto r = validate({parse_poly("t*s"), parse_poly("t*v"), parse_poly("s^2"), parse_poly("v^2")});
    ProjParam P = std::get<ProjParam>(r);
    AffineParam Pw = dehomogenize(P, 4, Flavor::affine);
    SurfaceCache cache = build_cache(Pw);
    GenericOutcome out = generic_g_and_guards(Pw, &cache);
    REQUIRE_FALSE(out.plane);
    // the singular line of x^2 = y^2 z pulls back to t = 0
    bool found = false;
    for (auto& c : out.guards.delta_star.curves) {
        if (c == parse_poly("tt")) found = true;
    }
    CHECK(found);
    CurveVerdict v = curve_analyze(Pw, parse_poly("tt"), cache);
    CHECK(v.generic_mult == 2);
}
