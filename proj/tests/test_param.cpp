#include "doctest.h"

#include "surfstrat/param.hpp"
#include "surfstrat/parse.hpp"
#include "surfstrat/solve0.hpp"

using namespace surfstrat;

static std::array<PolyQ, 4> quad(const char* a, const char* b, const char* c, const char* d) {
    return {parse_poly(a), parse_poly(b), parse_poly(c), parse_poly(d)};
}

static const std::array<PolyQ, 4> EX1 = quad(
    "s^2", "s^2 + t^2 + v^2", "(t + 2*s)*v", "(s + t)*v");

TEST_CASE("validate golden example") {
    auto r = validate(EX1);
    REQUIRE(std::holds_alternative<ProjParam>(r));
    CHECK(std::get<ProjParam>(r).gamma == 2);
}

TEST_CASE("validate plane and error inputs") {
    auto r = validate(quad("t^2", "2*t^2", "s^2", "v^2"));
    REQUIRE(std::holds_alternative<PlaneReport>(r));
    auto pr = std::get<PlaneReport>(r);
    CHECK(pr.i == 1);
    CHECK(pr.j == 2);
    CHECK(pr.lambda == Rational(Int(1), Int(2)));

    CHECK_THROWS_AS(validate(quad("t", "s^2", "v", "v")), ValidationError);
    CHECK_THROWS_AS(validate(quad("t + 1", "s", "v", "t")), ValidationError);
    CHECK_THROWS_AS(validate(quad("0", "s", "v", "t")), ValidationError);

    // common gcd divided out with a warning
    auto r2 = validate(quad("t*v", "s*v", "v^2", "v*(t+s)"));
    REQUIRE(std::holds_alternative<ProjParam>(r2));
    CHECK(std::get<ProjParam>(r2).gamma == 1);
    CHECK(std::get<ProjParam>(r2).warnings.size() == 1);
}

TEST_CASE("dehomogenize golden example") {
    ProjParam P = std::get<ProjParam>(validate(EX1));
    AffineParam Pw = dehomogenize(P, 4, Flavor::affine);
    CHECK(Pw.comp[0] == RatFunc(parse_poly("s^2"), parse_poly("s + t")));
    CHECK(Pw.comp[1] == RatFunc(parse_poly("s^2 + t^2 + 1"), parse_poly("s + t")));
    CHECK(Pw.comp[2] == RatFunc(parse_poly("t + 2*s"), parse_poly("s + t")));

    AffineParam Px = dehomogenize(P, 1, Flavor::affine);
    CHECK(Px.comp[0] == RatFunc(parse_poly("s^2 + t^2 + 1"), parse_poly("s^2")));
    CHECK(Px.comp[2] == RatFunc(parse_poly("s + t"), parse_poly("s^2")));
}

TEST_CASE("dehomogenize whitney umbrella unit denominators") {
    ProjParam P = std::get<ProjParam>(validate(quad("t*s", "t*v", "s^2", "v^2")));
    AffineParam Pw = dehomogenize(P, 4, Flavor::affine);
    CHECK(Pw.comp[0] == RatFunc(parse_poly("t*s")));
    CHECK(Pw.comp[1] == RatFunc(parse_poly("t")));
    CHECK(Pw.comp[2] == RatFunc(parse_poly("s^2")));
}

TEST_CASE("denominator loci") {
    ProjParam P = std::get<ProjParam>(validate(EX1));
    auto D = denominator_loci(P);
    CHECK(canonical(squarefree_part_all(D[0].gens[0])) == parse_poly("s"));
    CHECK(canonical(D[1].gens[0]) == parse_poly("s^2 + t^2 + 1"));
    CHECK(canonical(D[2].gens[0]) == parse_poly("t + 2*s"));
    CHECK(canonical(D[3].gens[0]) == parse_poly("s + t"));

    ProjParam W = std::get<ProjParam>(validate(quad("t*s", "t*v", "s^2", "v^2")));
    auto DW = denominator_loci(W);
    CHECK(canonical(DW[0].gens[0]) == parse_poly("t*s"));
    CHECK(canonical(DW[1].gens[0]) == parse_poly("t"));
    CHECK(canonical(DW[2].gens[0]) == parse_poly("s^2"));
    CHECK(DW[3].known_empty());
}

TEST_CASE("base points") {
    ProjParam P = std::get<ProjParam>(validate(EX1));
    BasePoints B = base_points(P);
    CHECK(B.affine.empty());
    CHECK(B.infinity.empty());

    // forced base point at (0:0:1)
    ProjParam P2 = std::get<ProjParam>(validate(quad("t^2", "t*s", "s^2", "s^2 + t^2")));
    BasePoints B2 = base_points(P2);
    REQUIRE(B2.affine.size() == 1);
    CHECK(B2.affine[0].is_rational());
    CHECK(B2.affine[0].coords[0].is_zero());
    CHECK(B2.affine[0].coords[1].is_zero());
    CHECK(B2.infinity.empty());

    // conjugate base points at infinity (1 : ±i : 0)
    ProjParam P3 = std::get<ProjParam>(validate(quad("t*v", "s*v", "v^2", "t^2 + s^2")));
    BasePoints B3 = base_points(P3);
    CHECK(B3.affine.empty());
    REQUIRE(B3.infinity.size() == 1);
    CHECK(B3.infinity[0].ext_degree() == 2);
}

TEST_CASE("solve_system splits curves and points") {
    VarId t = var("t"), s = var("s");
    auto sol = solve_system({parse_poly("t^2 + s^2 - 2"), parse_poly("t - s")}, t, s);
    CHECK(sol.curves.empty());
    REQUIRE(sol.points.size() == 2);
    for (auto& p : sol.points) CHECK(p.is_rational());

    auto sol2 = solve_system({parse_poly("t^2 - 2"), parse_poly("s - t")}, t, s);
    REQUIRE(sol2.points.size() == 1);
    CHECK(sol2.points[0].ext_degree() == 2);

    auto sol3 = solve_system({parse_poly("(t - s)*(t + s)"), parse_poly("(t - s)*s")}, t, s);
    REQUIRE(sol3.curves.size() == 1);
    CHECK(sol3.curves[0] == parse_poly("t - s"));
    REQUIRE(sol3.points.size() == 0);  // (0,0) lies on the curve t=s

    auto sol4 = solve_system({parse_poly("(t - 1)*(t + s)"), parse_poly("(t - 1)*s - (t-1)")}, t, s);
    REQUIRE(sol4.curves.size() == 1);
    REQUIRE(sol4.points.size() == 1);  // (-1, 1)... the isolated point off t=1
}

TEST_CASE("same_point recognizes equal conjugate classes") {
    NFPtr f1 = make_number_field(parse_poly("r^2 - 2"), var("r"), "r");
    NFElem r1 = NFElem::generator(f1);
    AlgPoint a;
    a.field = f1;
    a.coords = {r1, r1};
    AlgPoint b;
    b.field = f1;
    b.coords = {-r1, -r1};
    CHECK(same_point(a, b));  // both describe {(√2,√2), (−√2,−√2)}

    AlgPoint c;
    c.field = f1;
    c.coords = {r1, -r1};
    CHECK_FALSE(same_point(a, c));
}

TEST_CASE("parse_param_file") {
    std::string text = "# demo\nfield: Q\np1 = s^2\np2 = s^2 + t^2 + v^2\np3 = (t + 2*s)*v\np4 = (s + t)*v\n";
    auto p = parse_param_file(text);
    CHECK(p[0] == parse_poly("s^2"));
    CHECK_THROWS_AS(parse_param_file("p1 = t\np2 = s\np3 = v\n"), ValidationError);
    CHECK_THROWS_AS(parse_param_file("p1 = t^\np2 = s\np3 = v\np4 = t\n"), ValidationError);
    CHECK_THROWS_AS(parse_param_file("field: R\np1 = t\np2 = s\np3 = v\np4 = t+s\n"),
                    ValidationError);
}
