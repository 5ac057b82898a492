#include "doctest.h"

#include "surfstrat/oracle.hpp"
#include "surfstrat/parse.hpp"
#include "surfstrat/pipeline.hpp"

#include "json.hpp"

using namespace surfstrat;

static ProjParam make_P(const char* a, const char* b, const char* c, const char* d) {
    auto r = validate({parse_poly(a), parse_poly(b), parse_poly(c), parse_poly(d)});
    return std::get<ProjParam>(r);
}

static ProjParam ex1() {
    return make_P("s^2", "s^2 + t^2 + v^2", "(t + 2*s)*v", "(s + t)*v");
}

static const Stratum* stratum_of(const Decomposition& D, long k) {
    for (auto& s : D.strata)
        if (s.multiplicity == k) return &s;
    return nullptr;
}

static bool has_curve_piece(const Stratum& s, const char* poly) {
    PolyQ p = canonical(parse_poly(poly));
    for (auto& piece : s.pieces)
        if (piece.kind == PieceKind::curve && piece.curve == p) return true;
    return false;
}

static bool has_affine_point(const Stratum& s, long t0, long s0) {
    for (auto& piece : s.pieces) {
        if (piece.kind != PieceKind::point || !piece.point.is_rational()) continue;
        Rational a = piece.point.coords[0].is_zero() ? Rational(0) : piece.point.coords[0].rep().c[0];
        Rational b = piece.point.coords[1].is_zero() ? Rational(0) : piece.point.coords[1].rep().c[0];
        if (a == Rational(t0) && b == Rational(s0)) return true;
    }
    return false;
}

static bool has_infinity_point(const Stratum& s, const char* t0, const char* s0) {
    for (auto& piece : s.pieces) {
        if (piece.kind != PieceKind::infinity_point || !piece.point.is_rational()) continue;
        auto str0 = piece.point.coords[0].str(), str1 = piece.point.coords[1].str();
        if (str0 == t0 && str1 == s0) return true;
    }
    return false;
}

TEST_CASE("golden decomposition") {
    Decomposition D = analyze(ex1());
    REQUIRE_FALSE(D.plane);
    CHECK(D.base_points.empty());
    CHECK(D.cache.n2 == 1);
    CHECK(D.cache.n1 == 4);

    const Stratum* s1 = stratum_of(D, 1);
    const Stratum* s2 = stratum_of(D, 2);
    const Stratum* s3 = stratum_of(D, 3);
    REQUIRE(s1);
    REQUIRE(s2);
    REQUIRE(s3);

    // S1: generic plane, the line t = 0, the pair s^2 + t^2 = 0, Delta_4
    bool generic_found = false;
    for (auto& p : s1->pieces)
        if (p.kind == PieceKind::generic_plane) generic_found = true;
    CHECK(generic_found);
    CHECK(has_curve_piece(*s1, "tt"));
    CHECK(has_curve_piece(*s1, "ss^2 + tt^2"));
    CHECK(has_curve_piece(*s1, "ss + tt"));

    // S2: the line s = 0, the point (0:1:0), the generic infinity family,
    // and the directions (1:1:0), (1:-1:0) on the double line of the quartic
    CHECK(has_curve_piece(*s2, "ss"));
    CHECK(has_infinity_point(*s2, "0", "1"));
    bool family = false;
    for (auto& p : s2->pieces)
        if (p.kind == PieceKind::infinity_family) family = true;
    CHECK(family);
    CHECK(has_infinity_point(*s2, "1", "1"));
    CHECK(has_infinity_point(*s2, "1", "-1"));

    // S3: the affine origin (0:0:1) and the direction (1:0:0)
    CHECK(has_affine_point(*s3, 0, 0));
    CHECK(has_infinity_point(*s3, "1", "0"));

    // no stratum beyond the surface degree, none of multiplicity 4 here
    CHECK(stratum_of(D, 4) == nullptr);
}

TEST_CASE("golden decomposition is deterministic") {
    Decomposition D1 = analyze(ex1());
    Decomposition D2 = analyze(ex1());
    CHECK(to_json(D1) == to_json(D2));
}

TEST_CASE("plane short-circuit") {
    ProjParam P = make_P("t*v", "s*v", "t*v + s*v + v^2", "v^2");
    Decomposition D = analyze(P);
    CHECK(D.plane);
    REQUIRE(D.strata.size() == 1);
    CHECK(D.strata[0].multiplicity == 1);
}

TEST_CASE("whitney umbrella decomposition") {
    ProjParam P = make_P("t*s", "t*v", "s^2", "v^2");
    Decomposition D = analyze(P);
    const Stratum* s2 = stratum_of(D, 2);
    REQUIRE(s2);
    CHECK(has_curve_piece(*s2, "tt"));
    // sampled points on the singular line agree with the oracle
    AffineParam Pw = dehomogenize(P, 4, Flavor::affine);
    ImplicitSurface S = implicitize(Pw);
    for (long s0 = 1; s0 <= 5; s0++) {
        std::array<Rational, 3> A{Rational(0), Rational(0), Rational(s0 * s0)};
        CHECK(mult_translate(S, {A[0], A[1], A[2]}) == 2);
    }
}

TEST_CASE("cone decomposition flags the vertex locus") {
    ProjParam P = make_P("t*v^2", "t*s*v", "t*s^2", "v^3");
    Decomposition D = analyze(P);
    const Stratum* s2 = stratum_of(D, 2);
    REQUIRE(s2);
    bool cone_piece = false;
    for (auto& p : s2->pieces)
        if (p.cone) cone_piece = true;
    CHECK(cone_piece);
    CHECK(D.cache.deg_z == 2);
}

TEST_CASE("sample verification clean and fault injection") {
    Decomposition D = analyze(ex1());
    VerifyReport rep = verify_samples(D, 4, 12345);
    CHECK(rep.mismatches == 0);
    CHECK(rep.grid_errors == 0);
    CHECK(rep.checked > 10);

    // synthetic fault: relabel a stratum
    Decomposition bad = D;
    for (auto& s : bad.strata) {
        if (s.multiplicity == 2) s.multiplicity = 1;
    }
    VerifyReport rep2 = verify_samples(bad, 4, 12345);
    CHECK(rep2.mismatches > 0);
}

TEST_CASE("json output parses and round-trips") {
    Decomposition D = analyze(ex1());
    std::string s = to_json(D);
    auto j = nlohmann::ordered_json::parse(s);
    CHECK(j["degrees"]["surface_degree"] == 4);
    CHECK(j["strata"].size() == 3);
    CHECK(j.dump(2) + "\n" == s);  // emit(parse(emit(D))) == emit(D)
}

TEST_CASE("svg and text render") {
    Decomposition D = analyze(ex1());
    std::string svg = to_svg(D);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("multiplicity 3") != std::string::npos);
    std::string txt = to_text(D);
    CHECK(txt.find("S_2") != std::string::npos);
}
