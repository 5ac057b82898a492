#include "doctest.h"

#include "surfstrat/factor.hpp"
#include "surfstrat/parse.hpp"
#include "test_util.hpp"

using namespace surfstrat;
using surfstrat::testutil::Rng;
using surfstrat::testutil::random_poly;

static PolyQ reassemble(const Factorization& fz) {
    PolyQ p = PolyQ::constant(fz.unit);
    for (auto& [f, m] : fz.factors) p *= f.pow(m);
    return p;
}

TEST_CASE("factor univariate basics") {
    PolyQ f = parse_poly("t^2 - 1");
    auto fz = factor(f);
    REQUIRE(fz.factors.size() == 2);
    CHECK(reassemble(fz) == f);

    f = parse_poly("(t - 1)^2 * (t + 2)^3");
    fz = factor(f);
    REQUIRE(fz.factors.size() == 2);
    CHECK(reassemble(fz) == f);
    for (auto& [fac, m] : fz.factors) CHECK((m == 2 || m == 3));
}

TEST_CASE("factor recombination hard case") {
    // Swinnerton-Dyer style: irreducible over Q, splits mod every prime
    PolyQ f = parse_poly("t^4 - 10*t^2 + 1");
    auto fz = factor(f);
    CHECK(fz.factors.size() == 1);
    CHECK(fz.factors[0].second == 1);
    CHECK(is_irreducible(f));
}

TEST_CASE("factor reference cases") {
    PolyQ f = parse_poly("ss^2 + tt^2");
    CHECK(is_irreducible(f));

    f = parse_poly("t^2 - s^2");
    auto fz = factor(f);
    REQUIRE(fz.factors.size() == 2);
    CHECK(reassemble(fz) == f);

    // the Delta* product of the golden example
    PolyQ g = parse_poly("ss * tt * (ss + tt) * (ss^2 + tt^2)");
    fz = factor(g);
    CHECK(fz.factors.size() == 4);
    CHECK(reassemble(fz) == g);

    CHECK_THROWS_AS(factor(parse_poly("t*s*v + 1")), std::invalid_argument);
}

TEST_CASE("factor bivariate with content and multiplicity") {
    PolyQ f = parse_poly("(s + 1) * (t^2 + s)^2 * (t + s + 1)");
    auto fz = factor(f);
    CHECK(reassemble(fz) == f);
    int found_sq = 0;
    for (auto& [fac, m] : fz.factors)
        if (m == 2) found_sq++;
    CHECK(found_sq == 1);
}

TEST_CASE("factor bivariate irreducible quadratic") {
    PolyQ f = parse_poly("s^2 + t^2 + 1");
    CHECK(is_irreducible(f));
    PolyQ g = parse_poly("(t*s + t + 1) * (t^2 + s^2 + 1)");
    auto fz = factor(g);
    CHECK(fz.factors.size() == 2);
    CHECK(reassemble(fz) == g);
}

TEST_CASE("factor randomized products verify") {
    Rng rng(101);
    std::vector<VarId> vars{var("t"), var("s")};
    int done = 0;
    for (int it = 0; it < 80 && done < 25; it++) {
        PolyQ f = random_poly(rng, vars, 3, 2, true);
        PolyQ g = random_poly(rng, vars, 3, 2, true);
        if (f.is_constant() || g.is_constant()) continue;
        PolyQ prod = f * g;
        auto fz = factor(prod);
        CHECK(reassemble(fz) == prod);
        // every reported factor must be irreducible per the same routine
        for (auto& [fac, m] : fz.factors) {
            auto sub = factor(fac);
            CHECK(sub.factors.size() == 1);
            CHECK(sub.factors[0].second == 1);
        }
        done++;
    }
    CHECK(done >= 20);
}

TEST_CASE("squarefree decomposition") {
    PolyQ t = poly_var("t");
    PolyQ f = (t - poly_const(1)).pow(2) * (t + poly_const(3));
    auto sq = squarefree_decompose(f, var("t"));
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].second == 1);
    CHECK(sq[1].second == 2);
}
