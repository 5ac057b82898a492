// Acceptance suite: one pass/fail line per criterion item, plain exit status.
// Every expected value is pinned here; nothing is tuned at run time.

#include "surfstrat/factor.hpp"
#include "surfstrat/oracle.hpp"
#include "surfstrat/parse.hpp"
#include "surfstrat/pipeline.hpp"

#include <chrono>
#include <iostream>

using namespace surfstrat;

namespace {

int g_pass = 0, g_fail = 0;

void line(const std::string& name, bool ok, const std::string& extra = "") {
    (ok ? g_pass : g_fail)++;
    std::cout << (ok ? "PASS " : "FAIL ") << name;
    if (!extra.empty()) std::cout << "  [" << extra << "]";
    std::cout << "\n";
}

ProjParam make_P(const char* a, const char* b, const char* c, const char* d) {
    return std::get<ProjParam>(
        validate({parse_poly(a), parse_poly(b), parse_poly(c), parse_poly(d)}));
}

ProjParam ex1() { return make_P("s^2", "s^2 + t^2 + v^2", "(t + 2*s)*v", "(s + t)*v"); }

struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed) {}
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

PolyQ random_poly(Rng& rng, const std::vector<VarId>& vars, int max_terms, int max_deg,
                  bool nonzero) {
    PolyQ r;
    int terms = static_cast<int>(rng.range(nonzero ? 1 : 0, max_terms));
    for (int i = 0; i < terms; i++) {
        long c = rng.range(-9, 9);
        if (c == 0) c = 1;
        PolyQ t = PolyQ::constant(Rational(c));
        for (VarId v : vars) {
            long e = rng.range(0, max_deg);
            if (e > 0) t *= PolyQ::variable(v, Rational(1)).pow(e);
        }
        r += t;
    }
    if (nonzero && r.is_zero()) r = poly_const(1);
    return r;
}

long stratum_of_curve(const Decomposition& D, const char* poly) {
    PolyQ p = canonical(parse_poly(poly));
    for (auto& s : D.strata)
        for (auto& piece : s.pieces)
            if (piece.kind == PieceKind::curve && piece.curve == p) return s.multiplicity;
    return -1;
}

long stratum_of_affine_point(const Decomposition& D, long t0, long s0) {
    for (auto& s : D.strata) {
        for (auto& piece : s.pieces) {
            if (piece.kind != PieceKind::point || !piece.point.is_rational()) continue;
            Rational a =
                piece.point.coords[0].is_zero() ? Rational(0) : piece.point.coords[0].rep().c[0];
            Rational b =
                piece.point.coords[1].is_zero() ? Rational(0) : piece.point.coords[1].rep().c[0];
            if (a == Rational(t0) && b == Rational(s0)) return s.multiplicity;
        }
    }
    return -1;
}

long stratum_of_direction(const Decomposition& D, const char* a, const char* b) {
    for (auto& s : D.strata) {
        for (auto& piece : s.pieces) {
            if (piece.kind != PieceKind::infinity_point || !piece.point.is_rational()) continue;
            if (piece.point.coords[0].str() == a && piece.point.coords[1].str() == b)
                return s.multiplicity;
        }
    }
    return -1;
}

long family_mult(const Decomposition& D) {
    for (auto& s : D.strata)
        for (auto& piece : s.pieces)
            if (piece.kind == PieceKind::infinity_family) return s.multiplicity;
    return -1;
}

struct Instance {
    const char* name;
    ProjParam P;
};

std::vector<Instance> oracle_instances() {
    std::vector<Instance> out;
    out.push_back({"whitney", make_P("t*s", "t*v", "s^2", "v^2")});
    out.push_back({"cone", make_P("t*v^2", "t*s*v", "t*s^2", "v^3")});
    out.push_back({"graph", make_P("t*v", "s*v", "t*s", "v^2")});
    out.push_back({"improper", make_P("t^2*v^2", "t^4", "s*v^3", "v^4")});
    out.push_back({"example1", ex1()});
    out.push_back({"cubic", make_P("t^2*s", "t^2*v", "s*v^2 + v^3", "v^3")});
    return out;
}

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    ProjParam P = ex1();
    AffineParam Pw = dehomogenize(P, 4, Flavor::affine);
    SurfaceCache cache = build_cache(Pw);
    line("1a: n2 == 1", cache.n2 == 1);
    line("1a: n1 == 4", cache.n1 == 4);
    {
        // A0 verified off the surface through the oracle as well
        ImplicitSurface S = implicitize(Pw);
        line("1a: A0 off-surface",
             mult_translate(S, {cache.A0[0], cache.A0[1], cache.A0[2]}) == 0,
             "A0 = (" + cache.A0[0].str() + ", " + cache.A0[1].str() + ", " + cache.A0[2].str() +
                 ")");
    }
    {
        auto loci = denominator_loci(P);
        auto seteq = [&](int i, const char* gen) {
            return canonical(squarefree_part_all(loci[i].gens[0])) == canonical(parse_poly(gen));
        };
        line("1b: Delta_1 is s = 0", seteq(0, "s"));
        line("1b: Delta_2 is s^2 + t^2 + 1 = 0", seteq(1, "s^2 + t^2 + 1"));
        line("1b: Delta_3 is t + 2*s = 0", seteq(2, "t + 2*s"));
        line("1b: Delta_4 is s + t = 0", seteq(3, "s + t"));
    }
    {
        GenericOutcome gen = generic_g_and_guards(Pw, &cache);
        auto& g = gen.guards;
        auto has = [&](const VarietyDesc& v, const char* poly) {
            PolyQ p = canonical(parse_poly(poly));
            for (auto& c : v.curves)
                if (c == p) return true;
            return false;
        };
        line("1c: Delta_0^* = {tt+ss}", g.delta[0].curves.size() == 1 && has(g.delta[0], "tt+ss"));
        line("1c: Delta_1^* = {tt+ss, tt}",
             g.delta[1].curves.size() == 2 && has(g.delta[1], "tt+ss") && has(g.delta[1], "tt"));
        line("1c: Delta_2^* = {tt+ss}", g.delta[2].curves.size() == 1 && has(g.delta[2], "tt+ss"));
        line("1c: Delta_3^* = {ss}", g.delta[3].curves.size() == 1 && has(g.delta[3], "ss"));
        line("1c: Delta_4^* = {ss^2+tt^2, tt+ss}",
             g.delta[4].curves.size() == 2 && has(g.delta[4], "ss^2+tt^2") &&
                 has(g.delta[4], "tt+ss"));
        line("1c: Delta^* = {ss, tt, tt+ss, ss^2+tt^2}",
             g.delta_star.curves.size() == 4 && has(g.delta_star, "ss") &&
                 has(g.delta_star, "tt") && has(g.delta_star, "tt+ss") &&
                 has(g.delta_star, "ss^2+tt^2") && g.delta_star.points.empty());
    }
    {
        Decomposition D = analyze(P);
        line("1d: s = 0 maps to multiplicity 2", stratum_of_curve(D, "ss") == 2);
        line("1d: t = 0 maps to multiplicity 1", stratum_of_curve(D, "tt") == 1);
        line("1d: s^2 + t^2 = 0 maps to multiplicity 1", stratum_of_curve(D, "ss^2 + tt^2") == 1);
        line("1d: s + t = 0 maps to multiplicity 1", stratum_of_curve(D, "ss + tt") == 1);
        line("1d: (0:0:1) has multiplicity 3", stratum_of_affine_point(D, 0, 0) == 3);
        line("1d: (0:1:0) has multiplicity 2", stratum_of_direction(D, "0", "1") == 2);
        line("1d: (1:0:0) has multiplicity 3", stratum_of_direction(D, "1", "0") == 3);
        line("1d: (1:lambda:0) generic multiplicity 2", family_mult(D) == 2);
        // The reference dataset pins (1:1:0) and (1:-1:0) at multiplicity 1.
        // That value is impossible: both directions map to (1:2:0:0) on the
        // line y=z=0 of the chart-1 surface, the implicit quartic lies in
        // (y,z)^2 (every term is divisible by y^2, y*z or z^2), so every
        // point of that line has multiplicity exactly 2. The two lines below
        // keep the pinned expectation and report the discrepancy.
        line("1d: (1:1:0) has multiplicity 1", stratum_of_direction(D, "1", "1") == 1,
             "computed " + std::to_string(stratum_of_direction(D, "1", "1")) +
                 "; the pinned value 1 contradicts the double line y=z=0");
        line("1d: (1:-1:0) has multiplicity 1", stratum_of_direction(D, "1", "-1") == 1,
             "computed " + std::to_string(stratum_of_direction(D, "1", "-1")) +
                 "; the pinned value 1 contradicts the double line y=z=0");
        line("1d: B is empty", D.base_points.empty());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    line("1e: golden run under 120 s", secs < 120.0, std::to_string(secs) + " s");
}

void criterion_2_and_3() {
    auto t0 = std::chrono::steady_clock::now();
    for (auto& inst : oracle_instances()) {
        AffineParam Pw = dehomogenize(inst.P, 4, Flavor::affine);
        SurfaceCache cache = build_cache(Pw);
        ImplicitSurface S = implicitize(Pw);
        int checked = 0, agreed = 0;
        for (long a = -3; a <= 3 && checked < 24; a++) {
            for (long b = -3; b <= 3 && checked < 24; b++) {
                Rational t(a), s(b);
                std::map<VarId, Rational> at{{var("t"), t}, {var("s"), s}};
                bool ok = true;
                std::array<Rational, 3> A;
                for (int i = 0; i < 3; i++) {
                    Rational dv = Pw.comp[i].den().eval_all(at);
                    if (dv.is_zero()) {
                        ok = false;
                        break;
                    }
                    A[i] = Pw.comp[i].num().eval_all(at) / dv;
                }
                if (!ok) continue;
                long mine = multiplicity_at(Pw, A, cache);
                long oracle = mult_translate(S, A);
                checked++;
                if (mine == oracle) agreed++;
            }
        }
        line(std::string("2: oracle agreement on ") + inst.name + " (" +
                 std::to_string(checked) + " points)",
             checked >= 20 && agreed == checked,
             std::to_string(agreed) + "/" + std::to_string(checked));
        line(std::string("3: degree identity on ") + inst.name,
             S.degree() * cache.n2 == cache.n1,
             "deg=" + std::to_string(S.degree()) + " n2=" + std::to_string(cache.n2) +
                 " n1=" + std::to_string(cache.n1));
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    line("2/3: oracle suite under 5 min", secs < 300.0, std::to_string(secs) + " s");
}

void criterion_4() {
    ProjParam P = make_P("t*v^2", "t*s*v", "t*s^2", "v^3");
    AffineParam Pw = dehomogenize(P, 4, Flavor::affine);
    SurfaceCache cache = build_cache(Pw);
    PolyQ g = g_poly(Pw, {Rational(0), Rational(0), Rational(0)});
    line("4: g at the vertex is nontrivial", g.degree_in({var("t"), var("s")}) > 0, g.str());
    bool cone = false;
    long m = multiplicity_at(Pw, {Rational(0), Rational(0), Rational(0)}, cache, &cone);
    line("4: vertex multiplicity equals deg(Z)", cone && m == cache.deg_z,
         "mult=" + std::to_string(m) + " deg=" + std::to_string(cache.deg_z));
    bool unique_ok = true;
    try {
        Decomposition D = analyze(P);
        (void)D;
    } catch (const InternalError&) {
        unique_ok = false;  // the vertex-uniqueness audit tripped
    }
    line("4: cone carrier uniqueness audit", unique_ok);
}

void criterion_5() {
    ProjParam P = ex1();
    AffineParam Pw = dehomogenize(P, 4, Flavor::affine);
    SurfaceCache cache = build_cache(Pw);
    GenericOutcome gen = generic_g_and_guards(Pw, &cache);
    Rng rng(424242);
    int done = 0, simple = 0;
    while (done < 20) {
        Rational t0(rng.range(-40, 40)), s0(rng.range(-40, 40));
        bool on_guard = (t0 + s0).is_zero();
        for (auto& c : gen.guards.delta_star.curves) {
            if (c.eval_all({{var("tt"), t0}, {var("ss"), s0}}).is_zero()) on_guard = true;
        }
        if (on_guard) continue;
        done++;
        if (multiplicity_at_param(Pw, t0, s0, cache) == 1) simple++;
    }
    line("5: 20 random points off Delta_4 and Delta^* are simple", simple == 20,
         std::to_string(simple) + "/20");
}

void criterion_6() {
    Decomposition D1 = analyze(ex1());
    Decomposition D2 = analyze(ex1());
    line("6: byte-identical JSON across two runs", to_json(D1) == to_json(D2));
}

void criterion_7() {
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(777);
    std::vector<VarId> v3{var("t"), var("s"), var("v")};
    std::vector<VarId> v2{var("t"), var("s")};
    int total = 0;

    int gcd_bad = 0;
    for (int i = 0; i < 350; i++, total++) {
        PolyQ f = random_poly(rng, v3, 3, 2, false);
        PolyQ g = random_poly(rng, v3, 3, 2, false);
        PolyQ h = random_poly(rng, v3, 2, 2, true);
        if (f.is_zero() && g.is_zero()) {
            i--;
            total--;
            continue;
        }
        if (!(mgcd(f * h, g * h) == canonical(h * mgcd(f, g)))) gcd_bad++;
    }
    line("7: gcd multiplicativity (350 instances)", gcd_bad == 0);

    int res_bad = 0;
    for (int i = 0; i < 300; i++, total++) {
        PolyQ f = random_poly(rng, v2, 3, 2, true);
        PolyQ g = random_poly(rng, v2, 3, 2, true);
        if (rng.range(0, 1)) {
            PolyQ h = random_poly(rng, v2, 2, 1, true);
            f *= h;
            g *= h;
        }
        if (f.degree(var("t")) < 1 || g.degree(var("t")) < 1) {
            i--;
            total--;
            continue;
        }
        bool rz = resultant(f, g, var("t")).is_zero();
        bool gp = mgcd(f, g).degree(var("t")) > 0;
        if (rz != gp) res_bad++;
    }
    line("7: resultant vanishes iff common factor (300 instances)", res_bad == 0);

    int fac_bad = 0;
    for (int i = 0; i < 150; i++, total++) {
        PolyQ f = random_poly(rng, v2, 3, 2, true);
        PolyQ g = random_poly(rng, v2, 3, 2, true);
        if (f.is_constant() || g.is_constant()) {
            i--;
            total--;
            continue;
        }
        PolyQ prod = f * g;
        auto fz = factor(prod);
        PolyQ re = PolyQ::constant(fz.unit);
        for (auto& [fac, m] : fz.factors) re *= fac.pow(m);
        if (!(re == prod)) {
            fac_bad++;
            continue;
        }
        for (auto& [fac, m] : fz.factors) {
            auto sub = factor(fac);
            if (sub.factors.size() != 1 || sub.factors[0].second != 1) fac_bad++;
        }
    }
    line("7: factor reassembly and irreducibility (150 instances)", fac_bad == 0);

    int cp_bad = 0;
    for (int i = 0; i < 150; i++, total++) {
        PolyQ f = random_poly(rng, v3, 4, 2, true);
        auto [c, p] = content_primitive(f, {var("t")});
        if (!(c * p == f)) cp_bad++;
        auto [c2, p2] = content_primitive(p, {var("t")});
        if (!(p2 == p)) cp_bad++;
    }
    line("7: content * primitive == input, pp idempotent (150 instances)", cp_bad == 0);

    int ff_bad = 0;
    FunctionFieldCtx ctx = make_ffctx(parse_poly("t^3 + s*t + 1"), var("t"));
    for (int i = 0; i < 100; i++, total++) {
        PolyQ f = random_poly(rng, v2, 4, 3, false);
        PolyQ g = random_poly(rng, v2, 4, 3, false);
        PolyQ nf = ff_normalize(f, ctx), ng = ff_normalize(g, ctx);
        if (!(ff_normalize(f + g, ctx) == nf + ng)) ff_bad++;
        if (!(ff_normalize(f * g, ctx) == ff_normalize(nf * ng, ctx))) ff_bad++;
        if (!(ff_normalize(nf, ctx) == nf)) ff_bad++;
    }
    line("7: ff_normalize homomorphism and idempotence (100 instances)", ff_bad == 0);

    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    line("7: >= 1000 instances under 2 min", total >= 1000 && secs < 120.0,
         std::to_string(total) + " instances, " + std::to_string(secs) + " s");
}

} // namespace

int main() {
    try {
        criterion_1();
        criterion_2_and_3();
        criterion_4();
        criterion_5();
        criterion_6();
        criterion_7();
    } catch (const std::exception& e) {
        std::cout << "FAIL acceptance suite aborted: " << e.what() << "\n";
        return 1;
    }
    std::cout << "----\n" << g_pass << " passed, " << g_fail << " failed\n";
    return g_fail == 0 ? 0 : 1;
}
