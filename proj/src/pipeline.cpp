#include "surfstrat/pipeline.hpp"

#include "surfstrat/factor.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

namespace surfstrat {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    double budget = 0;
    void check(const char* where) const {
        if (budget <= 0) return;
        double s = std::chrono::duration<double>(Clock::now() - start).count();
        if (s > budget)
            throw InternalError(std::string("timeout exceeded during ") + where);
    }
};

NFElem nf_rat(const Rational& r) { return NFElem(nullptr, UPoly<Rational>::constant(r)); }

AlgPoint affine_pt(const NFPtr& fld, NFElem a, NFElem b) {
    AlgPoint p;
    p.field = fld;
    p.coords = {std::move(a), std::move(b)};
    return p;
}

struct PendingCurve {
    PolyQ curve;
    CurveVerdict verdict;
    int chart;
    int level;
};

struct ClassifiedPoint {
    AlgPoint pt;
    long mult = -1;
    int chart = 4;
    bool cone = false;
    bool base = false;
    bool deferred = false;
    std::string reason;
};

struct Builder {
    const ProjParam& P;
    AnalyzeOptions opt;
    Timer timer;
    Decomposition D;
    std::array<AffineParam, 4> charts;  // affine flavor, index i-1
    std::array<PolyQ, 4> ptil;          // p_i(t,s,1) renamed to (tt,ss)
    std::vector<PendingCurve> curves;
    std::vector<AlgPoint> special;
    std::vector<ClassifiedPoint> classified;
    std::vector<std::pair<std::string, std::string>> cone_images;

    explicit Builder(const ProjParam& p, const AnalyzeOptions& o) : P(p), opt(o) {
        timer.budget = o.timeout_seconds;
        D.input = p;
        D.warnings = p.warnings;
        for (int i = 1; i <= 4; i++) {
            charts[i - 1] = dehomogenize(P, i, Flavor::affine);
            ptil[i - 1] = canonical(
                p_tilde(P, i).rename_var(var("t"), var("tt")).rename_var(var("s"), var("ss")));
        }
    }

    bool on_ptil(const AlgPoint& pt, int i) const { return point_on(pt, ptil[i - 1]); }

    /// first chart in the level order 4,3,2,1 whose denominator locus misses pt
    int chart_of(const AlgPoint& pt) const {
        for (int i = 4; i >= 1; i--) {
            if (!on_ptil(pt, i)) return i;
        }
        return 0;  // base point
    }

    void add_special(const AlgPoint& pt) {
        for (auto& e : special)
            if (same_point(e, pt)) return;
        special.push_back(pt);
    }

    bool is_base_affine(const AlgPoint& pt) const {
        for (auto& b : D.base_points) {
            if (!b.coords[2].is_zero()) {
                AlgPoint ba;
                ba.field = b.field;
                ba.coords = {b.coords[0], b.coords[1]};
                if (same_point(ba, pt)) return true;
            }
        }
        return false;
    }

    void classify_specials() {
        for (auto& pt : special) {
            ClassifiedPoint c;
            c.pt = pt;
            if (is_base_affine(pt)) {
                c.base = true;
                classified.push_back(std::move(c));
                continue;
            }
            if (pt.ext_degree() > opt.max_ext_degree) {
                c.deferred = true;
                c.reason = "extension degree " + std::to_string(pt.ext_degree()) +
                           " exceeds the cap " + std::to_string(opt.max_ext_degree);
                D.deferred.push_back({pt, c.reason});
                classified.push_back(std::move(c));
                continue;
            }
            int ch = chart_of(pt);
            if (ch == 0) {
                // on every denominator locus yet not recognized as a base point
                throw InternalError("classify: point on all four loci is not in B_a");
            }
            bool cone = false;
            c.mult = multiplicity_at_point(charts[ch - 1], pt, D.cache, &cone);
            c.chart = ch;
            c.cone = cone;
            if (cone) {
                std::string sig = "x" + std::to_string(ch) + ":";
                for (auto& coord : param_image_nf(charts[ch - 1], pt)) sig += coord.str() + ";";
                note_cone("point " + pt.str(), sig);
            }
            classified.push_back(std::move(c));
            timer.check("point classification");
        }
    }

    /// Vertex-uniqueness audit (a non-plane surface has at most one cone vertex).
    /// Carriers mapping to the unique vertex are fine;
    /// two distinct point images with g != 1 are a hard error. Curve carriers
    /// map onto the vertex, so they are consistent with any point carrier.
    void note_cone(const std::string& carrier, const std::string& image_sig = "") {
        if (!image_sig.empty()) {
            for (auto& [c, sig] : cone_images) {
                if (!sig.empty() && sig != image_sig)
                    throw InternalError("two distinct cone vertices detected: " + c + " and " +
                                        carrier);
            }
        }
        cone_images.push_back({carrier, image_sig});
    }

    void run_affine_levels(const GuardSets& guards) {
        // level 1: components of Delta^* off Delta_4
        for (auto& c : guards.delta_star.curves) {
            if (c.divides(ptil[3])) continue;  // postponed to level 2
            CurveVerdict v = curve_analyze(charts[3], c, D.cache);
            if (v.cone_locus) note_cone("curve " + c.str());
            curves.push_back({c, v, 4, 1});
            timer.check("level-1 curves");
        }
        for (auto& p : guards.delta_star.points) add_special(p);

        // level 2: components of Delta_4 \ Delta_3 through chart 3
        if (!ptil[3].is_constant()) {
            for (auto& [c, m] : factor(ptil[3]).factors) {
                (void)m;
                if (c.is_constant()) continue;
                if (c.divides(ptil[2])) continue;  // handled at level 3
                CurveVerdict v = curve_analyze(charts[2], c, D.cache);
                if (v.cone_locus) note_cone("curve " + c.str());
                curves.push_back({c, v, 3, 2});
                timer.check("level-2 curves");
            }
        }
        // level 3: (Delta_4 cap Delta_3) \ Delta_2 through chart 2
        if (!ptil[3].is_constant() && !ptil[2].is_constant()) {
            SystemSolution sys = solve_system({ptil[3], ptil[2]}, var("tt"), var("ss"));
            for (auto& c : sys.curves) {
                if (c.divides(ptil[1])) continue;  // level 4
                CurveVerdict v = curve_analyze(charts[1], c, D.cache);
                if (v.cone_locus) note_cone("curve " + c.str());
                curves.push_back({c, v, 2, 3});
            }
            for (auto& p : sys.points) add_special(p);
        }
        // level 4: (Delta_4 cap Delta_3 cap Delta_2) \ Delta_1 through chart 1
        if (!ptil[3].is_constant() && !ptil[2].is_constant() && !ptil[1].is_constant()) {
            SystemSolution sys = solve_system({ptil[3], ptil[2], ptil[1]}, var("tt"), var("ss"));
            for (auto& c : sys.curves) {
                if (c.divides(ptil[0]))
                    throw InternalError("curve of base points (contradicts coprimality)");
                CurveVerdict v = curve_analyze(charts[0], c, D.cache);
                if (v.cone_locus) note_cone("curve " + c.str());
                curves.push_back({c, v, 1, 4});
            }
            for (auto& p : sys.points) add_special(p);
        }

        // exceptional points from every curve run
        for (auto& pc : curves) {
            for (auto& p : pc.verdict.exceptional) add_special(p);
        }
        // pairwise intersections of analyzed curves are special as well
        for (size_t i = 0; i < curves.size(); i++) {
            for (size_t j = i + 1; j < curves.size(); j++) {
                if (curves[i].curve == curves[j].curve) continue;
                auto pts = solve_points({curves[i].curve, curves[j].curve}, var("tt"), var("ss"));
                for (auto& p : pts) add_special(p);
            }
            timer.check("curve intersections");
        }
        // affine base points are special (excluded from curve pieces)
        for (auto& b : D.base_points) {
            if (b.coords[2].is_zero()) continue;
            AlgPoint ba;
            ba.field = b.field;
            ba.coords = {b.coords[0], b.coords[1]};
            add_special(ba);
        }
    }

    /// classification of the parameter values on the line at infinity
    void run_infinity(std::vector<StratumPiece>& pieces,
                      std::map<long, std::vector<StratumPiece>>& by_mult) {
        auto eval_dir = [&](int i, const NFElem& lam, const NFPtr& fld) -> NFElem {
            // p_i(1, lambda, 0)
            PolyQ q = P.at(i)
                          .subst(var("t"), poly_const(1))
                          .subst(var("v"), PolyQ())
                          .rename_var(var("s"), var("lambda"));
            MPoly<NFElem> l = fld ? lift_nf(q, fld)
                                  : q.map_coeffs<NFElem>([](const Rational& r) {
                                        return NFElem(nullptr, UPoly<Rational>::constant(r));
                                    });
            MPoly<NFElem> ev = l.eval_partial({{var("lambda"), lam}});
            if (ev.is_zero()) return NFElem();
            return ev.constant_value();
        };
        auto lambda_is_base = [&](const NFElem& lam, const NFPtr& fld) {
            for (int i = 1; i <= 4; i++) {
                if (!eval_dir(i, lam, fld).is_zero()) return false;
            }
            return true;
        };

        // (0:1:0)
        bool base010 = true;
        for (int i = 1; i <= 4; i++) {
            if (!P.at(i)
                     .eval_all({{var("t"), Rational(0)}, {var("s"), Rational(1)}, {var("v"), Rational(0)}})
                     .is_zero())
                base010 = false;
        }
        if (!base010) {
            int i0 = 0;
            for (int i = 1; i <= 4 && !i0; i++) {
                if (!P.at(i)
                         .eval_all({{var("t"), Rational(0)}, {var("s"), Rational(1)}, {var("v"), Rational(0)}})
                         .is_zero())
                    i0 = i;
            }
            AffineParam tilde = dehomogenize(P, i0, Flavor::tilde);
            AlgPoint origin = affine_pt(nullptr, NFElem(), NFElem());
            bool cone = false;
            long m = multiplicity_at_point(tilde, origin, D.cache, &cone);
            if (cone) note_cone("(0:1:0)");
            StratumPiece piece;
            piece.kind = PieceKind::infinity_point;
            piece.level = 5;
            piece.chart = i0;
            piece.cone = cone;
            piece.method = "tilde-chart";
            piece.point.projective = true;
            piece.point.coords = {NFElem(), nf_rat(Rational(1)), NFElem()};
            by_mult[m].push_back(piece);
        }
        timer.check("infinity point (0:1:0)");

        // the family (1:lambda:0)
        int j4 = 0;
        for (int j = 1; j <= 4 && !j4; j++) {
            PolyQ q = P.at(j).subst(var("t"), poly_const(1)).subst(var("v"), PolyQ());
            if (!q.is_zero()) j4 = j;
        }
        if (!j4) throw InternalError("all components vanish on the infinity line");
        AffineParam hat = dehomogenize(P, j4, Flavor::hat);
        InfinityFamily fam = infinity_family_analyze(hat, D.cache);
        if (fam.cone_locus) note_cone("infinity family");

        StratumPiece family;
        family.kind = PieceKind::infinity_family;
        family.level = 5;
        family.chart = j4;
        family.method = "hat-chart";

        for (auto& r : fam.exceptional_lambdas) {
            AlgPoint dir;
            dir.projective = true;
            dir.field = r.field;
            NFElem one = r.field ? NFElem::from_base(r.field, Rational(1)) : nf_rat(Rational(1));
            dir.coords = {one, r.value, NFElem()};
            bool dup = false;
            for (auto& e : family.minus_lambdas)
                if (same_point(e, dir)) dup = true;
            if (dup) continue;
            family.minus_lambdas.push_back(dir);

            if (lambda_is_base(r.value, r.field)) continue;  // reported in B
            if (r.field && r.field->degree() > opt.max_ext_degree) {
                D.deferred.push_back({dir, "extension degree exceeds the cap"});
                continue;
            }
            int j = 0;
            for (int jj = 1; jj <= 4 && !j; jj++) {
                if (!eval_dir(jj, r.value, r.field).is_zero()) j = jj;
            }
            AffineParam hatj = dehomogenize(P, j, Flavor::hat);
            AlgPoint par = affine_pt(r.field, r.value, NFElem());
            bool cone = false;
            long m = multiplicity_at_point(hatj, par, D.cache, &cone);
            if (cone) note_cone("infinity point " + dir.str());
            StratumPiece piece;
            piece.kind = PieceKind::infinity_point;
            piece.level = 5;
            piece.chart = j;
            piece.cone = cone;
            piece.method = "hat-chart";
            piece.point = dir;
            by_mult[m].push_back(piece);
            timer.check("infinity points");
        }
        // base directions also excluded from the family
        for (auto& b : D.base_points) {
            if (!b.coords[2].is_zero()) continue;
            if (b.coords[0].is_zero()) continue;  // (0:1:0) is not in the family
            bool dup = false;
            for (auto& e : family.minus_lambdas)
                if (same_point(e, b)) dup = true;
            if (!dup) family.minus_lambdas.push_back(b);
        }
        by_mult[fam.generic_mult].push_back(family);
        (void)pieces;
    }

    Decomposition build() {
        AffineParam& Pw = charts[3];
        if (is_plane_generic(Pw)) {
            return plane_result();
        }
        D.cache = build_cache(Pw);
        timer.check("cache");
        BasePoints B = base_points(P);
        for (auto& b : B.affine) D.base_points.push_back(b);
        for (auto& b : B.infinity) D.base_points.push_back(b);
        for (int i = 0; i < 4; i++) D.delta_gens[i] = ptil[i];
        GenericOutcome gen = generic_g_and_guards(Pw, &D.cache);
        if (gen.plane) return plane_result();
        D.guards = gen.guards;
        timer.check("guards");

        run_affine_levels(D.guards);
        classify_specials();

        std::map<long, std::vector<StratumPiece>> by_mult;

        // point pieces
        for (auto& c : classified) {
            if (c.base || c.deferred) continue;
            StratumPiece piece;
            piece.kind = PieceKind::point;
            piece.level = 5 - c.chart;
            piece.chart = c.chart;
            piece.cone = c.cone;
            piece.point = c.pt;
            piece.method = "pointwise";
            by_mult[c.mult].push_back(piece);
        }
        // curve pieces minus the special points sitting on them
        for (auto& pc : curves) {
            StratumPiece piece;
            piece.kind = PieceKind::curve;
            piece.level = pc.level;
            piece.chart = pc.chart;
            piece.curve = pc.curve;
            piece.cone = pc.verdict.cone_locus;
            piece.method = pc.verdict.method;
            for (auto& sp : special) {
                if (point_on(sp, pc.curve)) piece.minus_points.push_back(sp);
            }
            by_mult[pc.verdict.generic_mult].push_back(piece);
        }
        // the bulk simple piece: plane minus Delta_4 and Delta^*
        {
            StratumPiece piece;
            piece.kind = PieceKind::generic_plane;
            piece.level = 1;
            piece.chart = 4;
            piece.method = "generic";
            std::vector<PolyQ> mc;
            auto add_curve = [&](const PolyQ& c) {
                for (auto& e : mc)
                    if (e == c) return;
                mc.push_back(c);
            };
            for (auto& pc : curves) add_curve(pc.curve);
            if (!ptil[3].is_constant()) {
                for (auto& [c, m] : factor(ptil[3]).factors) {
                    (void)m;
                    if (!c.is_constant()) add_curve(c);
                }
            }
            piece.minus_curves = mc;
            for (auto& sp : special) {
                bool on_c = false;
                for (auto& c : mc)
                    if (point_on(sp, c)) on_c = true;
                if (!on_c) piece.minus_points.push_back(sp);
            }
            by_mult[1].push_back(piece);
        }

        std::vector<StratumPiece> dummy;
        run_infinity(dummy, by_mult);

        for (auto& [k, pieces] : by_mult) {
            if (k < 0) throw InternalError("negative multiplicity in assembly");
            if (k == 0) throw InternalError("off-surface multiplicity for a parameter point");
            if (k > D.cache.deg_z) throw InternalError("multiplicity exceeds the surface degree");
            Stratum s;
            s.multiplicity = k;
            s.pieces = pieces;
            std::sort(s.pieces.begin(), s.pieces.end(), [](const StratumPiece& a,
                                                           const StratumPiece& b) {
                auto key = [](const StratumPiece& p) {
                    return std::make_tuple(static_cast<int>(p.kind), p.level, p.chart,
                                           p.curve.str(), p.point.str());
                };
                return key(a) < key(b);
            });
            D.strata.push_back(std::move(s));
        }
        return std::move(D);
    }

    Decomposition plane_result() {
        D.plane = true;
        if (D.base_points.empty()) {
            BasePoints B = base_points(P);
            for (auto& b : B.affine) D.base_points.push_back(b);
            for (auto& b : B.infinity) D.base_points.push_back(b);
        }
        Stratum s;
        s.multiplicity = 1;
        StratumPiece piece;
        piece.kind = PieceKind::generic_plane;
        piece.method = "plane";
        for (auto& b : D.base_points) piece.minus_points.push_back(b);
        s.pieces.push_back(piece);
        D.strata.push_back(std::move(s));
        return std::move(D);
    }
};

} // namespace

Decomposition analyze(const ProjParam& P, const AnalyzeOptions& opt) {
    Builder b(P, opt);
    return b.build();
}

Decomposition analyze_plane(const ProjParam& P) {
    Builder b(P, AnalyzeOptions{});
    return b.plane_result();
}

// ---------------------------------------------------------------------------
// verification by sampling
// ---------------------------------------------------------------------------

namespace {

struct SampleRng {
    uint64_t s;
    explicit SampleRng(uint64_t seed) : s(seed ? seed : 7) {}
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    Rational rat() {
        long num = static_cast<long>(next() % 41) - 20;
        long den = 1 + static_cast<long>(next() % 3);
        return Rational(Int(num), Int(den));
    }
};

} // namespace

VerifyReport verify_samples(const Decomposition& D, int n, uint64_t seed) {
    VerifyReport rep;
    if (D.plane) return rep;
    SampleRng rng(seed);
    std::array<AffineParam, 4> charts;
    for (int i = 1; i <= 4; i++) charts[i - 1] = dehomogenize(D.input, i, Flavor::affine);

    auto check_mult = [&](const AlgPoint& pt, int chart, long expect, const std::string& what) {
        try {
            long m = multiplicity_at_point(charts[chart - 1], pt, D.cache, nullptr);
            rep.checked++;
            if (m != expect) {
                rep.mismatches++;
                rep.details.push_back(what + ": got " + std::to_string(m) + ", piece says " +
                                      std::to_string(expect));
            }
        } catch (const ValidationError&) {
            // sampled point slid onto a denominator locus; skip
        }
    };

    for (auto& st : D.strata) {
        for (auto& piece : st.pieces) {
            if (piece.kind == PieceKind::curve) {
                auto pts = points_on_curve(piece.curve, n, rng.next());
                for (auto& pt : pts) {
                    bool excluded = false;
                    for (auto& e : piece.minus_points)
                        if (same_point(e, pt)) excluded = true;
                    if (excluded || pt.ext_degree() > 8) continue;
                    check_mult(pt, piece.chart, st.multiplicity,
                               "curve " + piece.curve.str() + " at " + pt.str());
                }
            } else if (piece.kind == PieceKind::generic_plane) {
                int done = 0;
                for (int tries = 0; tries < 20 * n && done < n; tries++) {
                    AlgPoint pt = affine_pt(nullptr, nf_rat(rng.rat()), nf_rat(rng.rat()));
                    bool bad = false;
                    for (auto& c : piece.minus_curves)
                        if (point_on(pt, c)) bad = true;
                    for (auto& e : piece.minus_points)
                        if (same_point(e, pt)) bad = true;
                    if (bad) continue;
                    check_mult(pt, 4, st.multiplicity, "generic plane at " + pt.str());
                    done++;
                }
            } else if (piece.kind == PieceKind::infinity_family) {
                int done = 0;
                for (int tries = 0; tries < 20 * n && done < n; tries++) {
                    Rational lam = rng.rat();
                    AlgPoint dir;
                    dir.projective = true;
                    dir.coords = {nf_rat(Rational(1)), nf_rat(lam), NFElem()};
                    bool bad = false;
                    for (auto& e : piece.minus_lambdas)
                        if (same_point(e, dir)) bad = true;
                    if (bad) continue;
                    AlgPoint par = affine_pt(nullptr, nf_rat(lam), NFElem());
                    check_mult(par, piece.chart, st.multiplicity, "infinity direction " + dir.str());
                    done++;
                }
            } else if (piece.kind == PieceKind::point) {
                check_mult(piece.point, piece.chart, st.multiplicity, "point " + piece.point.str());
            }
        }
    }

    // partition check on a rational grid plus sampled infinity directions
    auto claimants = [&](const AlgPoint& pt) {
        int count = 0;
        for (auto& st : D.strata) {
            for (auto& piece : st.pieces) {
                if (piece.kind == PieceKind::generic_plane) {
                    bool bad = false;
                    for (auto& c : piece.minus_curves)
                        if (point_on(pt, c)) bad = true;
                    if (!bad)
                        for (auto& e : piece.minus_points)
                            if (same_point(e, pt)) bad = true;
                    if (!bad) count++;
                } else if (piece.kind == PieceKind::curve) {
                    if (!point_on(pt, piece.curve)) continue;
                    bool ex = false;
                    for (auto& e : piece.minus_points)
                        if (same_point(e, pt)) ex = true;
                    if (!ex) count++;
                } else if (piece.kind == PieceKind::point) {
                    if (same_point(piece.point, pt)) count++;
                }
            }
        }
        for (auto& b : D.base_points) {
            if (b.coords[2].is_zero()) continue;
            AlgPoint ba;
            ba.field = b.field;
            ba.coords = {b.coords[0], b.coords[1]};
            if (same_point(ba, pt)) count++;
        }
        for (auto& d : D.deferred) {
            if (!d.point.projective && same_point(d.point, pt)) count++;
        }
        return count;
    };
    for (long a = 0; a < 30; a++) {
        for (long bb = 0; bb < 30; bb++) {
            AlgPoint pt = affine_pt(nullptr, nf_rat(Rational(a - 14)), nf_rat(Rational(bb - 14)));
            if (claimants(pt) != 1) {
                rep.grid_errors++;
                rep.details.push_back("grid point " + pt.str() + " claimed " +
                                      std::to_string(claimants(pt)) + " times");
            }
        }
    }
    // infinity directions
    auto inf_claimants = [&](const AlgPoint& dir) {
        int count = 0;
        for (auto& st : D.strata) {
            for (auto& piece : st.pieces) {
                if (piece.kind == PieceKind::infinity_family) {
                    if (dir.coords[0].is_zero()) continue;  // (0:1:0) is not in the family
                    bool ex = false;
                    for (auto& e : piece.minus_lambdas)
                        if (same_point(e, dir)) ex = true;
                    if (!ex) count++;
                } else if (piece.kind == PieceKind::infinity_point) {
                    if (same_point(piece.point, dir)) count++;
                }
            }
        }
        for (auto& b : D.base_points) {
            if (!b.coords[2].is_zero()) continue;
            if (same_point(b, dir)) count++;
        }
        for (auto& d : D.deferred) {
            if (d.point.projective && same_point(d.point, dir)) count++;
        }
        return count;
    };
    for (long k = 0; k < 50; k++) {
        AlgPoint dir;
        dir.projective = true;
        dir.coords = {nf_rat(Rational(1)), nf_rat(Rational(k - 24)), NFElem()};
        if (inf_claimants(dir) != 1) {
            rep.grid_errors++;
            rep.details.push_back("infinity direction " + dir.str() + " claimed " +
                                  std::to_string(inf_claimants(dir)) + " times");
        }
    }
    {
        AlgPoint dir010;
        dir010.projective = true;
        dir010.coords = {NFElem(), nf_rat(Rational(1)), NFElem()};
        if (inf_claimants(dir010) != 1) {
            rep.grid_errors++;
            rep.details.push_back("(0:1:0) claimed " + std::to_string(inf_claimants(dir010)) +
                                  " times");
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// output
// ---------------------------------------------------------------------------

namespace {

using Json = nlohmann::ordered_json;

Json point_json(const AlgPoint& p) {
    Json j;
    j["projective"] = p.projective;
    Json coords = Json::array();
    for (auto& c : p.coords) coords.push_back(c.str());
    j["coords"] = coords;
    if (p.field) {
        j["symbol"] = p.field->symbol();
        j["minpoly"] = from_upoly(p.field->minpoly(), var("r")).str();
    }
    return j;
}

const char* kind_name(PieceKind k) {
    switch (k) {
        case PieceKind::generic_plane: return "generic_plane";
        case PieceKind::curve: return "curve";
        case PieceKind::point: return "point";
        case PieceKind::infinity_family: return "infinity_family";
        case PieceKind::infinity_point: return "infinity_point";
    }
    return "?";
}

Json piece_json(const StratumPiece& p) {
    Json j;
    j["chart"] = (p.kind == PieceKind::infinity_family || p.kind == PieceKind::infinity_point)
                     ? "infinity"
                     : "affine";
    j["kind"] = kind_name(p.kind);
    j["level"] = p.level;
    j["via"] = "x" + std::to_string(p.chart);
    if (p.kind == PieceKind::curve) j["on"] = p.curve.str();
    if (p.kind == PieceKind::point || p.kind == PieceKind::infinity_point)
        j["point"] = point_json(p.point);
    Json minus = Json::object();
    if (!p.minus_curves.empty()) {
        Json a = Json::array();
        for (auto& c : p.minus_curves) a.push_back(c.str());
        minus["curves"] = a;
    }
    if (!p.minus_points.empty()) {
        Json a = Json::array();
        for (auto& q : p.minus_points) a.push_back(point_json(q));
        minus["points"] = a;
    }
    if (!p.minus_lambdas.empty()) {
        Json a = Json::array();
        for (auto& q : p.minus_lambdas) a.push_back(point_json(q));
        minus["directions"] = a;
    }
    j["minus"] = minus;
    if (p.cone) j["cone_vertex"] = true;
    j["method"] = p.method;
    return j;
}

} // namespace

std::string to_json(const Decomposition& D) {
    Json j;
    Json input;
    for (int i = 1; i <= 4; i++) input["p" + std::to_string(i)] = D.input.at(i).str();
    j["input"] = input;
    if (!D.warnings.empty()) j["warnings"] = D.warnings;
    j["plane"] = D.plane;
    if (!D.plane) {
        Json deg;
        deg["map_degree_n2"] = D.cache.n2;
        deg["phi23_at_A0_n1"] = D.cache.n1;
        deg["surface_degree"] = D.cache.deg_z;
        deg["partial_degree"] = D.cache.partial_deg;
        Json a0 = Json::array();
        for (auto& c : D.cache.A0) a0.push_back(c.str());
        deg["A0"] = a0;
        j["degrees"] = deg;
        Json loci = Json::object();
        for (int i = 0; i < 4; i++) loci["Delta" + std::to_string(i + 1)] = D.delta_gens[i].str();
        j["denominator_loci"] = loci;
        Json guards = Json::object();
        for (int i = 0; i < 5; i++) {
            Json d = Json::array();
            for (auto& c : D.guards.delta[i].curves) d.push_back(c.str());
            for (auto& p : D.guards.delta[i].points) d.push_back(point_json(p));
            guards["Delta" + std::to_string(i) + "_star"] = d;
        }
        j["guards"] = guards;
    }
    Json strata = Json::array();
    for (auto& s : D.strata) {
        Json js;
        js["multiplicity"] = s.multiplicity;
        Json pieces = Json::array();
        for (auto& p : s.pieces) pieces.push_back(piece_json(p));
        js["pieces"] = pieces;
        strata.push_back(js);
    }
    j["strata"] = strata;
    Json base = Json::array();
    for (auto& b : D.base_points) base.push_back(point_json(b));
    j["base_points"] = base;
    if (!D.deferred.empty()) {
        Json def = Json::array();
        for (auto& d : D.deferred) {
            Json e;
            e["point"] = point_json(d.point);
            e["reason"] = d.reason;
            def.push_back(e);
        }
        j["deferred"] = def;
    }
    Json prov;
    prov["shift_c"] = D.cache.change.shift_c;
    Json perm = Json::array();
    for (int x : D.cache.change.perm) perm.push_back(x);
    prov["coordinate_permutation"] = perm;
    prov["offpoint_pairs_tried"] = D.cache.offpoint_pairs;
    j["provenance"] = prov;
    return j.dump(2) + "\n";
}

std::string to_text(const Decomposition& D) {
    std::ostringstream os;
    if (D.plane) {
        os << "surface is a plane; all points simple (S_1 = P^2)\n";
    } else {
        os << "deg(map) n2 = " << D.cache.n2 << ", deg Phi23(A0) n1 = " << D.cache.n1
           << ", deg(surface) = " << D.cache.deg_z << "\n";
    }
    for (auto& s : D.strata) {
        os << "S_" << s.multiplicity << ":\n";
        for (auto& p : s.pieces) {
            os << "  - ";
            switch (p.kind) {
                case PieceKind::generic_plane:
                    os << "the affine parameter plane minus the listed curves/points";
                    break;
                case PieceKind::curve:
                    os << "curve " << p.curve.str() << " minus " << p.minus_points.size()
                       << " point(s)";
                    break;
                case PieceKind::point:
                    os << "point " << p.point.str();
                    break;
                case PieceKind::infinity_family:
                    os << "infinity directions (1:lambda:0) minus " << p.minus_lambdas.size()
                       << " direction(s)";
                    break;
                case PieceKind::infinity_point:
                    os << "infinity point " << p.point.str();
                    break;
            }
            os << "  [level " << p.level << ", via x" << p.chart << "]";
            if (p.cone) os << "  (cone vertex)";
            os << "\n";
        }
    }
    os << "base points: " << D.base_points.size() << "\n";
    for (auto& b : D.base_points) os << "  " << b.str() << "\n";
    for (auto& d : D.deferred)
        os << "deferred: " << d.point.str() << " (" << d.reason << ")\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// SVG rendering
// ---------------------------------------------------------------------------

namespace {

const char* mult_color(long k) {
    switch (k) {
        case 1: return "#9aa0a6";
        case 2: return "#d93025";
        case 3: return "#1a73e8";
        case 4: return "#188038";
        case 5: return "#f29900";
        default: return "#a142f4";
    }
}

double eval_double(const PolyQ& f, double x, double y) {
    double acc = 0;
    for (auto& [e, c] : f.terms()) {
        double term = c.to_double();
        for (size_t i = 0; i < f.vars().size(); i++) {
            double base = f.vars()[i] == var("tt") ? x : y;
            for (int k = 0; k < e[i]; k++) term *= base;
        }
        acc += term;
    }
    return acc;
}

} // namespace

std::string to_svg(const Decomposition& D) {
    const int W = 640, Hh = 640;
    const double R = 280;  // radius of the infinity circle
    double win = 3.0;
    // fit the window to the real special points
    for (auto& s : D.strata) {
        for (auto& p : s.pieces) {
            if (p.kind == PieceKind::point && p.point.is_rational()) {
                win = std::max(win, std::abs(p.point.coords[0].rep().is_zero()
                                                 ? 0.0
                                                 : p.point.coords[0].rep().c[0].to_double()) *
                                        1.4);
                win = std::max(win, std::abs(p.point.coords[1].rep().is_zero()
                                                 ? 0.0
                                                 : p.point.coords[1].rep().c[0].to_double()) *
                                        1.4);
            }
        }
    }
    double box = R * 0.62;  // half-size of the affine window drawing area
    auto sx = [&](double t) { return W / 2.0 + t / win * box; };
    auto sy = [&](double s) { return Hh / 2.0 - s / win * box; };

    std::ostringstream os;
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << Hh << "'>\n";
    os << "<rect width='100%' height='100%' fill='white'/>\n";
    os << "<circle cx='" << W / 2 << "' cy='" << Hh / 2 << "' r='" << R
       << "' fill='none' stroke='#444' stroke-width='2'/>\n";
    os << "<text x='12' y='20' font-size='13'>parameter plane (affine window |t|,|s| &lt; "
       << win << "; boundary circle = line at infinity)</text>\n";

    // curve pieces via marching squares on the window
    const int Ngrid = 110;
    for (auto& s : D.strata) {
        for (auto& p : s.pieces) {
            if (p.kind != PieceKind::curve) continue;
            const char* col = mult_color(s.multiplicity);
            std::vector<std::vector<double>> val(Ngrid + 1, std::vector<double>(Ngrid + 1));
            for (int i = 0; i <= Ngrid; i++) {
                for (int jj = 0; jj <= Ngrid; jj++) {
                    double x = -win + 2 * win * i / Ngrid;
                    double y = -win + 2 * win * jj / Ngrid;
                    val[i][jj] = eval_double(p.curve, x, y);
                }
            }
            os << "<g stroke='" << col << "' stroke-width='1.8' fill='none'>\n";
            for (int i = 0; i < Ngrid; i++) {
                for (int jj = 0; jj < Ngrid; jj++) {
                    double x0 = -win + 2 * win * i / Ngrid, x1 = -win + 2 * win * (i + 1) / Ngrid;
                    double y0 = -win + 2 * win * jj / Ngrid, y1 = -win + 2 * win * (jj + 1) / Ngrid;
                    double v00 = val[i][jj], v10 = val[i + 1][jj], v01 = val[i][jj + 1],
                           v11 = val[i + 1][jj + 1];
                    std::vector<std::pair<double, double>> cut;
                    auto edge = [&](double a, double b, double xa, double ya, double xb,
                                    double yb) {
                        if ((a > 0) == (b > 0) || a == b) return;
                        double f = a / (a - b);
                        cut.push_back({xa + f * (xb - xa), ya + f * (yb - ya)});
                    };
                    edge(v00, v10, x0, y0, x1, y0);
                    edge(v10, v11, x1, y0, x1, y1);
                    edge(v11, v01, x1, y1, x0, y1);
                    edge(v01, v00, x0, y1, x0, y0);
                    if (cut.size() >= 2) {
                        os << "<line x1='" << sx(cut[0].first) << "' y1='" << sy(cut[0].second)
                           << "' x2='" << sx(cut[1].first) << "' y2='" << sy(cut[1].second)
                           << "'/>\n";
                    }
                }
            }
            os << "</g>\n";
        }
    }
    // isolated real points
    for (auto& s : D.strata) {
        for (auto& p : s.pieces) {
            if (p.kind == PieceKind::point && p.point.is_rational()) {
                double x = p.point.coords[0].is_zero() ? 0 : p.point.coords[0].rep().c[0].to_double();
                double y = p.point.coords[1].is_zero() ? 0 : p.point.coords[1].rep().c[0].to_double();
                os << "<circle cx='" << sx(x) << "' cy='" << sy(y) << "' r='4' fill='"
                   << mult_color(s.multiplicity) << "'/>\n";
            }
            if (p.kind == PieceKind::infinity_point || p.kind == PieceKind::infinity_family) {
                // marks on the boundary circle
                if (p.kind == PieceKind::infinity_point && p.point.is_rational()) {
                    double lam = 0;
                    bool is010 = p.point.coords[0].is_zero();
                    double ang;
                    if (is010) {
                        ang = M_PI / 2;
                    } else {
                        lam = p.point.coords[1].is_zero() ? 0
                                                          : p.point.coords[1].rep().c[0].to_double();
                        ang = std::atan(lam);
                    }
                    for (int sgn = 0; sgn < 2; sgn++) {
                        double a = ang + sgn * M_PI;
                        os << "<circle cx='" << (W / 2.0 + R * std::cos(a)) << "' cy='"
                           << (Hh / 2.0 - R * std::sin(a)) << "' r='5' fill='"
                           << mult_color(s.multiplicity) << "'/>\n";
                    }
                }
                if (p.kind == PieceKind::infinity_family) {
                    os << "<circle cx='" << W / 2 << "' cy='" << Hh / 2 << "' r='" << R
                       << "' fill='none' stroke='" << mult_color(s.multiplicity)
                       << "' stroke-width='2' stroke-dasharray='6 4'/>\n";
                }
            }
        }
    }
    // legend
    int ly = 40;
    for (auto& s : D.strata) {
        os << "<rect x='12' y='" << ly - 10 << "' width='12' height='12' fill='"
           << mult_color(s.multiplicity) << "'/>";
        os << "<text x='30' y='" << ly << "' font-size='13'>multiplicity " << s.multiplicity
           << "</text>\n";
        ly += 20;
    }
    os << "<text x='12' y='" << ly
       << "' font-size='11'>complex components carry no real drawing; see the JSON report"
       << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace surfstrat
