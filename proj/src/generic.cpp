#include "surfstrat/generic.hpp"

#include "surfstrat/factor.hpp"
#include "surfstrat/frac.hpp"

#include <algorithm>

namespace surfstrat {

namespace {

VarId TV, SV, H1, H2, XV1, XV2, TT, SS, LAM;

void init_vars() {
    TV = var("t");
    SV = var("s");
    H1 = var("h1");
    H2 = var("h2");
    XV1 = var("X1");
    XV2 = var("X2");
    TT = var("tt");
    SS = var("ss");
    LAM = var("lambda");
}

struct VarInit {
    VarInit() { init_vars(); }
} var_init_once;

/// One guard group: the zero sets of `polys`, either intersected (common)
/// or united, contributing to Delta_{idx}^*.
template <class K>
struct Group {
    std::vector<MPoly<K>> polys;
    bool common = true;
    int idx = 0;
};

template <class K>
struct EngineOut {
    bool g_nontrivial = false;
    MPoly<K> K_gcd;
    long m1 = -1;
    long shift = 0;
    std::vector<Group<K>> groups;
    MPoly<K> ups1, ups2, frak_r, a_cont;
    long cardJ = 0;
};

/// The generic-center analysis shared by the level-1 run (center Q(tt,ss)),
/// the parametrized-curve runs (center Q(T(lambda),S(lambda))) and the
/// function-field runs (center with coordinates in K(c)). The core of the
/// multiplicity analysis, with every specialization guard collected into `groups`.
template <class K>
EngineOut<K> phi_engine(const std::array<MPoly<K>, 3>& N_in, const std::array<MPoly<K>, 3>& D_in,
                        const std::array<Frac<K>, 3>& A, const K& one, bool want_guards) {
    EngineOut<K> out;
    std::array<Frac<K>, 3> diff;
    for (int i = 0; i < 3; i++) diff[i] = Frac<K>(N_in[i], D_in[i]) - A[i];
    if (diff[0].is_zero())
        throw InternalError("phi_engine: first component constant (excluded plane)");
    // (N_k/D_k - A_k)/(N_0/D_0 - A_0) == (N_k - A_k D_k)/(N_0 - A_0 D_0) * D_0/D_k
    std::array<Frac<K>, 2> chi;
    chi[0] = diff[1] / diff[0];
    chi[1] = diff[2] / diff[0];
    for (auto& c : chi) {
        if (c.num.degree_in({TV, SV}) <= 0 && c.den.degree_in({TV, SV}) <= 0)
            throw InternalError("phi_engine: constant Phi component (degenerate input)");
    }

    // parameter shear so that no numerator/denominator closure passes (0:1:0)
    {
        std::vector<MPoly<K>> inc{chi[0].num, chi[0].den, chi[1].num, chi[1].den};
        out.shift = find_shear(inc, TV, SV, one);
        if (out.shift != 0) {
            for (auto& c : chi) {
                c.num = shear(c.num, TV, SV, out.shift, one);
                c.den = shear(c.den, TV, SV, out.shift, one);
                c.reduce();
            }
        }
    }

    // g_i and their gcd
    MPoly<K> h1p = MPoly<K>::variable(H1, one), h2p = MPoly<K>::variable(H2, one);
    MPoly<K> g1 = (chi[0] - chi[0].subst2(TV, h1p, SV, h2p)).num;
    MPoly<K> g2 = (chi[1] - chi[1].subst2(TV, h1p, SV, h2p)).num;
    out.K_gcd = mgcd(g1, g2);
    if (out.K_gcd.degree_in({TV, SV}) > 0) {
        out.g_nontrivial = true;
        return out;
    }

    if (want_guards) {
        // Delta_0^*: leading coefficients and resultant of (g1, g2) w.r.t. t
        out.ups1 = g1.lc_in(TV);
        out.ups2 = g2.lc_in(TV);
        out.frak_r = resultant(g1, g2, TV);
        Group<K> g_ups{{}, true, 0};
        for (auto& [e, c] : out.ups1.coefficients_wrt({H1, H2, SV})) g_ups.polys.push_back(c);
        for (auto& [e, c] : out.ups2.coefficients_wrt({H1, H2, SV})) g_ups.polys.push_back(c);
        out.groups.push_back(std::move(g_ups));
        Group<K> g_r{{}, true, 0};
        for (auto& [e, c] : out.frak_r.coefficients_wrt({H1, H2, SV})) g_r.polys.push_back(c);
        out.groups.push_back(std::move(g_r));
        // Z_K: one nonzero coefficient of the top (h1,h2)-form of K
        {
            long dh = out.K_gcd.degree_in({H1, H2});
            MPoly<K> pick;
            std::vector<int> best_exp;
            for (auto& [e, c] : out.K_gcd.coefficients_wrt({H1, H2})) {
                long eh1 = 0, eh2 = 0;
                for (size_t i = 0; i < out.K_gcd.vars().size(); i++) {
                    if (out.K_gcd.vars()[i] == H1) eh1 = e[i];
                    if (out.K_gcd.vars()[i] == H2) eh2 = e[i];
                }
                if (eh1 + eh2 != dh) continue;
                std::vector<int> key{static_cast<int>(eh1), static_cast<int>(eh2)};
                if (best_exp.empty() || key > best_exp) {
                    best_exp = key;
                    pick = c;
                }
            }
            if (!pick.is_zero() && pick.degree_in({TV, SV, H1, H2}) == 0) {
                out.groups.push_back(Group<K>{{pick}, false, 0});
            }
        }
        // Z_infinity: values of the homogenized chi parts at (0:1:0)
        Group<K> g_inf{{}, false, 1};
        for (auto& c : chi) {
            MPoly<K> a = infinity_coeff(c.num, TV, SV);
            MPoly<K> b = infinity_coeff(c.den, TV, SV);
            if (a.is_zero() || b.is_zero())
                throw InternalError("phi_engine: infinity coefficient vanished after shear");
            g_inf.polys.push_back(a);
            g_inf.polys.push_back(b);
        }
        out.groups.push_back(std::move(g_inf));
    }

    // the auxiliary planar map against generic targets X1, X2
    std::array<MPoly<K>, 2> H;
    H[0] = chi[0].num - chi[0].den * MPoly<K>::variable(XV1, one);
    H[1] = chi[1].num - chi[1].den * MPoly<K>::variable(XV2, one);
    if (want_guards) {
        for (int k = 0; k < 2; k++) {
            MPoly<K> M = H[k].lc_in(SV);
            Group<K> g{{}, true, 1};
            for (auto& [e, c] : M.coefficients_wrt({TV, XV1, XV2})) g.polys.push_back(c);
            out.groups.push_back(std::move(g));
        }
    }
    MPoly<K> R = resultant(H[0], H[1], SV);
    if (R.is_zero()) throw InternalError("phi_engine: resultant vanished (g == 1 contract)");
    if (want_guards) {
        MPoly<K> W = R.lc_in(TV);
        Group<K> g{{}, true, 2};
        for (auto& [e, c] : W.coefficients_wrt({XV1, XV2})) g.polys.push_back(c);
        out.groups.push_back(std::move(g));
    }

    // content w.r.t. (X1, X2) and the specialization guards for it
    std::vector<MPoly<K>> abar;
    for (auto& [e, c] : R.coefficients_wrt({XV1, XV2})) abar.push_back(c);
    out.cardJ = static_cast<long>(abar.size());
    if (out.cardJ <= 1) throw InternalError("phi_engine: card(J) <= 1");
    MPoly<K> a = mgcd_many(abar);
    out.a_cont = a;
    out.m1 = R.degree(TV) - a.degree(TV);
    if (want_guards) {
        std::vector<MPoly<K>> aij;
        for (auto& ab : abar) {
            auto q = ab.divide_exact(a);
            if (!q) throw InternalError("phi_engine: content does not divide");
            aij.push_back(*q);
        }
        MPoly<K> N = a.degree(TV) > 0 ? a.lc_in(TV) : MPoly<K>::constant(one);
        if (out.cardJ == 2) {
            Group<K> g3{{aij[0].lc_in(TV), aij[1].lc_in(TV)}, true, 3};
            out.groups.push_back(std::move(g3));
            MPoly<K> S = resultant(aij[0], aij[1], TV);
            out.groups.push_back(Group<K>{{S}, false, 3});
            out.groups.push_back(Group<K>{{N}, false, 4});
        } else {
            MPoly<K> combo = aij[1];
            for (long k = 2; k < out.cardJ; k++) {
                VarId wk = var("W" + std::to_string(k - 1));
                combo += MPoly<K>::variable(wk, one) * aij[static_cast<size_t>(k)];
            }
            MPoly<K> Sbar = resultant(aij[0], combo, TV);
            Group<K> g3{{}, true, 3};
            std::vector<VarId> wvars;
            for (long k = 2; k < out.cardJ; k++) wvars.push_back(var("W" + std::to_string(k - 1)));
            for (auto& [e, c] : Sbar.coefficients_wrt(wvars)) g3.polys.push_back(c);
            out.groups.push_back(std::move(g3));
            out.groups.push_back(Group<K>{{aij[0].lc_in(TV), N}, false, 4});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// level-1 generic run (domain variables tt, ss)
// ---------------------------------------------------------------------------

/// interpret a Q-engine guard group over the (tt,ss) plane
VarietyDesc interpret_group_plane(const Group<Rational>& g) {
    VarietyDesc out;
    auto add_poly_components = [&](const PolyQ& p) {
        if (p.is_zero() || p.is_constant()) return;  // nonzero constant: empty set
        for (auto& [f, m] : factor(p).factors) {
            (void)m;
            if (!f.is_constant()) out.curves.push_back(f);
        }
    };
    if (g.common) {
        std::vector<PolyQ> gens;
        bool whole = true;
        for (auto& p : g.polys) {
            if (!p.is_zero()) whole = false;
            if (!p.is_zero()) gens.push_back(p);
        }
        if (whole || gens.empty()) return out;  // all zero: contributes nothing useful
        bool nonzero_const = false;
        for (auto& p : gens)
            if (p.is_constant()) nonzero_const = true;
        if (nonzero_const) return out;  // empty set
        SystemSolution sol = solve_system(gens, TT, SS);
        out.curves = sol.curves;
        out.points = sol.points;
    } else {
        for (auto& p : g.polys) add_poly_components(p);
    }
    return out;
}

void merge_variety(VarietyDesc& into, const VarietyDesc& v) {
    for (auto& c : v.curves) {
        bool dup = false;
        for (auto& e : into.curves)
            if (e == c) dup = true;
        if (!dup) into.curves.push_back(c);
    }
    for (auto& p : v.points) {
        bool dup = false;
        for (auto& e : into.points)
            if (same_point(e, p)) dup = true;
        if (!dup) into.points.push_back(p);
    }
}

void sort_variety(VarietyDesc& v) {
    std::sort(v.curves.begin(), v.curves.end(),
              [](const PolyQ& a, const PolyQ& b) { return a.before(b); });
}

} // namespace

GenericOutcome generic_g_and_guards(const AffineParam& Q, const SurfaceCache* cache) {
    GenericOutcome out;
    std::array<MPoly<Rational>, 3> N, D;
    std::array<Frac<Rational>, 3> A;
    for (int i = 0; i < 3; i++) {
        N[i] = Q.comp[i].num();
        D[i] = Q.comp[i].den();
        A[i] = Frac<Rational>(
            Q.comp[i].num().rename_var(TV, TT).rename_var(SV, SS),
            Q.comp[i].den().rename_var(TV, TT).rename_var(SV, SS));
    }
    EngineOut<Rational> eng = phi_engine<Rational>(N, D, A, Rational(1), true);
    if (eng.g_nontrivial) {
        out.plane = true;
        out.guards.K_gcd = eng.K_gcd;
        return out;
    }
    GuardSets& gs = out.guards;
    gs.K_gcd = eng.K_gcd;
    gs.upsilon1 = eng.ups1;
    gs.upsilon2 = eng.ups2;
    gs.frak_r = eng.frak_r;
    gs.a_content = eng.a_cont;
    gs.m1_generic = eng.m1;
    gs.cardJ = eng.cardJ;
    gs.run_shift = eng.shift;
    for (auto& g : eng.groups) {
        VarietyDesc v = interpret_group_plane(g);
        merge_variety(gs.delta[static_cast<size_t>(g.idx)], v);
    }
    for (auto& d : gs.delta) {
        sort_variety(d);
        merge_variety(gs.delta_star, d);
    }
    sort_variety(gs.delta_star);
    if (cache) {
        // criterion for simple points at the generic parameter
        if (cache->n1 - gs.m1_generic != cache->n2)
            throw InternalError("generic run: generic point is not simple (n1 - m1 != n2)");
    }
    return out;
}

bool is_plane_generic(const AffineParam& Q) {
    std::array<MPoly<Rational>, 3> N, D;
    std::array<Frac<Rational>, 3> A;
    for (int i = 0; i < 3; i++) {
        N[i] = Q.comp[i].num();
        D[i] = Q.comp[i].den();
        A[i] = Frac<Rational>(
            Q.comp[i].num().rename_var(TV, TT).rename_var(SV, SS),
            Q.comp[i].den().rename_var(TV, TT).rename_var(SV, SS));
    }
    EngineOut<Rational> eng = phi_engine<Rational>(N, D, A, Rational(1), false);
    return eng.g_nontrivial;
}

namespace {

// ---------------------------------------------------------------------------
// curve runs
// ---------------------------------------------------------------------------

struct CurveParam {
    Frac<Rational> T, S;                 // rational functions of lambda
    std::vector<AlgPoint> extra_points;  // points the parametrization misses
};

/// parametrization of a line a*tt + b*ss + c = 0
CurveParam line_param(const PolyQ& f) {
    Rational a(0), b(0), c(0);
    for (auto& [e, coeff] : f.terms()) {
        long ett = 0, ess = 0;
        for (size_t i = 0; i < f.vars().size(); i++) {
            if (f.vars()[i] == TT) ett = e[i];
            if (f.vars()[i] == SS) ess = e[i];
        }
        if (ett == 1) a = coeff;
        else if (ess == 1) b = coeff;
        else c = coeff;
    }
    PolyQ lam = PolyQ::variable(LAM, Rational(1));
    CurveParam out;
    if (!b.is_zero()) {
        out.T = Frac<Rational>(lam);
        out.S = Frac<Rational>(PolyQ::constant(-c / b) - lam.scaled(a / b));
    } else {
        out.T = Frac<Rational>(PolyQ::constant(-c / a));
        out.S = Frac<Rational>(lam);
    }
    return out;
}

std::optional<std::pair<Rational, Rational>> conic_rational_point(const PolyQ& f) {
    std::vector<Rational> candidates;
    for (long num = 0; num <= 8; num++) {
        for (long den = 1; den <= 3; den++) {
            candidates.push_back(Rational(Int(num), Int(den)));
            if (num) candidates.push_back(Rational(Int(-num), Int(den)));
        }
    }
    PolyQ ft = f.derivative(TT), fs = f.derivative(SS);
    for (auto& t0 : candidates) {
        PolyQ g = f.subst(TT, PolyQ::constant(t0));
        if (g.is_zero()) continue;  // vertical line component: not an irreducible conic
        if (g.is_constant()) continue;
        for (auto& root : univariate_roots(g, SS)) {
            if (!root.field) {
                Rational s0 = root.value.rep().is_zero() ? Rational(0) : root.value.rep().c[0];
                // the projection center must be a smooth point of the conic
                std::map<VarId, Rational> at{{TT, t0}, {SS, s0}};
                if (ft.eval_all(at).is_zero() && fs.eval_all(at).is_zero()) continue;
                return std::make_pair(t0, s0);
            }
        }
    }
    return std::nullopt;
}

/// stereographic parametrization of an irreducible conic from a point on it
CurveParam conic_param(const PolyQ& f, const Rational& t0, const Rational& s0) {
    PolyQ lam = PolyQ::variable(LAM, Rational(1));
    // f(t0 + u, s0 + lambda u) = A(lambda) u^2 + B(lambda) u
    PolyQ u = PolyQ::variable(var("u"), Rational(1));
    PolyQ sub = f.subst(TT, PolyQ::constant(t0) + u).subst(SS, PolyQ::constant(s0) + lam * u);
    PolyQ Acoef = sub.coeff_of(var("u"), 2);
    PolyQ Bcoef = sub.coeff_of(var("u"), 1);
    if (!sub.coeff_of(var("u"), 0).is_zero())
        throw InternalError("conic_param: base point not on the conic");
    CurveParam out;
    out.T = Frac<Rational>(PolyQ::constant(t0) * Acoef - Bcoef, Acoef);
    out.S = Frac<Rational>(PolyQ::constant(s0) * Acoef - lam * Bcoef, Acoef);
    // the vertical direction is reached only at lambda = infinity: its second
    // intersection with the conic is handled pointwise
    PolyQ vert = f.subst(TT, PolyQ::constant(t0));
    if (vert.degree(SS) == 2) {
        // s0 + other root: product/sum via coefficients
        auto cs = vert.univ_coeffs(SS);
        Rational c2 = cs[2].constant_value(), c1 = cs[1].constant_value();
        Rational other = -c1 / c2 - s0;
        if (other != s0) {
            AlgPoint p;
            p.coords = {NFElem(nullptr, UPoly<Rational>::constant(t0)),
                        NFElem(nullptr, UPoly<Rational>::constant(other))};
            out.extra_points.push_back(std::move(p));
        }
    }
    return out;
}

Frac<Rational> subst_frac(const PolyQ& p, const Frac<Rational>& T, const Frac<Rational>& S) {
    // evaluate p(t,s) at rational functions of lambda
    Frac<Rational> acc(PolyQ(), poly_const(1));
    for (auto& [e, c] : p.terms()) {
        long et = 0, es = 0;
        for (size_t i = 0; i < p.vars().size(); i++) {
            if (p.vars()[i] == TV) et = e[i];
            if (p.vars()[i] == SV) es = e[i];
        }
        Frac<Rational> term(PolyQ::constant(c), poly_const(1));
        for (long k = 0; k < et; k++) term = term * T;
        for (long k = 0; k < es; k++) term = term * S;
        acc = acc + term;
    }
    return acc;
}

NFElem point_eval_lambda(const PolyQ& p, const UnivRoot& root) {
    MPoly<NFElem> lifted = root.field ? lift_nf(p, root.field)
                                      : p.map_coeffs<NFElem>([](const Rational& r) {
                                            return NFElem(nullptr, UPoly<Rational>::constant(r));
                                        });
    MPoly<NFElem> ev = lifted.eval_partial({{var("lambda"), root.value}});
    if (ev.is_zero()) return NFElem();
    if (!ev.is_constant()) throw InternalError("point_eval_lambda: unbound variables");
    return ev.constant_value();
}

NFElem frac_eval_nf(const Frac<Rational>& F, const UnivRoot& root) {
    if (F.is_zero()) return NFElem();
    std::map<VarId, NFElem> at{{LAM, root.value}};
    MPoly<NFElem> n = root.field ? lift_nf(F.num, root.field)
                                 : F.num.map_coeffs<NFElem>([](const Rational& r) {
                                       return NFElem(nullptr, UPoly<Rational>::constant(r));
                                   });
    MPoly<NFElem> d = root.field ? lift_nf(F.den, root.field)
                                 : F.den.map_coeffs<NFElem>([](const Rational& r) {
                                       return NFElem(nullptr, UPoly<Rational>::constant(r));
                                   });
    MPoly<NFElem> ne = n.eval_partial(at), de = d.eval_partial(at);
    if (!ne.is_constant() || !de.is_constant())
        throw InternalError("frac_eval_nf: unbound variables");
    NFElem dv = de.is_zero() ? NFElem() : de.constant_value();
    if (dv.is_zero()) throw ValidationError("frac_eval_nf: denominator vanishes");
    NFElem nv = ne.is_zero() ? NFElem() : ne.constant_value();
    return nv / dv;
}

/// curve run via a rational parametrization (lines, conics with a point)
CurveVerdict curve_run_lambda(const AffineParam& Q, const CurveParam& par,
                              const SurfaceCache& cache, const std::string& method) {
    CurveVerdict out;
    out.method = method;
    std::array<MPoly<Rational>, 3> N, D;
    std::array<Frac<Rational>, 3> A;
    std::vector<PolyQ> union_guards;  // polys in lambda whose roots are exceptional
    for (int i = 0; i < 3; i++) {
        N[i] = Q.comp[i].num();
        D[i] = Q.comp[i].den();
        Frac<Rational> an = subst_frac(Q.comp[i].num(), par.T, par.S);
        Frac<Rational> ad = subst_frac(Q.comp[i].den(), par.T, par.S);
        if (ad.is_zero())
            throw InternalError("curve_run_lambda: curve lies in the denominator locus");
        A[i] = an / ad;
        union_guards.push_back(A[i].den);
    }
    EngineOut<Rational> eng = phi_engine<Rational>(N, D, A, Rational(1), true);
    if (eng.g_nontrivial) {
        out.cone_locus = true;
        out.generic_mult = cache.deg_z;
    } else {
        out.m1 = eng.m1;
        long num = cache.n1 - eng.m1;
        if (num % cache.n2 != 0)
            throw InternalError("curve_run_lambda: (n1 - m1) not divisible by n2");
        out.generic_mult = num / cache.n2;
        for (auto& g : eng.groups) {
            if (g.common) {
                PolyQ gcd = mgcd_many(g.polys);
                if (!gcd.is_zero() && !gcd.is_constant()) union_guards.push_back(gcd);
            } else {
                for (auto& p : g.polys)
                    if (!p.is_zero() && !p.is_constant()) union_guards.push_back(p);
            }
        }
    }
    // map exceptional lambda values to curve points
    for (auto& p : union_guards) {
        for (auto& root : univariate_roots(p, LAM)) {
            // skip parameter values that escape to infinity of the plane
            if (!par.T.is_zero() && point_eval_lambda(par.T.den, root).is_zero()) continue;
            if (!par.S.is_zero() && point_eval_lambda(par.S.den, root).is_zero()) continue;
            AlgPoint pt;
            pt.field = root.field;
            pt.coords = {frac_eval_nf(par.T, root), frac_eval_nf(par.S, root)};
            bool dup = false;
            for (auto& e : out.exceptional)
                if (same_point(e, pt)) dup = true;
            if (!dup) out.exceptional.push_back(std::move(pt));
        }
    }
    for (auto& pt : par.extra_points) {
        bool dup = false;
        for (auto& e : out.exceptional)
            if (same_point(e, pt)) dup = true;
        if (!dup) out.exceptional.push_back(pt);
    }
    return out;
}

/// curve run over the function field of an irreducible curve
CurveVerdict curve_run_ff(const AffineParam& Q, const PolyQ& f, const SurfaceCache& cache) {
    CurveVerdict out;
    out.method = "function-field";
    VarId mainv = TT;
    if (f.degree(TT) < 1) mainv = SS;
    else if (f.degree(SS) >= 1 && f.degree(SS) < f.degree(TT)) mainv = SS;
    FunctionFieldCtx ctx = make_ffctx(f, mainv);
    FFElem one = FFElem::from_base(ctx.field, FracQ(Rational(1)));

    std::array<MPoly<FFElem>, 3> N, D;
    std::array<Frac<FFElem>, 3> A;
    std::vector<PolyQ> union_guards;  // polys in (tt,ss); exceptional = V(f, poly)
    for (int i = 0; i < 3; i++) {
        N[i] = lift_scalars_ff(Q.comp[i].num(), ctx.field);
        D[i] = lift_scalars_ff(Q.comp[i].den(), ctx.field);
        PolyQ an = Q.comp[i].num().rename_var(TV, TT).rename_var(SV, SS);
        PolyQ ad = Q.comp[i].den().rename_var(TV, TT).rename_var(SV, SS);
        MPoly<FFElem> anl = lift_ff(an, ctx), adl = lift_ff(ad, ctx);
        if (adl.is_zero())
            throw InternalError("curve_run_ff: curve lies inside the chart denominator locus");
        A[i] = Frac<FFElem>(anl) / Frac<FFElem>(adl);
        union_guards.push_back(ad);  // chart denominators restricted to the curve
    }
    EngineOut<FFElem> eng = phi_engine<FFElem>(N, D, A, one, true);
    auto collect_elem = [&](const MPoly<FFElem>& cpoly, std::vector<PolyQ>& nums) {
        if (cpoly.is_zero()) return;
        if (!cpoly.is_constant())
            throw InternalError("curve_run_ff: non-constant guard coefficient");
        auto [num, den] = ff_to_poly_rep(cpoly, ctx);
        if (!num.is_zero() && !num.is_constant()) nums.push_back(num);
        if (!den.is_constant()) union_guards.push_back(den);
    };
    if (eng.g_nontrivial) {
        out.cone_locus = true;
        out.generic_mult = cache.deg_z;
    } else {
        out.m1 = eng.m1;
        long num = cache.n1 - eng.m1;
        if (num % cache.n2 != 0)
            throw InternalError("curve_run_ff: (n1 - m1) not divisible by n2");
        out.generic_mult = num / cache.n2;
        for (auto& g : eng.groups) {
            if (g.common) {
                std::vector<PolyQ> nums;
                for (auto& cp : g.polys) collect_elem(cp, nums);
                if (!nums.empty()) {
                    std::vector<PolyQ> gens{f};
                    for (auto& n : nums) gens.push_back(n);
                    SystemSolution sol = solve_system(gens, TT, SS);
                    for (auto& p : sol.points) {
                        bool dup = false;
                        for (auto& e : out.exceptional)
                            if (same_point(e, p)) dup = true;
                        if (!dup) out.exceptional.push_back(p);
                    }
                }
            } else {
                for (auto& cp : g.polys) {
                    std::vector<PolyQ> nums;
                    collect_elem(cp, nums);
                    for (auto& n : nums) union_guards.push_back(n);
                }
            }
        }
    }
    for (auto& p : union_guards) {
        if (p.is_zero() || p.is_constant()) continue;
        if (canonical(p) == canonical(f)) continue;
        PolyQ pg = p;
        if (!pg.has_var(TT) && !pg.has_var(SS)) continue;
        std::vector<PolyQ> gens{f, pg};
        SystemSolution sol;
        try {
            sol = solve_system(gens, TT, SS);
        } catch (const InternalError&) {
            continue;  // guard contains the curve itself: no finite locus
        }
        for (auto& ptx : sol.points) {
            bool dup = false;
            for (auto& e : out.exceptional)
                if (same_point(e, ptx)) dup = true;
            if (!dup) out.exceptional.push_back(ptx);
        }
    }
    if (out.exceptional.size() > 500)
        throw InternalError("curve_run_ff: exceptional set unreasonably large");
    return out;
}

} // namespace

CurveVerdict curve_analyze(const AffineParam& Q, const PolyQ& curve, const SurfaceCache& cache,
                           bool force_function_field) {
    long d = curve.total_degree();
    if (!force_function_field) {
        if (d == 1) {
            return curve_run_lambda(Q, line_param(curve), cache, "line-param");
        }
        if (d == 2) {
            auto pt = conic_rational_point(curve);
            if (pt) {
                return curve_run_lambda(Q, conic_param(curve, pt->first, pt->second), cache,
                                        "conic-param");
            }
        }
    }
    return curve_run_ff(Q, curve, cache);
}

InfinityFamily infinity_family_analyze(const AffineParam& hat_chart, const SurfaceCache& cache) {
    InfinityFamily out;
    CurveParam par;
    par.T = Frac<Rational>(PolyQ::variable(var("lambda"), Rational(1)));
    par.S = Frac<Rational>(PolyQ());
    CurveVerdict v = curve_run_lambda(hat_chart, par, cache, "infinity-family");
    out.generic_mult = v.generic_mult;
    out.cone_locus = v.cone_locus;
    // re-derive lambda roots: the exceptional points are (lambda0, 0)
    for (auto& pt : v.exceptional) {
        UnivRoot r;
        r.field = pt.field;
        r.value = pt.coords[0];
        out.exceptional_lambdas.push_back(std::move(r));
    }
    return out;
}

std::vector<AlgPoint> points_on_curve(const PolyQ& curve, int want, uint64_t seed) {
    std::vector<AlgPoint> out;
    uint64_t state = seed ? seed : 1;
    auto next = [&]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    VarId sweep = curve.degree(SS) >= 1 ? TT : SS;
    VarId other = sweep == TT ? SS : TT;
    for (int tries = 0; tries < 120 && static_cast<int>(out.size()) < want; tries++) {
        long v = static_cast<long>(next() % 41) - 20;
        PolyQ g = curve.subst(sweep, PolyQ::constant(Rational(v)));
        if (g.is_zero() || g.is_constant()) continue;
        for (auto& root : univariate_roots(g, other)) {
            if (static_cast<int>(out.size()) >= want) break;
            AlgPoint p;
            p.field = root.field;
            NFElem fixed = root.field ? NFElem::from_base(root.field, Rational(v))
                                      : NFElem(nullptr, UPoly<Rational>::constant(Rational(v)));
            if (sweep == TT) p.coords = {fixed, root.value};
            else p.coords = {root.value, fixed};
            bool dup = false;
            for (auto& e : out)
                if (same_point(e, p)) dup = true;
            if (!dup) out.push_back(std::move(p));
        }
    }
    return out;
}

std::vector<NFElem> param_image_nf(const AffineParam& Q, const AlgPoint& pt) {
    std::vector<NFElem> out;
    for (int i = 0; i < 3; i++) {
        NFElem dv = point_eval(pt, Q.comp[i].den());
        if (dv.is_zero())
            throw ValidationError("param_image_nf: point lies on the denominator locus");
        NFElem nv = point_eval(pt, Q.comp[i].num());
        out.push_back(nv / dv);
    }
    return out;
}

long multiplicity_at_point(const AffineParam& Q, const AlgPoint& pt, const SurfaceCache& cache,
                           bool* cone) {
    std::vector<NFElem> A = param_image_nf(Q, pt);
    return multiplicity_at_nf(Q, A, pt.field, cache, cone);
}

} // namespace surfstrat
