#include "surfstrat/maps.hpp"

#include "surfstrat/frac.hpp"
#include "surfstrat/solve0.hpp"

#include <algorithm>

namespace surfstrat {

namespace {

template <class K>
MPoly<K> lift_poly(const PolyQ& f, const NFPtr& fld) {
    return lift_scalars<K>(f, fld);
}

template <class K>
long find_shift_for(const std::vector<MPoly<K>>& polys) {
    K one;
    for (auto& p : polys) {
        if (!p.is_zero()) {
            one = p.lc() / p.lc();
            break;
        }
    }
    return find_shear(polys, var("t"), var("s"), one);
}

template <class K>
MPoly<K> apply_shift(const MPoly<K>& f, long c, const K& one) {
    return shear(f, var("t"), var("s"), c, one);
}

struct MapDegreeData {
    ParamChange rec;
    std::array<PolyQ, 3> G;  // difference numerators in (t,s,h1,h2), shifted frame
    long n2 = 0;
};

bool jacobian_nonzero(const RatFunc& f, const RatFunc& g) {
    VarId tv = var("t"), sv = var("s");
    PolyQ ft = f.num().derivative(tv) * f.den() - f.num() * f.den().derivative(tv);
    PolyQ fs = f.num().derivative(sv) * f.den() - f.num() * f.den().derivative(sv);
    PolyQ gt = g.num().derivative(tv) * g.den() - g.num() * g.den().derivative(tv);
    PolyQ gs = g.num().derivative(sv) * g.den() - g.num() * g.den().derivative(sv);
    return !(ft * gs - fs * gt).is_zero();
}

MapDegreeData map_degree_data(const AffineParam& Q) {
    MapDegreeData out;
    // coordinate exchange when the (y,z)-Jacobian degenerates
    static const std::array<std::array<int, 3>, 4> perms{
        std::array<int, 3>{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
    std::array<RatFunc, 3> comp;
    bool found = false;
    for (auto& p : perms) {
        if (jacobian_nonzero(Q.comp[p[1]], Q.comp[p[2]])) {
            out.rec.perm = p;
            for (int i = 0; i < 3; i++) comp[i] = Q.comp[p[i]];
            found = true;
            break;
        }
    }
    if (!found) throw ValidationError("input does not parametrize a surface");

    // parameter shift so no relevant closure passes through (0:1:0)
    std::vector<PolyQ> incidence;
    for (auto& c : comp) {
        incidence.push_back(c.num());
        incidence.push_back(c.den());
    }
    out.rec.shift_c = find_shift_for(incidence);

    VarId tv = var("t"), sv = var("s"), h1 = var("h1"), h2 = var("h2");
    Rational one(1);
    PolyQ h1p = PolyQ::variable(h1, one), h2p = PolyQ::variable(h2, one);
    for (int i = 0; i < 3; i++) {
        PolyQ n = apply_shift(comp[i].num(), out.rec.shift_c, one);
        PolyQ d = apply_shift(comp[i].den(), out.rec.shift_c, one);
        Frac<Rational> chi{n, d};
        Frac<Rational> other{n.subst(tv, h1p).subst(sv, h2p), d.subst(tv, h1p).subst(sv, h2p)};
        out.G[i] = (chi - other).num;
    }

    VarId X = var("X1");
    PolyQ mix = out.G[1] + PolyQ::variable(X, one) * out.G[2];
    PolyQ R = resultant(out.G[0], mix, sv);
    if (R.is_zero()) throw InternalError("map_degree: resultant vanished identically");
    PolyQ contX = content_in(R, {X});
    PolyQ S = primitive_part_in(contX, {h1, h2});
    out.n2 = S.degree(tv);
    if (out.n2 < 1) throw InternalError("map_degree: nonpositive degree");
    return out;
}

template <class K>
struct CenterAnalysis {
    bool g_is_one = true;
    long m1 = -1;
    MPoly<K> g;
};

template <class K>
CenterAnalysis<K> analyze_center(const std::array<MPoly<K>, 3>& N,
                                 const std::array<MPoly<K>, 3>& D, const std::array<K, 3>& A,
                                 const K& one) {
    VarId tv = var("t"), sv = var("s"), h1 = var("h1"), h2 = var("h2");
    VarId X1 = var("X1"), X2 = var("X2");
    CenterAnalysis<K> out;

    std::array<MPoly<K>, 3> diff;
    for (int i = 0; i < 3; i++) diff[i] = N[i] - D[i].scaled(A[i]);
    int d = -1;
    for (int i = 0; i < 3 && d < 0; i++)
        if (!diff[i].is_zero()) d = i;
    if (d < 0) throw InternalError("analyze_center: all centered components vanish");
    int i1 = -1, i2 = -1;
    for (int i = 0; i < 3; i++) {
        if (i == d) continue;
        (i1 < 0 ? i1 : i2) = i;
    }

    MPoly<K> h1p = MPoly<K>::variable(h1, one), h2p = MPoly<K>::variable(h2, one);
    std::array<Frac<K>, 2> chi;
    chi[0] = Frac<K>{diff[i1] * D[d], diff[d] * D[i1]};
    chi[1] = Frac<K>{diff[i2] * D[d], diff[d] * D[i2]};
    for (auto& c : chi) {
        if (c.num.degree(tv) <= 0 && c.num.degree(sv) <= 0 && c.den.degree(tv) <= 0 &&
            c.den.degree(sv) <= 0)
            throw InternalError("analyze_center: constant Phi component (degenerate surface?)");
    }

    MPoly<K> g1 = (chi[0] - chi[0].subst2(tv, h1p, sv, h2p)).num;
    MPoly<K> g2 = (chi[1] - chi[1].subst2(tv, h1p, sv, h2p)).num;
    MPoly<K> Kg = mgcd(g1, g2);
    if (Kg.degree_in({tv, sv}) > 0) {
        out.g_is_one = false;
        out.g = Kg;
        return out;
    }

    // incidence hypotheses on the raw component set
    std::vector<MPoly<K>> incidence;
    for (int i = 0; i < 3; i++) {
        incidence.push_back(N[i]);
        incidence.push_back(D[i]);
        incidence.push_back(diff[i]);
    }
    long c = find_shift_for(incidence);

    std::array<MPoly<K>, 2> H;
    VarId Xv[2] = {X1, X2};
    for (int k = 0; k < 2; k++) {
        MPoly<K> n = apply_shift(chi[k].num, c, one);
        MPoly<K> dd = apply_shift(chi[k].den, c, one);
        H[k] = n - dd * MPoly<K>::variable(Xv[k], one);
    }
    MPoly<K> R = resultant(H[0], H[1], sv);
    if (R.is_zero())
        throw InternalError("phi23_degree: resultant vanished (contract g == 1 violated)");
    MPoly<K> cont = content_in(R, {X1, X2});
    out.m1 = R.degree(tv) - cont.degree(tv);
    if (out.m1 < 0) throw InternalError("phi23_degree: negative degree");
    return out;
}

template <class K>
CenterAnalysis<K> analyze_for(const AffineParam& Q, const std::array<K, 3>& A, const K& one,
                              const NFPtr& fld) {
    std::array<MPoly<K>, 3> N, D;
    for (int i = 0; i < 3; i++) {
        N[i] = lift_poly<K>(Q.comp[i].num(), fld);
        D[i] = lift_poly<K>(Q.comp[i].den(), fld);
    }
    (void)one;
    return analyze_center<K>(N, D, A, one);
}

} // namespace

AffineParam shift_parameters(const AffineParam& Q, long c) {
    AffineParam out = Q;
    if (c == 0) return out;
    for (int i = 0; i < 3; i++) {
        PolyQ n = apply_shift(Q.comp[i].num(), c, Rational(1));
        PolyQ d = apply_shift(Q.comp[i].den(), c, Rational(1));
        out.comp[i] = RatFunc(n, d);
    }
    return out;
}

long find_shift(const AffineParam& Q) {
    std::vector<PolyQ> polys;
    for (auto& c : Q.comp) {
        polys.push_back(c.num());
        polys.push_back(c.den());
    }
    return find_shift_for(polys);
}

long map_degree(const AffineParam& Q, ParamChange* rec) {
    MapDegreeData d = map_degree_data(Q);
    if (rec) *rec = d.rec;
    return d.n2;
}

long partial_degree(const AffineParam& Q, ParamChange* rec) {
    MapDegreeData d = map_degree_data(Q);
    if (rec) *rec = d.rec;
    VarId tv = var("t"), sv = var("s"), h1 = var("h1"), h2 = var("h2");
    PolyQ R = resultant(d.G[1], d.G[2], sv);
    if (R.is_zero()) throw InternalError("partial_degree: resultant vanished identically");
    PolyQ S = primitive_part_in(R, {h1, h2});
    long raw = S.degree(tv);
    if (raw % d.n2 != 0) throw InternalError("partial_degree: degree not divisible by deg(Q)");
    return raw / d.n2;
}

std::array<Rational, 3> off_surface_point(const AffineParam& Q, long* pairs_tried) {
    MapDegreeData md = map_degree_data(Q);
    long m = partial_degree(Q);
    std::array<RatFunc, 3> comp;
    for (int i = 0; i < 3; i++) comp[i] = Q.comp[md.rec.perm[i]];

    VarId tv = var("t"), sv = var("s"), xv = var("x");
    PolyQ lcm_den = poly_const(1);
    for (auto& c : comp) {
        PolyQ g = mgcd(lcm_den, c.den());
        lcm_den = *(lcm_den * c.den()).divide_exact(g);
    }

    long tried = 0;
    for (long diag = 2; diag <= 40; diag++) {
        for (long lam = 1; lam < diag; lam++) {
            long mu = diag - lam;
            tried++;
            if (tried > 200)
                throw InternalError("off_surface_point: enumeration cap exceeded");
            PolyQ E2 = comp[1].den().scaled(Rational(lam)) - comp[1].num();
            PolyQ E3 = comp[2].den().scaled(Rational(mu)) - comp[2].num();
            if (E2.is_zero() || E3.is_zero() || E2.is_constant() || E3.is_constant()) continue;
            SystemSolution sol;
            try {
                sol = solve_system({E2, E3}, tv, sv);
            } catch (const InternalError&) {
                continue;
            }
            if (!sol.curves.empty()) continue;  // degenerate line: fiber has a curve
            // distinct x-values of W(lam, mu)
            PolyQ U = poly_const(1);
            bool bad = false;
            for (auto& pt : sol.points) {
                NFElem denv = point_eval(pt, lcm_den);
                if (denv.is_zero()) continue;  // excluded from W
                NFElem x0 = point_eval(pt, comp[0].num()) / point_eval(pt, comp[0].den());
                PolyQ charpoly;
                if (pt.is_rational()) {
                    Rational xr = x0.rep().is_zero() ? Rational(0) : x0.rep().c[0];
                    charpoly = PolyQ::variable(xv, Rational(1)) - PolyQ::constant(xr);
                } else {
                    PolyQ mr = from_upoly(pt.field->minpoly(), var("r"));
                    PolyQ rep;
                    PolyQ rv = PolyQ::variable(var("r"), Rational(1));
                    for (size_t i = 0; i < x0.rep().c.size(); i++)
                        rep += PolyQ::constant(x0.rep().c[i]) * rv.pow(static_cast<long>(i));
                    charpoly = resultant(mr, PolyQ::variable(xv, Rational(1)) - rep, var("r"));
                    if (charpoly.is_zero() || charpoly.degree(xv) < 1) {
                        bad = true;
                        break;
                    }
                }
                U *= charpoly;
            }
            if (bad) continue;
            PolyQ Usf = U.is_constant() ? U : squarefree_part(U, xv);
            long card = Usf.degree(xv);
            if (card != m) continue;
            // alpha: smallest positive integer avoiding all x-values
            for (long alpha = 1;; alpha++) {
                if (!Usf.eval_all({{xv, Rational(alpha)}}).is_zero()) {
                    std::array<Rational, 3> frame{Rational(alpha), Rational(lam), Rational(mu)};
                    std::array<Rational, 3> out;
                    for (int i = 0; i < 3; i++) out[md.rec.perm[i]] = frame[i];
                    if (pairs_tried) *pairs_tried = tried;
                    return out;
                }
            }
        }
    }
    throw InternalError("off_surface_point: no verified pair found");
}

SurfaceCache build_cache(const AffineParam& Q) {
    SurfaceCache cache;
    MapDegreeData md = map_degree_data(Q);
    cache.n2 = md.n2;
    cache.change = md.rec;
    cache.partial_deg = partial_degree(Q);
    cache.A0 = off_surface_point(Q, &cache.offpoint_pairs);
    PointAnalysis pa = analyze_point(Q, cache.A0);
    if (!pa.g_is_one) throw InternalError("build_cache: g != 1 at the off-surface point");
    cache.n1 = pa.m1;
    if (cache.n1 % cache.n2 != 0)
        throw InternalError("build_cache: n1 not divisible by n2");
    cache.deg_z = cache.n1 / cache.n2;
    if (cache.deg_z < 2)
        throw InternalError("build_cache: surface degree < 2 (plane should be short-circuited)");
    return cache;
}

PointAnalysis analyze_point(const AffineParam& Q, const std::array<Rational, 3>& A) {
    auto res = analyze_for<Rational>(Q, A, Rational(1), nullptr);
    PointAnalysis out;
    out.g_is_one = res.g_is_one;
    out.m1 = res.m1;
    if (!res.g_is_one) out.g = res.g;
    return out;
}

PointAnalysis analyze_point_nf(const AffineParam& Q, const std::vector<NFElem>& A,
                               const NFPtr& field) {
    NFElem one = field ? NFElem::from_base(field, Rational(1))
                       : NFElem(nullptr, UPoly<Rational>::constant(Rational(1)));
    std::array<NFElem, 3> arr{A[0], A[1], A[2]};
    auto res = analyze_for<NFElem>(Q, arr, one, field);
    PointAnalysis out;
    out.g_is_one = res.g_is_one;
    out.m1 = res.m1;
    return out;
}

PolyQ g_poly(const AffineParam& Q, const std::array<Rational, 3>& A) {
    PointAnalysis pa = analyze_point(Q, A);
    return pa.g_is_one ? poly_const(1) : pa.g;
}

long phi23_degree(const AffineParam& Q, const std::array<Rational, 3>& A) {
    PointAnalysis pa = analyze_point(Q, A);
    if (!pa.g_is_one) throw InternalError("phi23_degree: g != 1 required");
    return pa.m1;
}

long multiplicity_at(const AffineParam& Q, const std::array<Rational, 3>& A,
                     const SurfaceCache& cache, bool* cone) {
    PointAnalysis pa = analyze_point(Q, A);
    if (cone) *cone = !pa.g_is_one;
    if (!pa.g_is_one) return cache.deg_z;
    long num = cache.n1 - pa.m1;
    if (num % cache.n2 != 0)
        throw InternalError("multiplicity_at: (n1 - m1) not divisible by n2");
    long mult = num / cache.n2;
    if (mult < 0 || mult > cache.deg_z)
        throw InternalError("multiplicity_at: value out of range");
    return mult;
}

long multiplicity_at_nf(const AffineParam& Q, const std::vector<NFElem>& A, const NFPtr& field,
                        const SurfaceCache& cache, bool* cone) {
    PointAnalysis pa = analyze_point_nf(Q, A, field);
    if (cone) *cone = !pa.g_is_one;
    if (!pa.g_is_one) return cache.deg_z;
    long num = cache.n1 - pa.m1;
    if (num % cache.n2 != 0)
        throw InternalError("multiplicity_at_nf: (n1 - m1) not divisible by n2");
    long mult = num / cache.n2;
    if (mult < 0 || mult > cache.deg_z)
        throw InternalError("multiplicity_at_nf: value out of range");
    return mult;
}

long multiplicity_at_param(const AffineParam& Q, const Rational& t0, const Rational& s0,
                           const SurfaceCache& cache, bool* cone) {
    std::map<VarId, Rational> at{{var("t"), t0}, {var("s"), s0}};
    std::array<Rational, 3> A;
    for (int i = 0; i < 3; i++) {
        Rational dv = Q.comp[i].den().eval_all(at);
        if (dv.is_zero())
            throw ValidationError("multiplicity_at_param: parameter hits the denominator locus");
        A[i] = Q.comp[i].num().eval_all(at) / dv;
    }
    return multiplicity_at(Q, A, cache, cone);
}

std::array<Rational, 3> reembed_offpoint(const std::array<Rational, 3>& A0, int from, int to) {
    // chart coords -> projective 4-tuple
    std::array<Rational, 4> proj;
    int slot = 0;
    for (int j = 1; j <= 4; j++) {
        if (j == from) proj[j - 1] = Rational(1);
        else proj[j - 1] = A0[slot++];
    }
    Rational piv = proj[to - 1];
    if (piv.is_zero()) throw InternalError("reembed_offpoint: zero pivot coordinate");
    std::array<Rational, 3> out;
    slot = 0;
    for (int j = 1; j <= 4; j++) {
        if (j == to) continue;
        out[slot++] = proj[j - 1] / piv;
    }
    return out;
}

} // namespace surfstrat
