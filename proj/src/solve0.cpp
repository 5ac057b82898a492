#include "surfstrat/solve0.hpp"

#include "surfstrat/factor.hpp"

#include <algorithm>

namespace surfstrat {

namespace {

NFPtr trusted_field(const PolyQ& m, VarId x, const std::string& symbol) {
    return std::make_shared<const NumberField>(symbol, to_upoly(m, x).monic());
}

UPoly<NFElem> eval_to_upoly(const PolyQ& F, VarId uvar, const NFElem& theta, VarId svar,
                            const NFPtr& fld) {
    MPoly<NFElem> lifted =
        fld ? lift_nf(F, fld)
            : F.map_coeffs<NFElem>([](const Rational& r) {
                  return NFElem(nullptr, UPoly<Rational>::constant(r));
              });
    MPoly<NFElem> ev = lifted.eval_partial({{uvar, theta}});
    UPoly<NFElem> out;
    long d = ev.degree(svar);
    out.c.assign(static_cast<size_t>(std::max(d, 0L)) + 1, NFElem());
    auto cs = ev.univ_coeffs(svar);
    for (size_t i = 0; i < cs.size(); i++) {
        if (cs[i].is_zero()) continue;
        if (!cs[i].is_constant())
            throw InternalError("solve0: unexpected extra variable in back-substitution");
        out.c[i] = cs[i].constant_value();
    }
    out.trim();
    return out;
}

/// Solve a coprime pair exactly via a separating shear u = t + c*s.
std::vector<AlgPoint> solve_pair(const PolyQ& f, const PolyQ& g, VarId tvar, VarId svar) {
    VarId uvar = var("u");
    VarId rvar = var("r");
    PolyQ uv = PolyQ::variable(uvar, Rational(1));
    PolyQ sv = PolyQ::variable(svar, Rational(1));
    for (long c = 0; c <= 60; c++) {
        PolyQ shift = uv - poly_const(c) * sv;
        PolyQ F = f.subst(tvar, shift);
        PolyQ G = g.subst(tvar, shift);
        if (F.degree(svar) <= 0 && G.degree(svar) <= 0) {
            // both collapse to functions of u alone: coprime => no common zero,
            // unless this particular shear hid s (then another c works)
            if (f.degree(svar) <= 0 && g.degree(svar) <= 0) return {};
            continue;
        }
        PolyQ E = resultant(F, G, svar);
        if (E.is_zero()) continue;
        if (E.is_constant()) return {};
        E = squarefree_part(E, uvar);
        std::vector<AlgPoint> pts;
        bool separating = true;
        for (auto& [m, mult] : factor(E).factors) {
            (void)mult;
            if (m.degree(uvar) < 1) continue;
            NFPtr fld;
            NFElem theta;
            if (m.degree(uvar) == 1) {
                auto cs = to_upoly(m, uvar);
                Rational root = -cs.c[0] / cs.c[1];
                theta = NFElem(nullptr, UPoly<Rational>::constant(root));
            } else {
                fld = trusted_field(m.rename_var(uvar, rvar), rvar, "r");
                theta = NFElem::generator(fld);
            }
            UPoly<NFElem> Fu = eval_to_upoly(F, uvar, theta, svar, fld);
            UPoly<NFElem> Gu = eval_to_upoly(G, uvar, theta, svar, fld);
            UPoly<NFElem> d = upoly_gcd(Fu, Gu);
            if (d.is_zero())
                throw InternalError("solve0: positive-dimensional fiber in coprime pair");
            if (d.deg() == 0) continue;  // spurious resultant root
            if (d.deg() >= 2) {
                // drop fiber multiplicity before judging separation
                UPoly<NFElem> rad = upoly_gcd(d, d.derivative());
                if (rad.deg() > 0) {
                    UPoly<NFElem> q, r;
                    UPoly<NFElem>::divrem(d, rad, q, r);
                    d = q.monic();
                }
            }
            if (d.deg() >= 2) {
                separating = false;
                break;
            }
            NFElem s0 = -(d.c[0] / d.c[1]);
            NFElem t0 = theta - NFElem(fld ? NFElem::from_base(fld, Rational(c))
                                           : NFElem(nullptr, UPoly<Rational>::constant(Rational(c)))) *
                                    s0;
            AlgPoint pt;
            pt.field = fld;
            pt.coords = {t0, s0};
            pt.projective = false;
            pts.push_back(std::move(pt));
        }
        if (separating) return pts;
    }
    throw InternalError("solve0: no separating linear form found for f = " + f.str() +
                        ", g = " + g.str());
}

std::vector<PolyQ> drop_constants(const std::vector<PolyQ>& fs, bool& has_nonzero_const) {
    std::vector<PolyQ> out;
    has_nonzero_const = false;
    for (auto& f : fs) {
        if (f.is_zero()) continue;
        if (f.is_constant()) {
            has_nonzero_const = true;
            continue;
        }
        out.push_back(f);
    }
    return out;
}

std::vector<AlgPoint> filter_points(std::vector<AlgPoint> pts, const std::vector<PolyQ>& gens) {
    std::vector<AlgPoint> out;
    for (auto& p : pts) {
        bool ok = true;
        for (auto& g : gens) {
            if (!point_eval(p, g).is_zero()) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(std::move(p));
    }
    return out;
}

void dedupe_into(std::vector<AlgPoint>& acc, std::vector<AlgPoint> pts) {
    for (auto& p : pts) {
        bool dup = false;
        for (auto& q : acc) {
            if (same_point(p, q)) {
                dup = true;
                break;
            }
        }
        if (!dup) acc.push_back(std::move(p));
    }
}

std::vector<AlgPoint> solve_zero_dim(std::vector<PolyQ> fs, VarId tvar, VarId svar) {
    bool has_const;
    fs = drop_constants(fs, has_const);
    if (has_const || fs.empty()) return {};
    if (fs.size() == 1)
        throw InternalError("solve0: one-generator system is not zero-dimensional");
    PolyQ d = mgcd(fs[0], fs[1]);
    std::vector<PolyQ> rest(fs.begin() + 2, fs.end());
    std::vector<AlgPoint> acc;
    if (d.is_constant()) {
        auto pts = solve_pair(fs[0], fs[1], tvar, svar);
        dedupe_into(acc, filter_points(std::move(pts), rest));
        return acc;
    }
    // split off the common factor
    for (auto& [c, mult] : factor(d).factors) {
        (void)mult;
        if (c.is_constant()) continue;
        const PolyQ* other = nullptr;
        for (auto& f : fs) {
            if (!c.divides(f)) {
                other = &f;
                break;
            }
        }
        if (!other)
            throw InternalError("solve0: common curve component in a supposedly 0-dim system");
        auto pts = solve_pair(c, *other, tvar, svar);
        dedupe_into(acc, filter_points(std::move(pts), fs));
    }
    std::vector<PolyQ> reduced{*fs[0].divide_exact(d), *fs[1].divide_exact(d)};
    reduced.insert(reduced.end(), rest.begin(), rest.end());
    auto pts = solve_zero_dim(reduced, tvar, svar);
    dedupe_into(acc, filter_points(std::move(pts), fs));
    return acc;
}

} // namespace

SystemSolution solve_system(const std::vector<PolyQ>& gens_in, VarId tvar, VarId svar) {
    SystemSolution out;
    bool has_const;
    std::vector<PolyQ> gens = drop_constants(gens_in, has_const);
    if (has_const) return out;
    if (gens.empty())
        throw ValidationError("solve_system: all generators are zero");
    PolyQ g = mgcd_many(gens);
    if (!g.is_constant()) {
        for (auto& [c, mult] : factor(g).factors) {
            (void)mult;
            if (!c.is_constant()) out.curves.push_back(c);
        }
    }
    if (gens.size() == 1) return out;  // a single generator has no isolated part
    std::vector<PolyQ> cof;
    for (auto& f : gens) cof.push_back(*f.divide_exact(g));
    auto pts = solve_zero_dim(cof, tvar, svar);
    // points on a curve component are interior to it, not isolated
    for (auto& p : pts) {
        bool on_curve = false;
        for (auto& c : out.curves) {
            if (point_eval(p, c).is_zero()) {
                on_curve = true;
                break;
            }
        }
        if (!on_curve) out.points.push_back(p);
    }
    return out;
}

std::vector<AlgPoint> solve_points(const std::vector<PolyQ>& gens, VarId tvar, VarId svar) {
    SystemSolution sol = solve_system(gens, tvar, svar);
    if (!sol.curves.empty())
        throw InternalError("solve_points: system has a curve component");
    return sol.points;
}

std::vector<UnivRoot> univariate_roots(const PolyQ& f, VarId x) {
    std::vector<UnivRoot> out;
    if (f.is_zero() || f.is_constant()) return out;
    for (auto& [m, mult] : factor(f).factors) {
        (void)mult;
        if (m.degree(x) < 1) continue;
        UnivRoot r;
        r.minpoly = m;
        if (m.degree(x) == 1) {
            auto cs = to_upoly(m, x);
            r.value = NFElem(nullptr, UPoly<Rational>::constant(-cs.c[0] / cs.c[1]));
        } else {
            r.field = trusted_field(m.rename_var(x, var("r")), var("r"), "r");
            r.value = NFElem::generator(r.field);
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace surfstrat
