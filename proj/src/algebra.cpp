#include "surfstrat/algebra.hpp"

namespace surfstrat {

FunctionFieldCtx make_ffctx(const PolyQ& defining, VarId mainvar) {
    if (defining.degree(mainvar) < 1)
        throw std::invalid_argument("make_ffctx: defining polynomial has degree 0 in main variable");
    if (!is_irreducible(defining))
        throw std::invalid_argument("make_ffctx: defining polynomial is not irreducible over Q");
    VarId other = -1;
    for (VarId v : defining.vars())
        if (v != mainvar) other = v;
    if (other < 0) {
        // univariate curve like tt = 0: treat the absent variable as free.
        // caller passes polys possibly involving both; pick the canonical mate
        other = mainvar == var("tt") ? var("ss") : var("tt");
    }
    FunctionFieldCtx ctx;
    ctx.defining = canonical(defining);
    ctx.mainvar = mainvar;
    ctx.othervar = other;

    long d = defining.degree(mainvar);
    auto coeffs = defining.univ_coeffs(mainvar);
    UPoly<FracQ> m;
    m.c.resize(static_cast<size_t>(d) + 1);
    FracQ lc(coeffs[static_cast<size_t>(d)]);
    for (long i = 0; i <= d; i++) {
        m.c[static_cast<size_t>(i)] = FracQ(coeffs[static_cast<size_t>(i)]) / lc;
    }
    m.trim();
    ctx.field = std::make_shared<const FFField>(var_name(mainvar) + "~", std::move(m));
    return ctx;
}

NFPtr make_number_field(const PolyQ& minpoly, VarId v, const std::string& symbol) {
    if (minpoly.degree(v) < 1)
        throw std::invalid_argument("make_number_field: degree < 1");
    for (VarId w : minpoly.vars())
        if (w != v) throw std::invalid_argument("make_number_field: not univariate");
    if (!is_irreducible(minpoly))
        throw std::invalid_argument("make_number_field: minimal polynomial not irreducible");
    UPoly<Rational> m = to_upoly(minpoly, v).monic();
    return std::make_shared<const NumberField>(symbol, std::move(m));
}

MPoly<FFElem> lift_ff(const PolyQ& f, const FunctionFieldCtx& ctx) {
    MPoly<FFElem> out;
    FFElem theta = FFElem::generator(ctx.field);
    FFElem one = FFElem::from_base(ctx.field, FracQ(Rational(1)));
    PolyQ xother = PolyQ::variable(ctx.othervar, Rational(1));
    for (auto& [e, c] : f.terms()) {
        int emain = 0, eother = 0;
        std::vector<VarId> rest_vars;
        std::vector<int> rest_exp;
        const auto& vars = f.vars();
        for (size_t i = 0; i < vars.size(); i++) {
            if (vars[i] == ctx.mainvar) emain = e[i];
            else if (vars[i] == ctx.othervar) eother = e[i];
            else if (e[i] != 0) {
                rest_vars.push_back(vars[i]);
                rest_exp.push_back(e[i]);
            }
        }
        FFElem coeff = FFElem::from_base(ctx.field, FracQ(PolyQ::constant(c) * xother.pow(eother)));
        for (int k = 0; k < emain; k++) coeff *= theta;
        out += MPoly<FFElem>::monomial(rest_vars, rest_exp, coeff);
    }
    return out;
}

std::pair<PolyQ, PolyQ> ff_to_poly_rep(const MPoly<FFElem>& f, const FunctionFieldCtx& ctx) {
    // common denominator of all FracQ coordinates
    PolyQ den = poly_const(1);
    for (auto& [e, c] : f.terms()) {
        for (auto& coord : c.rep().c) {
            if (coord.is_zero()) continue;
            PolyQ g = mgcd(den, coord.den());
            den = *(den * coord.den()).divide_exact(g);
        }
    }
    PolyQ num;
    PolyQ xmain = PolyQ::variable(ctx.mainvar, Rational(1));
    for (auto& [e, c] : f.terms()) {
        PolyQ coeff;
        for (size_t i = 0; i < c.rep().c.size(); i++) {
            const FracQ& coord = c.rep().c[i];
            if (coord.is_zero()) continue;
            coeff += coord.num() * *den.divide_exact(coord.den()) * xmain.pow(static_cast<long>(i));
        }
        std::vector<VarId> vs;
        std::vector<int> ex;
        const auto& vars = f.vars();
        for (size_t i = 0; i < vars.size(); i++) {
            if (e[i] != 0) {
                vs.push_back(vars[i]);
                ex.push_back(e[i]);
            }
        }
        num += coeff * MPoly<Rational>::monomial(vs, ex, Rational(1));
    }
    return {num, den};
}

PolyQ ff_normalize(const PolyQ& f, const FunctionFieldCtx& ctx) {
    MPoly<FFElem> lifted = lift_ff(f, ctx);
    auto [num, den] = ff_to_poly_rep(lifted, ctx);
    if (den.is_constant()) {
        if (den.constant_value().is_one()) return num;
        return num.scaled(den.constant_value().inv());
    }
    return canonical(num);
}

PolyQ gcd_ff(const PolyQ& f, const PolyQ& g, const FunctionFieldCtx& ctx) {
    MPoly<FFElem> a = lift_ff(f, ctx);
    MPoly<FFElem> b = lift_ff(g, ctx);
    MPoly<FFElem> d = mgcd(a, b);
    auto [num, den] = ff_to_poly_rep(d, ctx);
    (void)den;  // the gcd is defined up to units of K(c)
    return canonical(num);
}

PolyQ resultant_ff(const PolyQ& f, const PolyQ& g, VarId x, const FunctionFieldCtx& ctx) {
    MPoly<FFElem> a = lift_ff(f, ctx);
    MPoly<FFElem> b = lift_ff(g, ctx);
    MPoly<FFElem> r = resultant(a, b, x);
    auto [num, den] = ff_to_poly_rep(r, ctx);
    (void)den;
    return canonical(num);
}

std::pair<PolyQ, PolyQ> content_primitive(const PolyQ& f, const std::vector<VarId>& vars) {
    if (f.is_zero()) throw std::invalid_argument("content_primitive: zero polynomial");
    PolyQ c = content_in(f, vars);
    auto pp = f.divide_exact(c);
    if (!pp) throw std::logic_error("content_primitive: content does not divide");
    return {c, *pp};
}

NFElem eval_nf(const PolyQ& f, const std::map<VarId, NFElem>& vals, const NFPtr& fld) {
    MPoly<NFElem> lifted = lift_nf(f, fld);
    MPoly<NFElem> r = lifted.eval_partial(vals);
    if (r.is_zero()) return NFElem();
    if (!r.is_constant()) throw std::invalid_argument("eval_nf: unbound variables remain");
    return r.constant_value();
}

} // namespace surfstrat
