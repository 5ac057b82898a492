#pragma once

#include "surfstrat/factor.hpp"
#include "surfstrat/fields.hpp"

#include <utility>

namespace surfstrat {

/// Arithmetic context for the function field K(c) = Frac(Q[t,s]/(f)) of an
/// irreducible plane curve f. `mainvar` is treated as algebraic over the
/// rational functions in the other variable.
struct FunctionFieldCtx {
    PolyQ defining;
    VarId mainvar;
    VarId othervar;
    FFPtr field;
};

/// Builds a context, certifying that `defining` is irreducible over Q
/// (throws std::invalid_argument otherwise).
FunctionFieldCtx make_ffctx(const PolyQ& defining, VarId mainvar);

/// Builds a number field Q[x]/(m) from a univariate polynomial in `v`,
/// certifying irreducibility and normalizing to a monic minimal polynomial.
NFPtr make_number_field(const PolyQ& minpoly, VarId v, const std::string& symbol);

/// Lift a rational polynomial into K(c)[remaining vars]: occurrences of the
/// context variables become field elements.
MPoly<FFElem> lift_ff(const PolyQ& f, const FunctionFieldCtx& ctx);

/// Representative of an element of K(c)[vars] as a rational polynomial plus
/// the denominator (a polynomial in the non-main context variable) that was
/// cleared from the coefficients.
std::pair<PolyQ, PolyQ> ff_to_poly_rep(const MPoly<FFElem>& f, const FunctionFieldCtx& ctx);

/// Canonical representative of f modulo the defining polynomial, reduced in
/// the main variable. Exact (and a ring homomorphism) whenever the defining
/// polynomial is monic in the main variable; otherwise the representative is
/// normalized up to a unit of K(c).
PolyQ ff_normalize(const PolyQ& f, const FunctionFieldCtx& ctx);

/// gcd computed in K(c)[vars outside the context]; returns a cleared
/// polynomial representative (canonical).
PolyQ gcd_ff(const PolyQ& f, const PolyQ& g, const FunctionFieldCtx& ctx);

/// Resultant w.r.t. `x` computed over K(c); cleared representative.
PolyQ resultant_ff(const PolyQ& f, const PolyQ& g, VarId x, const FunctionFieldCtx& ctx);

/// Content/primitive split: f = content * primitive, content
/// free of `vars`, primitive with unit coefficient-gcd w.r.t. `vars`.
std::pair<PolyQ, PolyQ> content_primitive(const PolyQ& f, const std::vector<VarId>& vars);

/// Evaluate a rational polynomial at number-field coordinates.
NFElem eval_nf(const PolyQ& f, const std::map<VarId, NFElem>& vals, const NFPtr& fld);

} // namespace surfstrat
