#pragma once

#include "surfstrat/poly.hpp"

#include <stdexcept>

namespace surfstrat {

/// Per-field normalization rules. The primary template treats every nonzero
/// scalar as a unit (polynomials normalize to monic). The Rational
/// specialization keeps Z-style contents: canonical polynomials are
/// integer-primitive with positive leading coefficient, so gcds and contents
/// match the usual UFD conventions.
template <class K>
struct FieldTraits {
    static K scalar_gcd(const K& a, const K& b) {
        if (a.is_zero() && b.is_zero()) return K();
        K nz = a.is_zero() ? b : a;
        return nz / nz;
    }
    static K canonical_unit(const MPoly<K>& f) {
        if (f.is_zero()) return K();
        return f.lc();
    }
};

template <>
struct FieldTraits<Rational> {
    static Rational scalar_gcd(const Rational& a, const Rational& b) { return rat_gcd(a, b); }
    static Rational canonical_unit(const MPoly<Rational>& f) {
        if (f.is_zero()) return Rational(0);
        Rational c(0);
        for (auto& [e, k] : f.terms()) c = rat_gcd(c, k);
        if (f.lc().sign() < 0) c = -c;
        return c;
    }
};

/// f divided by its canonical unit: integer-primitive and positive-lc over Q,
/// monic over extension fields. The zero polynomial stays zero.
template <class K>
MPoly<K> canonical(const MPoly<K>& f) {
    if (f.is_zero()) return f;
    K u = FieldTraits<K>::canonical_unit(f);
    return f.scaled(u / (u * u));  // scaled by 1/u
}

template <class K>
K scalar_content(const MPoly<K>& f) {
    K c;
    for (auto& [e, k] : f.terms()) c = FieldTraits<K>::scalar_gcd(c, k);
    return c;
}

template <class K>
MPoly<K> mgcd(const MPoly<K>& f, const MPoly<K>& g);

/// Content of f w.r.t. a set of variables: gcd of the coefficients of the
/// monomials in those variables (a polynomial in the remaining variables).
/// Scalar contents follow the field traits (Z-style over Q), so e.g.
/// content of 6t^2+4t w.r.t. t is 2.
template <class K>
MPoly<K> content_in(const MPoly<K>& f, const std::vector<VarId>& vs) {
    if (f.is_zero()) return f;
    K scalar = scalar_content(f);
    MPoly<K> c;
    bool unit_poly = false;
    for (auto& [e, coeff] : f.coefficients_wrt(vs)) {
        if (!unit_poly) {
            c = mgcd(c, coeff);
            if (c.is_constant()) unit_poly = true;  // polynomial part exhausted
        }
    }
    if (c.is_constant()) return MPoly<K>::constant(scalar);
    return c.scaled(scalar);
}

template <class K>
MPoly<K> primitive_part_in(const MPoly<K>& f, const std::vector<VarId>& vs) {
    if (f.is_zero()) return f;
    MPoly<K> c = content_in(f, vs);
    auto q = f.divide_exact(c);
    if (!q) throw std::logic_error("primitive_part_in: content does not divide");
    return *q;
}

namespace detail {

template <class K>
VarId pick_gcd_var(const MPoly<K>& f, const MPoly<K>& g) {
    VarId best = -1;
    long bestd = -1;
    for (VarId v : f.vars()) {
        long df = f.degree(v), dg = g.degree(v);
        if (df > 0 && dg > 0) {
            long d = std::min(df, dg);
            if (best < 0 || d < bestd) {
                best = v;
                bestd = d;
            }
        }
    }
    return best;
}

} // namespace detail

/// Multivariate gcd via content-primitive recursion with a subresultant PRS
/// core. Result is canonical (integer-primitive, positive lc over Q; monic
/// over extensions). Contents follow the Z-style convention of the Rational
/// trait, so gcd(6, 4t) = 2 while gcd over an extension field is monic.
template <class K>
MPoly<K> mgcd(const MPoly<K>& f, const MPoly<K>& g) {
    if (f.is_zero()) return canonical(g);
    if (g.is_zero()) return canonical(f);
    if (f.is_constant() || g.is_constant()) {
        K cf = scalar_content(f), cg = scalar_content(g);
        return MPoly<K>::constant(FieldTraits<K>::scalar_gcd(cf, cg));
    }
    VarId x = detail::pick_gcd_var(f, g);
    if (x < 0) {
        // no shared variable of positive degree
        K cf = scalar_content(f), cg = scalar_content(g);
        return MPoly<K>::constant(FieldTraits<K>::scalar_gcd(cf, cg));
    }
    MPoly<K> cf = content_in(f, {x});
    MPoly<K> cg = content_in(g, {x});
    MPoly<K> c = mgcd(cf, cg);
    auto Aq = f.divide_exact(cf), Bq = g.divide_exact(cg);
    if (!Aq || !Bq) throw std::logic_error("mgcd: content does not divide");
    MPoly<K> A = *Aq, B = *Bq;
    if (A.degree(x) < B.degree(x)) std::swap(A, B);

    MPoly<K> one = MPoly<K>::constant(A.lc() / A.lc());
    MPoly<K> gg = one, h = one;
    while (true) {
        long m = A.degree(x), n = B.degree(x);
        long delta = m - n;
        MPoly<K> R = MPoly<K>::prem(A, B, x);
        if (R.is_zero()) break;
        if (B.degree(x) == 0) {
            // primitive parts are coprime in x
            return canonical(c);
        }
        MPoly<K> div = gg * h.pow(delta);
        auto Bn = R.divide_exact(div);
        if (!Bn) throw std::logic_error("mgcd: inexact subresultant division");
        A = B;
        B = *Bn;
        gg = A.lc_in(x);
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = gg;
        } else {
            auto hn = gg.pow(delta).divide_exact(h.pow(delta - 1));
            if (!hn) throw std::logic_error("mgcd: inexact h update");
            h = *hn;
        }
        if (B.degree(x) == 0) return canonical(c);
    }
    MPoly<K> pp = primitive_part_in(B, {x});
    return canonical(c * pp);
}

template <class K>
MPoly<K> mgcd_many(const std::vector<MPoly<K>>& fs) {
    MPoly<K> g;
    for (auto& f : fs) g = mgcd(g, f);
    return g;
}

/// Sylvester resultant of f and g w.r.t. var, exact value including sign,
/// computed by the subresultant PRS. Classical degenerate conventions:
/// deg(f)=0 gives f^deg(g). Both inputs zero is a caller error.
template <class K>
MPoly<K> resultant(const MPoly<K>& f, const MPoly<K>& g, VarId x) {
    if (f.is_zero() && g.is_zero())
        throw std::domain_error("resultant undefined for two zero polynomials");
    if (f.is_zero() || g.is_zero()) {
        const MPoly<K>& nz = f.is_zero() ? g : f;
        if (nz.degree(x) > 0) return MPoly<K>();
        return MPoly<K>::constant(nz.lc() / nz.lc());
    }
    long m = f.degree(x), n = g.degree(x);
    if (m == 0 && n == 0) {
        return MPoly<K>::constant(f.lc() / f.lc());
    }
    if (m == 0) return f.pow(n);
    if (n == 0) return g.pow(m);

    MPoly<K> A = f, B = g;
    int sign = 1;
    if (m < n) {
        std::swap(A, B);
        std::swap(m, n);
        if ((m & 1) && (n & 1)) sign = -sign;
    }
    MPoly<K> one = MPoly<K>::constant(A.lc() / A.lc());
    MPoly<K> gg = one, h = one;
    while (true) {
        m = A.degree(x);
        n = B.degree(x);
        long delta = m - n;
        if ((m & 1) && (n & 1)) sign = -sign;
        MPoly<K> R = MPoly<K>::prem(A, B, x);
        if (R.is_zero()) return MPoly<K>();  // common factor of positive degree
        MPoly<K> div = gg * h.pow(delta);
        auto Bn = R.divide_exact(div);
        if (!Bn) throw std::logic_error("resultant: inexact subresultant division");
        A = B;
        B = *Bn;
        gg = A.lc_in(x);
        if (delta == 1) {
            h = gg;
        } else if (delta > 1) {
            auto hn = gg.pow(delta).divide_exact(h.pow(delta - 1));
            if (!hn) throw std::logic_error("resultant: inexact h update");
            h = *hn;
        }
        if (B.degree(x) == 0) {
            long dA = A.degree(x);
            MPoly<K> num = B.pow(dA);
            if (dA <= 1) {
                return sign < 0 ? -num : num;
            }
            auto res = num.divide_exact(h.pow(dA - 1));
            if (!res) throw std::logic_error("resultant: inexact final division");
            return sign < 0 ? -*res : *res;
        }
    }
}

/// f / gcd(f, df/dx): removes repeated factors w.r.t. x.
template <class K>
MPoly<K> squarefree_part(const MPoly<K>& f, VarId x) {
    if (f.is_zero() || f.degree(x) <= 0) return canonical(f);
    MPoly<K> d = f.derivative(x);
    MPoly<K> g = mgcd(f, d);
    return canonical(*f.divide_exact(g));
}

/// Full squarefree part w.r.t. all variables present.
template <class K>
MPoly<K> squarefree_part_all(const MPoly<K>& f) {
    MPoly<K> r = canonical(f);
    for (VarId v : f.vars()) {
        if (r.degree(v) > 0) r = squarefree_part(r, v);
    }
    return r;
}

} // namespace surfstrat
