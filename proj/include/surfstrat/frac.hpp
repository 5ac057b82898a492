#pragma once

#include "surfstrat/fields.hpp"
#include "surfstrat/param.hpp"

namespace surfstrat {

/// Reduced fraction of multivariate polynomials over a field K.
/// The zero fraction is stored as 0/0 (K has no context-free one); every
/// operation treats it as 0, and nonzero fractions always carry den != 0.
template <class K>
struct Frac {
    MPoly<K> num, den;

    Frac() = default;
    explicit Frac(MPoly<K> n) : num(std::move(n)) {
        if (num.is_zero()) return;
        den = MPoly<K>::constant(num.lc() / num.lc());
        reduce();
    }
    Frac(MPoly<K> n, MPoly<K> d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw std::domain_error("Frac: zero denominator");
        reduce();
    }

    bool is_zero() const { return num.is_zero(); }

    Frac operator-() const {
        Frac r = *this;
        r.num = -r.num;
        return r;
    }
    Frac operator+(const Frac& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        return Frac(num * o.den + o.num * den, den * o.den);
    }
    Frac operator-(const Frac& o) const {
        if (o.is_zero()) return *this;
        if (is_zero()) return -o;
        return Frac(num * o.den - o.num * den, den * o.den);
    }
    Frac operator*(const Frac& o) const {
        if (is_zero() || o.is_zero()) return Frac();
        return Frac(num * o.num, den * o.den);
    }
    Frac operator/(const Frac& o) const {
        if (o.is_zero()) throw std::domain_error("Frac: division by zero");
        if (is_zero()) return Frac();
        return Frac(num * o.den, den * o.num);
    }

    Frac subst2(VarId a, const MPoly<K>& va, VarId b, const MPoly<K>& vb) const {
        if (is_zero()) return Frac();
        return Frac(num.subst(a, va).subst(b, vb), den.subst(a, va).subst(b, vb));
    }

    void reduce() {
        if (num.is_zero()) {
            den = MPoly<K>();
            return;
        }
        MPoly<K> g = mgcd(num, den);
        MPoly<K> one = MPoly<K>::constant(g.lc() / g.lc());
        if (!(g == one)) {
            num = *num.divide_exact(g);
            den = *den.divide_exact(g);
        }
        K u = FieldTraits<K>::canonical_unit(den);
        K inv = (u / u) / u;
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
};

/// Lift a rational polynomial into coefficients of K.
template <class K>
MPoly<K> lift_scalars(const PolyQ& f, const NFPtr& fld) {
    if constexpr (std::is_same_v<K, Rational>) {
        (void)fld;
        return f;
    } else if constexpr (std::is_same_v<K, NFElem>) {
        return fld ? lift_nf(f, fld)
                   : f.map_coeffs<NFElem>([](const Rational& r) {
                         return NFElem(nullptr, UPoly<Rational>::constant(r));
                     });
    }
}

inline MPoly<FFElem> lift_scalars_ff(const PolyQ& f, const FFPtr& fld) {
    return f.map_coeffs<FFElem>(
        [&](const Rational& r) { return FFElem::from_base(fld, FracQ(r)); });
}

/// Coefficient of the pure s^d monomial of the (t,s)-top form of f: the value
/// of the homogenized-in-(t,s) polynomial at (0:1:0). Other variables ride
/// along as coefficients.
template <class K>
MPoly<K> infinity_coeff(const MPoly<K>& f, VarId tv, VarId sv) {
    if (f.is_zero()) return f;
    long d = f.degree_in({tv, sv});
    MPoly<K> out;
    for (auto& [e, c] : f.terms()) {
        long et = 0, es = 0;
        for (size_t i = 0; i < f.vars().size(); i++) {
            if (f.vars()[i] == tv) et = e[i];
            if (f.vars()[i] == sv) es = e[i];
        }
        if (et != 0 || es != d) continue;
        std::vector<VarId> vs;
        std::vector<int> ee;
        for (size_t i = 0; i < f.vars().size(); i++) {
            if (f.vars()[i] == tv || f.vars()[i] == sv || e[i] == 0) continue;
            vs.push_back(f.vars()[i]);
            ee.push_back(e[i]);
        }
        out += MPoly<K>::monomial(vs, ee, c);
    }
    return out;
}

/// Value of the (t,s)-top form of f at (t,s) = (c,1) -- the (0:1:0) test
/// after the shear sigma_c.
template <class K>
MPoly<K> infinity_coeff_sheared(const MPoly<K>& f, VarId tv, VarId sv, long c, const K& one) {
    if (f.is_zero()) return f;
    long d = f.degree_in({tv, sv});
    K cval;
    {
        bool neg = c < 0;
        long cc = neg ? -c : c;
        for (long j = 0; j < cc; j++) cval += one;
        if (neg) cval = K() - cval;
    }
    MPoly<K> out;
    for (auto& [e, coeff] : f.terms()) {
        long et = 0, es = 0;
        for (size_t i = 0; i < f.vars().size(); i++) {
            if (f.vars()[i] == tv) et = e[i];
            if (f.vars()[i] == sv) es = e[i];
        }
        if (et + es != d) continue;
        K cc = coeff;
        for (long k = 0; k < et; k++) cc = cc * cval;
        if (cc.is_zero()) continue;
        std::vector<VarId> vs;
        std::vector<int> ee;
        for (size_t i = 0; i < f.vars().size(); i++) {
            if (f.vars()[i] == tv || f.vars()[i] == sv || e[i] == 0) continue;
            vs.push_back(f.vars()[i]);
            ee.push_back(e[i]);
        }
        out += MPoly<K>::monomial(vs, ee, cc);
    }
    return out;
}

/// Smallest shear c >= 0 making every given polynomial's (t,s)-closure avoid
/// (0:1:0). Polynomials constant in (t,s) are ignored.
template <class K>
long find_shear(const std::vector<MPoly<K>>& polys, VarId tv, VarId sv, const K& one) {
    for (long c = 0; c <= 1000; c++) {
        bool ok = true;
        for (auto& g : polys) {
            if (g.is_zero() || g.degree_in({tv, sv}) <= 0) continue;
            if (infinity_coeff_sheared(g, tv, sv, c, one).is_zero()) {
                ok = false;
                break;
            }
        }
        if (ok) return c;
    }
    throw InternalError("find_shear: no admissible parameter change found");
}

/// sigma_c on the parameter plane: t -> t + c*s.
template <class K>
MPoly<K> shear(const MPoly<K>& f, VarId tv, VarId sv, long c, const K& one) {
    if (c == 0 || !f.has_var(tv)) return f;
    K cval;
    {
        bool neg = c < 0;
        long cc = neg ? -c : c;
        for (long j = 0; j < cc; j++) cval += one;
        if (neg) cval = K() - cval;
    }
    MPoly<K> val =
        MPoly<K>::variable(tv, one) + MPoly<K>::variable(sv, one).scaled(cval);
    return f.subst(tv, val);
}

} // namespace surfstrat
