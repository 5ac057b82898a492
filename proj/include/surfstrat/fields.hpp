#pragma once

#include "surfstrat/polyops.hpp"
#include "surfstrat/upoly.hpp"

#include <memory>
#include <string>

namespace surfstrat {

/// Fraction field of Q[vars]: reduced num/den with the denominator kept
/// canonical (integer-primitive, positive leading coefficient).
class FracQ {
public:
    FracQ() : num_(), den_(poly_const(1)) {}
    explicit FracQ(const PolyQ& n) : num_(n), den_(poly_const(1)) {}
    FracQ(const PolyQ& n, const PolyQ& d) : num_(n), den_(d) {
        if (den_.is_zero()) throw std::domain_error("FracQ: zero denominator");
        reduce();
    }
    explicit FracQ(const Rational& r) : num_(PolyQ::constant(r)), den_(poly_const(1)) {}

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    FracQ operator-() const { return FracQ(-num_, den_, nullptr); }
    FracQ operator+(const FracQ& o) const {
        return FracQ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    FracQ operator-(const FracQ& o) const {
        return FracQ(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    FracQ operator*(const FracQ& o) const { return FracQ(num_ * o.num_, den_ * o.den_); }
    FracQ operator/(const FracQ& o) const {
        if (o.is_zero()) throw std::domain_error("FracQ: division by zero");
        return FracQ(num_ * o.den_, den_ * o.num_);
    }
    FracQ& operator+=(const FracQ& o) { *this = *this + o; return *this; }
    FracQ& operator-=(const FracQ& o) { *this = *this - o; return *this; }
    FracQ& operator*=(const FracQ& o) { *this = *this * o; return *this; }

    bool operator==(const FracQ& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const FracQ& o) const { return !(*this == o); }

    std::string str() const {
        if (den_ == poly_const(1)) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    FracQ(const PolyQ& n, const PolyQ& d, std::nullptr_t) : num_(n), den_(d) {}

    void reduce() {
        if (num_.is_zero()) {
            den_ = poly_const(1);
            return;
        }
        PolyQ g = mgcd(num_, den_);
        if (!(g == poly_const(1))) {
            num_ = *num_.divide_exact(g);
            den_ = *den_.divide_exact(g);
        }
        Rational u = FieldTraits<Rational>::canonical_unit(den_);
        if (!u.is_one()) {
            Rational inv = u.inv();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    PolyQ num_;
    PolyQ den_;
};

/// Simple algebraic extension of a field B by a monic irreducible minimal
/// polynomial. Irreducibility is certified by the construction helpers
/// (they have factorization available); the raw constructor trusts its input.
template <class B>
class ExtField {
public:
    ExtField(std::string symbol, UPoly<B> minpoly)
        : symbol_(std::move(symbol)), minpoly_(std::move(minpoly)) {
        if (minpoly_.deg() < 1) throw std::invalid_argument("ExtField: degree < 1");
    }

    const std::string& symbol() const { return symbol_; }
    const UPoly<B>& minpoly() const { return minpoly_; }
    long degree() const { return minpoly_.deg(); }

private:
    std::string symbol_;
    UPoly<B> minpoly_;
};

/// Element of ExtField<B>. A default-constructed element is the zero of an
/// unspecified field; binary operations adopt the field of the nonzero side.
template <class B>
class ExtElem {
public:
    using Field = ExtField<B>;
    using FieldPtr = std::shared_ptr<const Field>;

    ExtElem() = default;
    ExtElem(FieldPtr fld, UPoly<B> rep) : fld_(std::move(fld)), rep_(std::move(rep)) {
        normalize();
    }

    static ExtElem from_base(const FieldPtr& fld, const B& b) {
        return ExtElem(fld, UPoly<B>::constant(b));
    }
    static ExtElem generator(const FieldPtr& fld) {
        B one = unit_of(fld->minpoly());
        UPoly<B> x(std::vector<B>{B(), one});
        return ExtElem(fld, x);
    }

    const FieldPtr& field() const { return fld_; }
    const UPoly<B>& rep() const { return rep_; }

    bool is_zero() const { return rep_.is_zero(); }

    ExtElem operator-() const { return raw(fld_, -rep_); }
    ExtElem operator+(const ExtElem& o) const { return ExtElem(join(o), rep_ + o.rep_); }
    ExtElem operator-(const ExtElem& o) const { return ExtElem(join(o), rep_ - o.rep_); }
    ExtElem operator*(const ExtElem& o) const { return ExtElem(join(o), rep_ * o.rep_); }
    ExtElem operator/(const ExtElem& o) const { return *this * o.inv(); }
    ExtElem& operator+=(const ExtElem& o) { *this = *this + o; return *this; }
    ExtElem& operator-=(const ExtElem& o) { *this = *this - o; return *this; }
    ExtElem& operator*=(const ExtElem& o) { *this = *this * o; return *this; }

    ExtElem inv() const {
        if (is_zero()) throw std::domain_error("ExtElem: inverse of zero");
        if (!fld_) {
            if (rep_.deg() != 0)
                throw std::domain_error("ExtElem: inverse without field");
            B c = rep_.c[0];
            return raw(nullptr, UPoly<B>::constant((c / c) / c));
        }
        UPoly<B> u, v;
        UPoly<B> g = upoly_ext_gcd(rep_, fld_->minpoly(), u, v);
        if (g.deg() != 0)
            throw std::domain_error("ExtElem: zero divisor (minpoly not irreducible?)");
        B inv = g.c[0] / (g.c[0] * g.c[0]);
        return ExtElem(fld_, u.scaled(inv));
    }

    bool operator==(const ExtElem& o) const {
        if (is_zero() && o.is_zero()) return true;
        return rep_ == o.rep_;
    }
    bool operator!=(const ExtElem& o) const { return !(*this == o); }

    std::string str() const {
        if (is_zero()) return "0";
        std::string sym = fld_ ? fld_->symbol() : "?";
        std::string out;
        for (size_t i = rep_.c.size(); i-- > 0;) {
            if (rep_.c[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            std::string cs = rep_.c[i].str();
            if (i == 0) {
                out += cs;
            } else {
                std::string p = sym + (i > 1 ? "^" + std::to_string(i) : "");
                if (cs == "1") out += p;
                else out += "(" + cs + ")*" + p;
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    static ExtElem raw(FieldPtr f, UPoly<B> r) {
        ExtElem e;
        e.fld_ = std::move(f);
        e.rep_ = std::move(r);
        return e;
    }

    static B unit_of(const UPoly<B>& p) { return p.lc() / (p.lc() * p.lc()) * p.lc(); }

    FieldPtr join(const ExtElem& o) const {
        if (fld_ && o.fld_ && fld_ != o.fld_)
            throw std::domain_error("ExtElem: mixed extension fields");
        return fld_ ? fld_ : o.fld_;
    }

    void normalize() {
        if (!fld_) {
            rep_.trim();
            return;
        }
        if (rep_.deg() >= fld_->minpoly().deg()) {
            UPoly<B> q, r;
            UPoly<B>::divrem(rep_, fld_->minpoly(), q, r);
            rep_ = r;
        }
    }

    FieldPtr fld_;
    UPoly<B> rep_;
};

using NumberField = ExtField<Rational>;
using NFElem = ExtElem<Rational>;
using NFPtr = std::shared_ptr<const NumberField>;

using FFBase = FracQ;
using FFField = ExtField<FracQ>;
using FFElem = ExtElem<FracQ>;
using FFPtr = std::shared_ptr<const FFField>;

/// Lift a rational-coefficient polynomial into MPoly<NFElem> over a field.
inline MPoly<NFElem> lift_nf(const PolyQ& f, const NFPtr& fld) {
    return f.map_coeffs<NFElem>([&](const Rational& r) { return NFElem::from_base(fld, r); });
}

inline NFElem nf_of_rational(const NFPtr& fld, const Rational& r) {
    return NFElem::from_base(fld, r);
}

/// Convert a univariate PolyQ in `v` into a dense UPoly<Rational>.
inline UPoly<Rational> to_upoly(const PolyQ& f, VarId v) {
    UPoly<Rational> r;
    long d = f.degree(v);
    r.c.assign(static_cast<size_t>(std::max(d, 0L)) + 1, Rational(0));
    auto coeffs = f.univ_coeffs(v);
    for (size_t i = 0; i < coeffs.size(); i++) {
        if (coeffs[i].is_zero()) continue;
        if (!coeffs[i].is_constant())
            throw std::invalid_argument("to_upoly: polynomial is not univariate in " + var_name(v));
        r.c[i] = coeffs[i].constant_value();
    }
    r.trim();
    return r;
}

inline PolyQ from_upoly(const UPoly<Rational>& f, VarId v) {
    PolyQ r;
    PolyQ x = PolyQ::variable(v, Rational(1));
    for (size_t i = 0; i < f.c.size(); i++) {
        if (!f.c[i].is_zero()) r += PolyQ::constant(f.c[i]) * x.pow(static_cast<long>(i));
    }
    return r;
}

} // namespace surfstrat
