#pragma once

#include "surfstrat/polyops.hpp"

namespace surfstrat {

/// Rational function over Q in reduced form. The denominator is kept
/// canonical (integer-primitive, positive leading coefficient).
class RatFunc {
public:
    RatFunc() : num_(), den_(poly_const(1)) {}
    explicit RatFunc(const PolyQ& n) : num_(n), den_(poly_const(1)) {}
    RatFunc(const PolyQ& n, const PolyQ& d) : num_(n), den_(d) {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        reduce();
    }

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }

    RatFunc subst(VarId v, const PolyQ& val) const {
        return RatFunc(num_.subst(v, val), den_.subst(v, val));
    }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::string str() const {
        if (den_ == poly_const(1)) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
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
            num_ = num_.scaled(u.inv());
            den_ = den_.scaled(u.inv());
        }
    }

    PolyQ num_;
    PolyQ den_;
};

} // namespace surfstrat
