#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

namespace surfstrat {

/// Dense univariate polynomial over a field K, coefficient of x^i at [i].
/// Invariant: no trailing zero coefficients (empty vector == zero).
template <class K>
struct UPoly {
    std::vector<K> c;

    UPoly() = default;
    explicit UPoly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }

    static UPoly constant(const K& k) {
        UPoly p;
        if (!k.is_zero()) p.c = {k};
        return p;
    }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    long deg() const { return static_cast<long>(c.size()) - 1; }
    const K& lc() const { assert(!c.empty()); return c.back(); }

    K at(size_t i) const { return i < c.size() ? c[i] : K(); }

    UPoly operator+(const UPoly& o) const {
        UPoly r;
        r.c.resize(std::max(c.size(), o.c.size()));
        for (size_t i = 0; i < r.c.size(); i++) r.c[i] = at(i) + o.at(i);
        r.trim();
        return r;
    }
    UPoly operator-() const {
        UPoly r = *this;
        for (auto& k : r.c) k = K() - k;
        return r;
    }
    UPoly operator-(const UPoly& o) const { return *this + (-o); }
    UPoly operator*(const UPoly& o) const {
        if (is_zero() || o.is_zero()) return UPoly();
        UPoly r;
        r.c.assign(c.size() + o.c.size() - 1, K());
        for (size_t i = 0; i < c.size(); i++) {
            if (c[i].is_zero()) continue;
            for (size_t j = 0; j < o.c.size(); j++) r.c[i + j] += c[i] * o.c[j];
        }
        r.trim();
        return r;
    }
    UPoly scaled(const K& k) const {
        UPoly r = *this;
        for (auto& x : r.c) x *= k;
        r.trim();
        return r;
    }
    UPoly shifted(size_t n) const {  // multiply by x^n
        if (is_zero()) return UPoly();
        UPoly r;
        r.c.assign(n, K());
        r.c.insert(r.c.end(), c.begin(), c.end());
        return r;
    }

    bool operator==(const UPoly& o) const {
        if (c.size() != o.c.size()) return false;
        for (size_t i = 0; i < c.size(); i++)
            if (!(c[i] == o.c[i])) return false;
        return true;
    }

    static void divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
        if (b.is_zero()) throw std::domain_error("UPoly: division by zero");
        r = a;
        q = UPoly();
        if (a.deg() < b.deg()) return;
        q.c.assign(a.deg() - b.deg() + 1, K());
        K inv = b.lc() / (b.lc() * b.lc());
        while (!r.is_zero() && r.deg() >= b.deg()) {
            long k = r.deg() - b.deg();
            K f = r.lc() * inv;
            q.c[k] = f;
            // r -= f * x^k * b
            for (long i = 0; i <= b.deg(); i++) {
                r.c[i + k] = r.c[i + k] - f * b.c[i];
            }
            r.trim();
        }
        q.trim();
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        K inv = lc() / (lc() * lc());
        return scaled(inv);
    }

    K eval(const K& x) const {
        K r;
        for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
        return r;
    }

    UPoly derivative() const {
        if (c.size() <= 1) return UPoly();
        UPoly r;
        r.c.resize(c.size() - 1);
        for (size_t i = 1; i < c.size(); i++) {
            K m;
            for (size_t j = 0; j < i; j++) m += c[i];
            r.c[i - 1] = m;
        }
        r.trim();
        return r;
    }
};

template <class K>
UPoly<K> upoly_gcd(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero()) {
        UPoly<K> q, r;
        UPoly<K>::divrem(a, b, q, r);
        a = b;
        b = r;
    }
    return a.monic();
}

/// Extended gcd: returns g monic with u*a + v*b = g.
template <class K>
UPoly<K> upoly_ext_gcd(const UPoly<K>& a, const UPoly<K>& b, UPoly<K>& u, UPoly<K>& v) {
    UPoly<K> r0 = a, r1 = b;
    UPoly<K> s0 = UPoly<K>::constant(K()), s1 = s0, t0 = s0, t1 = s0;
    // s0 = 1
    if (!a.is_zero()) s0 = UPoly<K>::constant(a.lc() / a.lc());
    else if (!b.is_zero()) s0 = UPoly<K>::constant(b.lc() / b.lc());
    t1 = s0;  // t1 = 1
    s1 = UPoly<K>();
    t0 = UPoly<K>();
    while (!r1.is_zero()) {
        UPoly<K> q, r;
        UPoly<K>::divrem(r0, r1, q, r);
        UPoly<K> s2 = s0 - q * s1;
        UPoly<K> t2 = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0.is_zero()) {
        u = UPoly<K>();
        v = UPoly<K>();
        return r0;
    }
    K inv = r0.lc() / (r0.lc() * r0.lc());
    u = s0.scaled(inv);
    v = t0.scaled(inv);
    return r0.scaled(inv);
}

} // namespace surfstrat
