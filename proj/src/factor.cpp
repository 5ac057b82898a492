#include "surfstrat/factor.hpp"

#include "surfstrat/fields.hpp"
#include "surfstrat/upoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace surfstrat {

namespace {

// ---------------------------------------------------------------------------
// dense Z[x] / (Z/m)[x] helpers; coefficient of x^i at [i], no trailing zeros
// ---------------------------------------------------------------------------

using ZPoly = std::vector<Int>;

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long zdeg(const ZPoly& a) { return static_cast<long>(a.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); j++) r[i + j] += a[i] * b[j];
    }
    ztrim(r);
    return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] += b[i];
    ztrim(r);
    return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] -= b[i];
    ztrim(r);
    return r;
}

ZPoly zmod(const ZPoly& a, const Int& m) {
    ZPoly r = a;
    for (auto& c : r) {
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    }
    ztrim(r);
    return r;
}

/// symmetric representative in (-m/2, m/2]
ZPoly zsym(const ZPoly& a, const Int& m) {
    ZPoly r = zmod(a, m);
    Int half = m / 2;
    for (auto& c : r) {
        if (c > half) c -= m;
    }
    ztrim(r);
    return r;
}

Int inv_mod(const Int& a, const Int& m) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw std::logic_error("inv_mod: not invertible");
    return r;
}

/// divrem by a monic divisor, coefficients mod m
void zdivrem_monic(const ZPoly& a, const ZPoly& b, const Int& m, ZPoly& q, ZPoly& r) {
    r = zmod(a, m);
    q.clear();
    long db = zdeg(b);
    if (db < 0) throw std::logic_error("zdivrem_monic: zero divisor");
    if (zdeg(r) < db) return;
    q.assign(zdeg(r) - db + 1, Int(0));
    while (zdeg(r) >= db) {
        long k = zdeg(r) - db;
        Int c = r.back();
        q[k] = c;
        for (long i = 0; i <= db; i++) {
            r[i + k] -= c * b[i];
        }
        r = zmod(r, m);
    }
    q = zmod(q, m);
}

ZPoly zmulmod(const ZPoly& a, const ZPoly& b, const Int& m) { return zmod(zmul(a, b), m); }

ZPoly zscale(const ZPoly& a, const Int& c) {
    ZPoly r = a;
    for (auto& x : r) x *= c;
    ztrim(r);
    return r;
}

ZPoly zgcd_fp(ZPoly a, ZPoly b, const Int& p) {
    a = zmod(a, p);
    b = zmod(b, p);
    while (!b.empty()) {
        Int li = inv_mod(b.back(), p);
        ZPoly bm = zmod(zscale(b, li), p);
        ZPoly q, r;
        zdivrem_monic(a, bm, p, q, r);
        a = bm;
        b = r;
    }
    if (!a.empty()) a = zmod(zscale(a, inv_mod(a.back(), p)), p);
    return a;
}

/// extended gcd mod p for coprime a,b: s*a + t*b = 1
void zext_gcd_fp(const ZPoly& a, const ZPoly& b, const Int& p, ZPoly& s, ZPoly& t) {
    ZPoly r0 = zmod(a, p), r1 = zmod(b, p);
    ZPoly s0{Int(1)}, s1, t0, t1{Int(1)};
    while (!r1.empty()) {
        Int li = inv_mod(r1.back(), p);
        ZPoly r1m = zmod(zscale(r1, li), p);
        ZPoly q, r;
        zdivrem_monic(r0, r1m, p, q, r);
        q = zmod(zscale(q, li), p);  // quotient for the unnormalized r1
        ZPoly s2 = zmod(zsub(s0, zmul(q, s1)), p);
        ZPoly t2 = zmod(zsub(t0, zmul(q, t1)), p);
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (zdeg(r0) != 0) throw std::logic_error("zext_gcd_fp: inputs not coprime");
    Int li = inv_mod(r0[0], p);
    s = zmod(zscale(s0, li), p);
    t = zmod(zscale(t0, li), p);
}

ZPoly zpowmod(const ZPoly& base, const Int& e, const ZPoly& mod, const Int& p) {
    ZPoly r{Int(1)};
    ZPoly b = base;
    Int k = e;
    ZPoly q, rem;
    zdivrem_monic(b, mod, p, q, rem);
    b = rem;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) {
            zdivrem_monic(zmul(r, b), mod, p, q, rem);
            r = rem;
        }
        zdivrem_monic(zmul(b, b), mod, p, q, rem);
        b = rem;
        k /= 2;
    }
    return r;
}

struct XorShift {
    uint64_t s;
    explicit XorShift(uint64_t seed) : s(seed ? seed : 88172645463325252ULL) {}
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
};

// ---------------------------------------------------------------------------
// factorization over Fp (distinct degree + Cantor-Zassenhaus splitting)
// ---------------------------------------------------------------------------

void equal_degree_split(const ZPoly& f, long d, const Int& p, XorShift& rng,
                        std::vector<ZPoly>& out) {
    if (zdeg(f) == d) {
        out.push_back(f);
        return;
    }
    Int exp = (int_pow(p, static_cast<unsigned long>(d)) - 1) / 2;
    while (true) {
        // random a with deg < deg f
        ZPoly a(static_cast<size_t>(zdeg(f)), Int(0));
        for (auto& c : a) {
            c = Int(static_cast<unsigned long>(rng.next() % mpz_get_ui(p.get_mpz_t())));
        }
        ztrim(a);
        if (zdeg(a) < 1) continue;
        ZPoly b = zpowmod(a, exp, f, p);
        b = zmod(zsub(b, {Int(1)}), p);
        if (b.empty()) continue;
        ZPoly g = zgcd_fp(f, b, p);
        if (zdeg(g) <= 0 || zdeg(g) == zdeg(f)) continue;
        ZPoly q, r;
        zdivrem_monic(f, g, p, q, r);
        equal_degree_split(g, d, p, rng, out);
        equal_degree_split(q, d, p, rng, out);
        return;
    }
}

/// monic squarefree f over Fp -> monic irreducible factors
std::vector<ZPoly> factor_fp(const ZPoly& f, const Int& p) {
    std::vector<ZPoly> out;
    XorShift rng(0x5eed5eedULL ^ mpz_get_ui(p.get_mpz_t()) ^ (uint64_t)zdeg(f));
    ZPoly v = f;
    ZPoly x{Int(0), Int(1)};
    ZPoly h = x;
    long d = 0;
    while (zdeg(v) >= 2 * (d + 1)) {
        d++;
        h = zpowmod(h, p, v, p);
        ZPoly g = zgcd_fp(zsub(h, x), v, p);
        if (zdeg(g) > 0) {
            equal_degree_split(g, d, p, rng, out);
            ZPoly q, r;
            zdivrem_monic(v, g, p, q, r);
            v = q;
            ZPoly qq, rr;
            zdivrem_monic(h, v, p, qq, rr);
            h = rr;
        }
    }
    if (zdeg(v) > 0) out.push_back(v);
    return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting (von zur Gathen & Gerhard, Alg. 15.10)
// ---------------------------------------------------------------------------

/// One quadratic step: given f = g*h mod m, s*g + t*h = 1 mod m, h monic,
/// produces the same data mod m^2.
void hensel_step(const Int& m, const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t) {
    Int m2 = m * m;
    ZPoly e = zmod(zsub(f, zmul(g, h)), m2);
    ZPoly q, r;
    zdivrem_monic(zmulmod(s, e, m2), h, m2, q, r);
    ZPoly gs = zmod(zadd(zadd(g, zmulmod(t, e, m2)), zmulmod(q, g, m2)), m2);
    ZPoly hs = zmod(zadd(h, r), m2);
    ZPoly b = zmod(zsub(zadd(zmulmod(s, gs, m2), zmulmod(t, hs, m2)), {Int(1)}), m2);
    ZPoly c, d;
    zdivrem_monic(zmulmod(s, b, m2), hs, m2, c, d);
    ZPoly ss = zmod(zsub(s, d), m2);
    ZPoly ts = zmod(zsub(zsub(t, zmulmod(t, b, m2)), zmulmod(c, gs, m2)), m2);
    g = gs; h = hs; s = ss; t = ts;
}

/// Lift the monic factorization f = prod(facs) (mod p) to mod p^2^j >= bound.
/// f monic mod target modulus; returns factors mod `modulus_out`.
std::vector<ZPoly> hensel_lift_tree(const ZPoly& f, std::vector<ZPoly> facs, const Int& p,
                                    const Int& bound, Int& modulus_out) {
    if (facs.size() == 1) {
        Int m = p;
        while (m < bound) m = m * m;
        modulus_out = m;
        return {zmod(f, m)};
    }
    size_t half = facs.size() / 2;
    ZPoly g{Int(1)}, h{Int(1)};
    for (size_t i = 0; i < half; i++) g = zmulmod(g, facs[i], p);
    for (size_t i = half; i < facs.size(); i++) h = zmulmod(h, facs[i], p);
    ZPoly s, t;
    zext_gcd_fp(g, h, p, s, t);
    Int m = p;
    while (m < bound) {
        hensel_step(m, zmod(f, m * m), g, h, s, t);
        m = m * m;
    }
    modulus_out = m;
    std::vector<ZPoly> left(facs.begin(), facs.begin() + half);
    std::vector<ZPoly> right(facs.begin() + half, facs.end());
    Int dummy;
    auto lf = hensel_lift_tree(g, left, p, bound, dummy);
    auto rf = hensel_lift_tree(h, right, p, bound, dummy);
    lf.insert(lf.end(), rf.begin(), rf.end());
    return lf;
}

// ---------------------------------------------------------------------------
// univariate factorization over Q (Zassenhaus)
// ---------------------------------------------------------------------------

ZPoly to_zpoly(const PolyQ& f, VarId x) {
    // f must be integer-coefficient univariate in x
    UPoly<Rational> u = to_upoly(f, x);
    ZPoly r;
    for (auto& c : u.c) {
        if (!c.is_integer()) throw std::logic_error("to_zpoly: non-integer coefficient");
        r.push_back(c.num());
    }
    ztrim(r);
    return r;
}

PolyQ from_zpoly(const ZPoly& a, VarId x) {
    UPoly<Rational> u;
    for (auto& c : a) u.c.push_back(Rational(c));
    u.trim();
    return from_upoly(u, x);
}

bool zdivides(const ZPoly& g, const ZPoly& f) {
    // exact division test over Z via rational division
    if (g.empty()) return false;
    UPoly<Rational> a, b;
    for (auto& c : f) a.c.push_back(Rational(c));
    for (auto& c : g) b.c.push_back(Rational(c));
    a.trim();
    b.trim();
    UPoly<Rational> q, r;
    UPoly<Rational>::divrem(a, b, q, r);
    return r.is_zero();
}

ZPoly zdiv_exact(const ZPoly& f, const ZPoly& g) {
    UPoly<Rational> a, b;
    for (auto& c : f) a.c.push_back(Rational(c));
    for (auto& c : g) b.c.push_back(Rational(c));
    a.trim();
    b.trim();
    UPoly<Rational> q, r;
    UPoly<Rational>::divrem(a, b, q, r);
    if (!r.is_zero()) throw std::logic_error("zdiv_exact: not divisible");
    ZPoly out;
    for (auto& c : q.c) {
        if (!c.is_integer()) throw std::logic_error("zdiv_exact: non-integer quotient");
        out.push_back(c.num());
    }
    ztrim(out);
    return out;
}

/// primitive part over Z with positive leading coefficient
ZPoly zprimitive(const ZPoly& f) {
    Int g(0);
    for (auto& c : f) g = int_gcd(g, c);
    if (g == 0) return f;
    if (f.back() < 0) g = -g;
    ZPoly r = f;
    for (auto& c : r) c /= g;
    return r;
}

/// factor a squarefree primitive F over Z (deg >= 1) into irreducibles over Z
std::vector<ZPoly> factor_z_squarefree(const ZPoly& F) {
    long n = zdeg(F);
    if (n == 1) return {F};
    // choose a prime
    Int p(10007);
    while (true) {
        while (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) p += 2;
        if (F.back() % p != 0) {
            ZPoly fp = zmod(F, p);
            ZPoly d;
            {
                // derivative mod p
                for (size_t i = 1; i < fp.size(); i++) d.push_back(fp[i] * Int(i));
                ztrim(d);
                d = zmod(d, p);
            }
            if (!d.empty() && zdeg(zgcd_fp(fp, d, p)) == 0) break;
        }
        p += 2;
    }
    Int lc = F.back();
    ZPoly Fmonic = zmod(zscale(F, inv_mod(lc, p)), p);
    std::vector<ZPoly> modular = factor_fp(Fmonic, p);
    if (modular.size() == 1) return {F};

    // Mignotte-style coefficient bound for factors of F times lc
    Int maxc(0);
    for (auto& c : F) {
        Int a = abs(c);
        if (a > maxc) maxc = a;
    }
    Int bound = maxc * abs(lc) * int_pow(Int(2), static_cast<unsigned long>(n + 2));
    mpz_sqrt(bound.get_mpz_t(), Int(bound * bound * Int(n + 1)).get_mpz_t());
    bound = 2 * bound + 1;

    Int M;
    // lift the monic factorization of F/lc
    ZPoly target = F;
    {
        Int m = p;
        while (m < bound) m = m * m;
        target = zmod(zscale(F, inv_mod(lc, m)), m);
    }
    std::vector<ZPoly> lifted = hensel_lift_tree(target, modular, p, bound, M);

    // recombination
    std::vector<ZPoly> result;
    ZPoly rem = F;
    std::vector<size_t> idx(lifted.size());
    for (size_t i = 0; i < idx.size(); i++) idx[i] = i;
    size_t k = 1;
    while (2 * k <= idx.size()) {
        bool found = false;
        std::vector<size_t> comb(k);
        for (size_t i = 0; i < k; i++) comb[i] = i;
        while (true) {
            ZPoly cand{rem.back()};
            for (size_t i = 0; i < k; i++) cand = zmulmod(cand, lifted[idx[comb[i]]], M);
            cand = zprimitive(zsym(cand, M));
            if (zdivides(cand, rem)) {
                result.push_back(cand);
                rem = zdiv_exact(rem, cand);
                std::vector<size_t> keep;
                for (size_t i = 0, j = 0; i < idx.size(); i++) {
                    if (j < k && comb[j] == i) { j++; continue; }
                    keep.push_back(idx[i]);
                }
                idx = keep;
                found = true;
                break;
            }
            // next combination
            long pos = static_cast<long>(k) - 1;
            while (pos >= 0 && comb[pos] == idx.size() - k + pos) pos--;
            if (pos < 0) break;
            comb[pos]++;
            for (size_t i = pos + 1; i < k; i++) comb[i] = comb[i - 1] + 1;
        }
        if (!found) k++;
    }
    if (zdeg(rem) > 0) result.push_back(zprimitive(rem));
    return result;
}

/// univariate over Q: returns canonical irreducible factors with multiplicity
void factor_univariate_into(const PolyQ& f, VarId x, std::map<std::string, std::pair<PolyQ, int>>& acc) {
    auto sq = squarefree_decompose(f, x);
    for (auto& [part, mult] : sq) {
        PolyQ p = canonical(part);
        if (p.degree(x) < 1) continue;
        ZPoly F = to_zpoly(p, x);
        for (auto& zf : factor_z_squarefree(F)) {
            PolyQ fac = canonical(from_zpoly(zf, x));
            auto key = fac.str();
            auto it = acc.find(key);
            if (it == acc.end()) acc[key] = {fac, mult};
            else it->second.second += mult;
        }
    }
}

// ---------------------------------------------------------------------------
// bivariate factorization: evaluate, lift in the second variable, recombine
// ---------------------------------------------------------------------------

/// truncated power series in u over Q: plain UPoly with explicit truncation
using Series = UPoly<Rational>;

Series strunc(const Series& a, long N) {
    Series r = a;
    if (static_cast<long>(r.c.size()) > N) r.c.resize(N);
    r.trim();
    return r;
}

/// bivariate dense poly: coefficient of x^i is a u-series
struct BPoly {
    std::vector<Series> c;
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    long deg() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
};

BPoly bmul(const BPoly& a, const BPoly& b, long N) {
    BPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Series());
    for (size_t i = 0; i < a.c.size(); i++)
        for (size_t j = 0; j < b.c.size(); j++)
            r.c[i + j] = strunc(r.c[i + j] + a.c[i] * b.c[j], N);
    r.trim();
    return r;
}

BPoly badd(const BPoly& a, const BPoly& b, long N) {
    BPoly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), Series());
    for (size_t i = 0; i < a.c.size(); i++) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); i++) r.c[i] = strunc(r.c[i] + b.c[i], N);
    r.trim();
    return r;
}

BPoly bsub(const BPoly& a, const BPoly& b, long N) {
    BPoly nb = b;
    for (auto& s : nb.c) s = -s;
    return badd(a, nb, N);
}

/// divrem by a divisor monic in x
void bdivrem_monic(const BPoly& a, const BPoly& b, long N, BPoly& q, BPoly& r) {
    r = a;
    q = BPoly();
    long db = b.deg();
    if (r.deg() < db) return;
    q.c.assign(r.deg() - db + 1, Series());
    while (r.deg() >= db) {
        long k = r.deg() - db;
        Series f = r.c.back();
        q.c[k] = strunc(q.c[k] + f, N);
        for (long i = 0; i <= db; i++) {
            r.c[i + k] = strunc(r.c[i + k] - f * b.c[i], N);
        }
        r.trim();
        if (r.deg() >= db + k) break;  // no progress safeguard (cannot happen: monic)
    }
}

void bhensel_step(long prec, long N, const BPoly& f, BPoly& g, BPoly& h, BPoly& s, BPoly& t) {
    // lift from u^prec to u^min(2*prec, N)
    long np = std::min(2 * prec, N);
    BPoly e = bsub(f, bmul(g, h, np), np);
    BPoly q, r;
    bdivrem_monic(bmul(s, e, np), h, np, q, r);
    BPoly gs = badd(badd(g, bmul(t, e, np), np), bmul(q, g, np), np);
    BPoly hs = badd(h, r, np);
    BPoly one;
    one.c = {Series::constant(Rational(1))};
    BPoly b = bsub(badd(bmul(s, gs, np), bmul(t, hs, np), np), one, np);
    BPoly c, d;
    bdivrem_monic(bmul(s, b, np), hs, np, c, d);
    BPoly ss = bsub(s, d, np);
    BPoly ts = bsub(bsub(t, bmul(t, b, np), np), bmul(c, gs, np), np);
    g = gs; h = hs; s = ss; t = ts;
}

std::vector<BPoly> bhensel_tree(const BPoly& f, const std::vector<UPoly<Rational>>& facs, long N) {
    if (facs.size() == 1) {
        return {f};
    }
    size_t half = facs.size() / 2;
    UPoly<Rational> g0 = UPoly<Rational>::constant(Rational(1));
    UPoly<Rational> h0 = UPoly<Rational>::constant(Rational(1));
    for (size_t i = 0; i < half; i++) g0 = g0 * facs[i];
    for (size_t i = half; i < facs.size(); i++) h0 = h0 * facs[i];
    UPoly<Rational> s0, t0;
    UPoly<Rational> one = upoly_ext_gcd(g0, h0, s0, t0);
    if (one.deg() != 0) throw std::logic_error("bhensel_tree: factors not coprime");

    auto embed = [](const UPoly<Rational>& p) {
        BPoly r;
        for (auto& coeff : p.c) r.c.push_back(Series::constant(coeff));
        r.trim();
        return r;
    };
    BPoly g = embed(g0), h = embed(h0), s = embed(s0), t = embed(t0);
    long prec = 1;
    while (prec < N) {
        bhensel_step(prec, N, f, g, h, s, t);
        prec = std::min(2 * prec, N);
    }
    std::vector<UPoly<Rational>> left(facs.begin(), facs.begin() + half);
    std::vector<UPoly<Rational>> right(facs.begin() + half, facs.end());
    auto lf = bhensel_tree(g, left, N);
    auto rf = bhensel_tree(h, right, N);
    lf.insert(lf.end(), rf.begin(), rf.end());
    return lf;
}

/// series inverse of a(u) with a(0) != 0, to precision N
Series series_inv(const Series& a, long N) {
    Series r = Series::constant(a.c[0].inv());
    long prec = 1;
    Series two = Series::constant(Rational(2));
    while (prec < N) {
        prec = std::min(2 * prec, N);
        r = strunc(r * (two - strunc(a, prec) * r), prec);
    }
    return r;
}

PolyQ series_to_poly(const Series& s, VarId y, const Rational& y0) {
    // substitute u = y - y0
    PolyQ u = PolyQ::variable(y, Rational(1)) - PolyQ::constant(y0);
    PolyQ r;
    PolyQ up = poly_const(1);
    for (size_t i = 0; i < s.c.size(); i++) {
        if (!s.c[i].is_zero()) r += PolyQ::constant(s.c[i]) * up;
        up *= u;
    }
    return r;
}

/// factor squarefree primitive-in-x f with deg_x >= 1, deg_y >= 1
std::vector<PolyQ> factor_bivariate_squarefree(const PolyQ& f, VarId x, VarId y) {
    PolyQ lcx = f.lc_in(x);
    long N = f.degree(y) + std::max(lcx.degree(y), 0L) + 1;

    // evaluation point
    Rational y0;
    PolyQ fy;
    for (long k = 0;; k++) {
        long cand = (k % 2 == 0) ? k / 2 : -(k / 2 + 1);
        y0 = Rational(cand);
        if (lcx.eval_all({{y, y0}}).is_zero()) continue;
        fy = f.subst(y, PolyQ::constant(y0));
        PolyQ g = mgcd(fy, fy.derivative(x));
        if (g.degree(x) == 0) break;
        if (k > 200) throw std::logic_error("factor_bivariate: no good evaluation point");
    }

    // univariate factors at y = y0
    std::map<std::string, std::pair<PolyQ, int>> uf;
    factor_univariate_into(fy, x, uf);
    if (uf.size() == 1 && uf.begin()->second.second == 1) return {canonical(f)};

    // monic initial factors over Q
    std::vector<UPoly<Rational>> init;
    for (auto& [k, pm] : uf) {
        UPoly<Rational> up = to_upoly(pm.first, x).monic();
        init.push_back(up);
    }

    // F(x,u) = f(x, u+y0), made monic in x as a series
    PolyQ u_sub = PolyQ::variable(y, Rational(1));  // placeholder: build series directly
    BPoly F;
    {
        auto xc = f.univ_coeffs(x);
        F.c.resize(xc.size());
        for (size_t i = 0; i < xc.size(); i++) {
            // coefficient in y -> series in u via y = u + y0 (binomial expansion)
            UPoly<Rational> cy = to_upoly(xc[i], y);
            Series s;
            s.c.assign(static_cast<size_t>(N), Rational(0));
            // evaluate shifted: sum cy[j] (u+y0)^j
            Series acc = Series::constant(Rational(1));
            Series shift;  // u + y0
            shift.c = {y0, Rational(1)};
            for (size_t j = 0; j < cy.c.size(); j++) {
                if (!cy.c[j].is_zero()) {
                    Series term = strunc(acc.scaled(cy.c[j]), N);
                    s = s + term;
                }
                acc = strunc(acc * shift, N);
            }
            s.trim();
            F.c[i] = s;
        }
        F.trim();
    }
    Series lcs = F.c.back();
    Series lcs_inv = series_inv(lcs, N);
    BPoly Fm = F;
    for (auto& s : Fm.c) s = strunc(s * lcs_inv, N);

    std::vector<BPoly> lifted = bhensel_tree(Fm, init, N);

    // recombination
    std::vector<PolyQ> out;
    PolyQ rem = canonical(f);
    std::vector<size_t> idx(lifted.size());
    for (size_t i = 0; i < idx.size(); i++) idx[i] = i;
    size_t k = 1;
    while (2 * k <= idx.size()) {
        bool found = false;
        std::vector<size_t> comb(k);
        for (size_t i = 0; i < k; i++) comb[i] = i;
        while (true) {
            BPoly cand;
            cand.c = {lcs};  // leading coefficient series of the remaining poly... use original lc
            for (size_t i = 0; i < k; i++) cand = bmul(cand, lifted[idx[comb[i]]], N);
            // convert to polynomial in (x, y)
            PolyQ candp;
            PolyQ xv = PolyQ::variable(x, Rational(1));
            for (size_t i = 0; i < cand.c.size(); i++) {
                candp += series_to_poly(cand.c[i], y, y0) * xv.pow(static_cast<long>(i));
            }
            candp = primitive_part_in(candp, {x});
            candp = canonical(candp);
            auto q = rem.divide_exact(candp);
            if (candp.degree(x) >= 1 && q.has_value()) {
                out.push_back(candp);
                rem = *q;
                std::vector<size_t> keep;
                for (size_t i = 0, j = 0; i < idx.size(); i++) {
                    if (j < k && comb[j] == i) { j++; continue; }
                    keep.push_back(idx[i]);
                }
                idx = keep;
                found = true;
                break;
            }
            long pos = static_cast<long>(k) - 1;
            while (pos >= 0 && comb[pos] == idx.size() - k + pos) pos--;
            if (pos < 0) break;
            comb[pos]++;
            for (size_t i = pos + 1; i < k; i++) comb[i] = comb[i - 1] + 1;
        }
        if (!found) k++;
    }
    if (rem.degree(x) >= 1) out.push_back(canonical(rem));
    return out;
}

void factor_bivariate_into(const PolyQ& f, VarId x, VarId y,
                           std::map<std::string, std::pair<PolyQ, int>>& acc);

void add_factor(std::map<std::string, std::pair<PolyQ, int>>& acc, const PolyQ& f, int mult) {
    auto key = f.str();
    auto it = acc.find(key);
    if (it == acc.end()) acc[key] = {f, mult};
    else it->second.second += mult;
}

void factor_bivariate_into(const PolyQ& f, VarId x, VarId y,
                           std::map<std::string, std::pair<PolyQ, int>>& acc) {
    if (f.is_constant()) return;
    if (f.degree(x) == 0) {
        factor_univariate_into(f, y, acc);
        return;
    }
    PolyQ content = content_in(f, {x});
    PolyQ pp = *f.divide_exact(content);
    if (!content.is_constant()) factor_univariate_into(content, y, acc);
    if (pp.degree(x) < 1) return;
    // squarefree split w.r.t. x
    PolyQ g = mgcd(pp, pp.derivative(x));
    if (g.degree(x) >= 1 || g.degree(y) >= 1) {
        factor_bivariate_into(canonical(g), x, y, acc);
        factor_bivariate_into(canonical(*pp.divide_exact(g)), x, y, acc);
        return;
    }
    if (pp.degree(y) == 0) {
        factor_univariate_into(pp, x, acc);
        return;
    }
    for (auto& fac : factor_bivariate_squarefree(canonical(pp), x, y)) {
        add_factor(acc, fac, 1);
    }
}

} // namespace

std::vector<std::pair<PolyQ, int>> squarefree_decompose(const PolyQ& f, VarId x) {
    std::vector<std::pair<PolyQ, int>> out;
    if (f.degree(x) < 1) return out;
    PolyQ a = canonical(f);
    PolyQ g = mgcd(a, a.derivative(x));
    PolyQ c = *a.divide_exact(g);
    PolyQ d = *a.derivative(x).divide_exact(g) - c.derivative(x);
    int i = 1;
    while (c.degree(x) >= 1) {
        PolyQ ai = mgcd(c, d);
        if (ai.degree(x) >= 1) out.emplace_back(ai, i);
        c = *c.divide_exact(ai);
        d = *d.divide_exact(ai) - c.derivative(x);
        i++;
    }
    return out;
}

Factorization factor(const PolyQ& f) {
    if (f.is_zero()) throw std::invalid_argument("factor: zero polynomial");
    std::vector<VarId> vs;
    for (VarId v : f.vars())
        if (f.degree(v) > 0) vs.push_back(v);
    if (vs.size() > 2)
        throw std::invalid_argument("factor: more than two variables is unsupported");

    Factorization out;
    std::map<std::string, std::pair<PolyQ, int>> acc;
    if (vs.empty()) {
        out.unit = f.constant_value();
        return out;
    }
    if (vs.size() == 1) {
        factor_univariate_into(f, vs[0], acc);
    } else {
        VarId x = vs[0], y = vs[1];
        if (f.degree(y) > f.degree(x)) std::swap(x, y);
        factor_bivariate_into(f, x, y, acc);
    }
    PolyQ prod = poly_const(1);
    for (auto& [k, pm] : acc) {
        out.factors.push_back(pm);
        prod *= pm.first.pow(pm.second);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        return a.first.before(b.first);
    });
    auto q = f.divide_exact(prod);
    if (!q || !q->is_constant())
        throw std::logic_error("factor: internal verification failed");
    out.unit = q->constant_value();
    return out;
}

bool is_irreducible(const PolyQ& f) {
    if (f.is_constant()) return false;
    Factorization fz = factor(f);
    return fz.factors.size() == 1 && fz.factors[0].second == 1 &&
           canonical(f) == fz.factors[0].first;
}

} // namespace surfstrat
