#pragma once

#include "surfstrat/rational.hpp"
#include "surfstrat/ring.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace surfstrat {

/// Graded lexicographic order on exponent vectors. Total degree first; ties
/// broken lexicographically with the first-listed variable most significant
/// (vars are stored in increasing id order, and lower ids rank higher), so
/// the leading monomial of t - s is t.
struct GrlexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        for (size_t i = 0; i < a.size(); i++) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

/// Sparse multivariate polynomial over an exact field K.
/// Terms map exponent vectors (aligned with vars()) to nonzero coefficients.
/// The variable list is always trimmed to the variables actually present,
/// so two equal polynomials compare equal structurally.
template <class K>
class MPoly {
public:
    using Exp = std::vector<int>;
    using TermMap = std::map<Exp, K, GrlexLess>;

    MPoly() = default;

    static MPoly zero() { return MPoly(); }

    static MPoly constant(const K& c) {
        MPoly p;
        if (!c.is_zero()) p.terms_[{}] = c;
        return p;
    }

    static MPoly variable(VarId v, const K& one) {
        MPoly p;
        p.vars_ = {v};
        p.terms_[{1}] = one;
        return p;
    }

    static MPoly monomial(std::vector<VarId> vars, Exp exp, const K& c) {
        MPoly p;
        if (c.is_zero()) return p;
        p.vars_ = std::move(vars);
        p.terms_[std::move(exp)] = c;
        p.trim();
        return p;
    }

    const std::vector<VarId>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_degree() == 0); }

    K constant_value() const {
        if (is_zero()) return K();
        assert(is_constant());
        return terms_.begin()->second;
    }

    size_t term_count() const { return terms_.size(); }

    bool has_var(VarId v) const {
        return std::find(vars_.begin(), vars_.end(), v) != vars_.end();
    }

    long total_degree() const {
        long d = -1;
        for (auto& [e, c] : terms_) {
            long t = 0;
            for (int x : e) t += x;
            d = std::max(d, t);
        }
        return d;
    }

    long degree(VarId v) const {
        int idx = var_index(v);
        if (idx < 0) return is_zero() ? -1 : 0;
        long d = -1;
        for (auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[idx]));
        return d;
    }

    long degree_in(const std::vector<VarId>& vs) const {
        if (is_zero()) return -1;
        std::vector<int> idx;
        for (VarId v : vs) {
            int i = var_index(v);
            if (i >= 0) idx.push_back(i);
        }
        long d = 0;
        for (auto& [e, c] : terms_) {
            long t = 0;
            for (int i : idx) t += e[i];
            d = std::max(d, t);
        }
        return d;
    }

    /// Leading coefficient in the graded-lex order (the full-term coefficient).
    const K& lc() const {
        assert(!is_zero());
        return terms_.rbegin()->second;
    }

    const Exp& lm() const {
        assert(!is_zero());
        return terms_.rbegin()->first;
    }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [e, c] : r.terms_) c = K() - c;
        return r;
    }

    MPoly operator+(const MPoly& o) const {
        MPoly a = *this, b = o;
        align(a, b);
        for (auto& [e, c] : b.terms_) {
            auto it = a.terms_.find(e);
            if (it == a.terms_.end()) {
                a.terms_.emplace(e, c);
            } else {
                it->second += c;
                if (it->second.is_zero()) a.terms_.erase(it);
            }
        }
        a.trim();
        return a;
    }

    MPoly operator-(const MPoly& o) const { return *this + (-o); }

    MPoly operator*(const MPoly& o) const {
        if (is_zero() || o.is_zero()) return MPoly();
        MPoly a = *this, b = o;
        align(a, b);
        MPoly r;
        r.vars_ = a.vars_;
        size_t n = a.vars_.size();
        for (auto& [ea, ca] : a.terms_) {
            for (auto& [eb, cb] : b.terms_) {
                K c = ca * cb;
                if (c.is_zero()) continue;
                Exp e(n);
                for (size_t i = 0; i < n; i++) e[i] = ea[i] + eb[i];
                auto it = r.terms_.find(e);
                if (it == r.terms_.end()) {
                    r.terms_.emplace(std::move(e), std::move(c));
                } else {
                    it->second += c;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        }
        r.trim();
        return r;
    }

    MPoly& operator+=(const MPoly& o) { *this = *this + o; return *this; }
    MPoly& operator-=(const MPoly& o) { *this = *this - o; return *this; }
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }

    MPoly scaled(const K& c) const {
        if (c.is_zero()) return MPoly();
        MPoly r = *this;
        for (auto& [e, k] : r.terms_) k *= c;
        return r;
    }

    MPoly pow(long e) const {
        assert(e >= 0);
        MPoly r = constant(one_like());
        MPoly base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    bool operator==(const MPoly& o) const {
        if (vars_ != o.vars_) return false;
        if (terms_.size() != o.terms_.size()) return false;
        auto it = terms_.begin(), jt = o.terms_.begin();
        for (; it != terms_.end(); ++it, ++jt) {
            if (it->first != jt->first || !(it->second == jt->second)) return false;
        }
        return true;
    }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    /// Deterministic total order on polynomials (for sorting components).
    bool before(const MPoly& o) const {
        long d = total_degree(), od = o.total_degree();
        if (d != od) return d < od;
        std::string a = str(), b = o.str();
        return a < b;
    }

    /// Coefficient of v^k, as a polynomial in the remaining variables.
    MPoly coeff_of(VarId v, int k) const {
        int idx = var_index(v);
        if (idx < 0) return k == 0 ? *this : MPoly();
        MPoly r;
        r.vars_ = vars_;
        for (auto& [e, c] : terms_) {
            if (e[idx] != k) continue;
            Exp e2 = e;
            e2[idx] = 0;
            r.terms_[e2] = c;
        }
        r.trim();
        return r;
    }

    /// Dense coefficient list w.r.t. one variable: result[i] = coeff of v^i.
    std::vector<MPoly> univ_coeffs(VarId v) const {
        long d = degree(v);
        std::vector<MPoly> out(static_cast<size_t>(std::max(d, 0L)) + 1);
        if (is_zero()) return out;
        int idx = var_index(v);
        if (idx < 0) {
            out[0] = *this;
            return out;
        }
        for (auto& o : out) o.vars_ = vars_;
        for (auto& [e, c] : terms_) {
            Exp e2 = e;
            int k = e2[idx];
            e2[idx] = 0;
            out[k].terms_[e2] = c;
        }
        for (auto& o : out) o.trim();
        return out;
    }

    static MPoly from_univ_coeffs(VarId v, const std::vector<MPoly>& cs, const K& one) {
        MPoly r;
        MPoly xv = variable(v, one);
        MPoly x_pow = constant(one);
        for (size_t i = 0; i < cs.size(); i++) {
            if (!cs[i].is_zero()) r += cs[i] * x_pow;
            if (i + 1 < cs.size()) x_pow *= xv;
        }
        return r;
    }

    /// Leading coefficient w.r.t. one variable (a polynomial in the others).
    MPoly lc_in(VarId v) const {
        long d = degree(v);
        if (d <= 0) return *this;
        return coeff_of(v, static_cast<int>(d));
    }

    MPoly derivative(VarId v) const {
        int idx = var_index(v);
        if (idx < 0) return MPoly();
        MPoly r;
        r.vars_ = vars_;
        for (auto& [e, c] : terms_) {
            if (e[idx] == 0) continue;
            Exp e2 = e;
            e2[idx] -= 1;
            K nc = c;
            K m = c;                         // build integer e[idx] in K
            nc = K();
            for (int i = 0; i < e[idx]; i++) nc += m;
            auto it = r.terms_.find(e2);
            if (it == r.terms_.end()) r.terms_.emplace(e2, nc);
            else it->second += nc;
        }
        for (auto it = r.terms_.begin(); it != r.terms_.end();) {
            if (it->second.is_zero()) it = r.terms_.erase(it);
            else ++it;
        }
        r.trim();
        return r;
    }

    /// Substitute a polynomial for a variable.
    MPoly subst(VarId v, const MPoly& value) const {
        int idx = var_index(v);
        if (idx < 0) return *this;
        // Horner over the univariate view.
        std::vector<MPoly> cs = univ_coeffs(v);
        MPoly r;
        for (size_t i = cs.size(); i-- > 0;) {
            r = r * value + cs[i];
        }
        return r;
    }

    /// Simultaneous substitution (needed for variable swaps).
    MPoly subst_many(const std::map<VarId, MPoly>& m) const {
        MPoly r;
        for (auto& [e, c] : terms_) {
            MPoly term = constant(c);
            for (size_t i = 0; i < vars_.size(); i++) {
                if (e[i] == 0) continue;
                auto it = m.find(vars_[i]);
                MPoly base = it != m.end() ? it->second : variable(vars_[i], one_like());
                term *= base.pow(e[i]);
            }
            r += term;
        }
        return r;
    }

    MPoly rename_var(VarId from, VarId to) const {
        if (!has_var(from)) return *this;
        return subst(from, variable(to, one_like()));
    }

    /// Evaluate at K values for a subset of variables.
    MPoly eval_partial(const std::map<VarId, K>& vals) const {
        MPoly r = *this;
        for (auto& [v, k] : vals) {
            if (r.has_var(v)) r = r.subst(v, constant(k));
        }
        return r;
    }

    K eval_all(const std::map<VarId, K>& vals) const {
        MPoly r = eval_partial(vals);
        if (r.is_zero()) return K();
        assert(r.is_constant());
        return r.constant_value();
    }

    /// Exact division (K is a field): returns nullopt when not divisible.
    std::optional<MPoly> divide_exact(const MPoly& g) const {
        assert(!g.is_zero());
        if (is_zero()) return MPoly();
        MPoly f = *this;
        MPoly q;
        while (!f.is_zero()) {
            MPoly a = f, b = g;
            align(a, b);
            const Exp& flm = a.terms_.rbegin()->first;
            const Exp& dlm = b.terms_.rbegin()->first;
            Exp qe(flm.size());
            for (size_t i = 0; i < flm.size(); i++) {
                qe[i] = flm[i] - dlm[i];
                if (qe[i] < 0) return std::nullopt;
            }
            K qc = a.terms_.rbegin()->second / b.terms_.rbegin()->second;
            MPoly qt = monomial(a.vars_, qe, qc);
            q += qt;
            f = f - qt * g;
        }
        return q;
    }

    bool divides(const MPoly& f) const { return f.divide_exact(*this).has_value(); }

    /// Pseudo-division w.r.t. variable v: lc(g,v)^(deg f - deg g + 1) * f = q*g + r,
    /// with deg_v r < deg_v g. Fraction free.
    static void pseudo_divrem(const MPoly& f, const MPoly& g, VarId v, MPoly& q, MPoly& r) {
        assert(!g.is_zero());
        long m = f.degree(v), n = g.degree(v);
        if (m < n) {
            q = MPoly();
            r = f;
            return;
        }
        MPoly lg = g.lc_in(v);
        MPoly red = g - lg * variable(v, f.one_like()).pow(n);
        std::vector<MPoly> fc = f.univ_coeffs(v);
        // working remainder as dense coefficient vector
        q = MPoly();
        long e = m - n + 1;
        MPoly x = variable(v, f.one_like());
        MPoly rr = f;
        while (!rr.is_zero() && rr.degree(v) >= n) {
            long d = rr.degree(v);
            MPoly lr = rr.lc_in(v);
            MPoly t = lr * x.pow(d - n);
            q = q * lg + t;
            rr = rr * lg - t * g;
            e--;
        }
        // normalize so the multiplier is exactly lg^(m-n+1)
        MPoly mult = lg.pow(std::max(e, 0L));
        q = q * mult;
        r = rr * mult;
    }

    static MPoly prem(const MPoly& f, const MPoly& g, VarId v) {
        MPoly q, r;
        pseudo_divrem(f, g, v, q, r);
        return r;
    }

    /// Map coefficients into another field.
    template <class K2, class F>
    MPoly<K2> map_coeffs(F&& fn) const {
        MPoly<K2> r;
        for (auto& [e, c] : terms_) {
            K2 c2 = fn(c);
            if (c2.is_zero()) continue;
            std::vector<VarId> vs;
            typename MPoly<K2>::Exp e2;
            for (size_t i = 0; i < vars_.size(); i++) {
                if (e[i] != 0) {
                    vs.push_back(vars_[i]);
                    e2.push_back(e[i]);
                }
            }
            r += MPoly<K2>::monomial(vs, e2, c2);
        }
        return r;
    }

    /// All monomials w.r.t. a variable subset, with their coefficient
    /// polynomials in the remaining variables. Used for contents and for
    /// guard-set extraction.
    std::vector<std::pair<Exp, MPoly>> coefficients_wrt(const std::vector<VarId>& vs) const {
        std::vector<int> idx;
        std::vector<int> sel(vars_.size(), 0);
        for (VarId v : vs) {
            int i = var_index(v);
            if (i >= 0) sel[i] = 1;
        }
        std::map<Exp, MPoly, GrlexLess> groups;
        for (auto& [e, c] : terms_) {
            Exp on(vars_.size(), 0), off = e;
            for (size_t i = 0; i < vars_.size(); i++) {
                if (sel[i]) {
                    on[i] = e[i];
                    off[i] = 0;
                }
            }
            auto& g = groups[on];
            if (g.vars_.empty() && g.terms_.empty()) g.vars_ = vars_;
            g.terms_[off] = c;
        }
        std::vector<std::pair<Exp, MPoly>> out;
        for (auto& [e, p] : groups) {
            MPoly q = p;
            q.trim();
            out.emplace_back(e, std::move(q));
        }
        return out;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        // print highest terms first
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string cs = it->second.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) os << "-", cs = cs.substr(1);
            } else {
                os << (neg ? " - " : " + ");
                if (neg) cs = cs.substr(1);
            }
            first = false;
            std::string mono;
            for (size_t i = 0; i < vars_.size(); i++) {
                if (it->first[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += var_name(vars_[i]);
                if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
            }
            if (mono.empty()) {
                os << cs;
            } else if (cs == "1") {
                os << mono;
            } else if (cs.find('/') != std::string::npos) {
                os << "(" << cs << ")*" << mono;
            } else {
                os << cs << "*" << mono;
            }
        }
        return os.str();
    }

    K one_like() const {
        for (auto& [e, c] : terms_) {
            (void)e;
            return c / c;
        }
        return K();  // only reachable for zero polys of K with default one
    }

    static void align(MPoly& a, MPoly& b) {
        if (a.vars_ == b.vars_) return;
        std::vector<VarId> u;
        std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                       std::back_inserter(u));
        a.reindex(u);
        b.reindex(u);
    }

    void trim() {
        if (terms_.empty()) {
            vars_.clear();
            return;
        }
        std::vector<int> used(vars_.size(), 0);
        for (auto& [e, c] : terms_) {
            for (size_t i = 0; i < vars_.size(); i++)
                if (e[i] != 0) used[i] = 1;
        }
        bool all = true;
        for (int u : used)
            if (!u) all = false;
        if (all) return;
        std::vector<VarId> nv;
        for (size_t i = 0; i < vars_.size(); i++)
            if (used[i]) nv.push_back(vars_[i]);
        TermMap nt;
        for (auto& [e, c] : terms_) {
            Exp e2;
            for (size_t i = 0; i < vars_.size(); i++)
                if (used[i]) e2.push_back(e[i]);
            nt.emplace(std::move(e2), c);
        }
        vars_ = std::move(nv);
        terms_ = std::move(nt);
    }

private:
    int var_index(VarId v) const {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
        if (it == vars_.end() || *it != v) return -1;
        return static_cast<int>(it - vars_.begin());
    }

    void reindex(const std::vector<VarId>& newvars) {
        if (vars_ == newvars) return;
        std::vector<int> pos(vars_.size());
        for (size_t i = 0; i < vars_.size(); i++) {
            auto it = std::lower_bound(newvars.begin(), newvars.end(), vars_[i]);
            assert(it != newvars.end() && *it == vars_[i]);
            pos[i] = static_cast<int>(it - newvars.begin());
        }
        TermMap nt;
        for (auto& [e, c] : terms_) {
            Exp e2(newvars.size(), 0);
            for (size_t i = 0; i < vars_.size(); i++) e2[pos[i]] = e[i];
            nt.emplace(std::move(e2), c);
        }
        vars_ = newvars;
        terms_ = std::move(nt);
    }

    std::vector<VarId> vars_;
    TermMap terms_;

    template <class K2>
    friend class MPoly;
};

using PolyQ = MPoly<Rational>;

inline PolyQ poly_const(long c) { return PolyQ::constant(Rational(c)); }
inline PolyQ poly_var(const std::string& name) { return PolyQ::variable(var(name), Rational(1)); }

} // namespace surfstrat
