#include "surfstrat/param.hpp"

#include "surfstrat/parse.hpp"
#include "surfstrat/solve0.hpp"

#include <sstream>

namespace surfstrat {

bool ClosedSet::known_empty() const {
    if (whole_plane) return false;
    for (auto& g : gens)
        if (!g.is_zero() && g.is_constant()) return true;
    return false;
}

std::string AlgPoint::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < coords.size(); i++) {
        if (i) os << (projective ? " : " : ", ");
        os << coords[i].str();
    }
    os << ")";
    if (field) {
        os << " with " << field->symbol() << ": ";
        os << from_upoly(field->minpoly(), var("r")).str() << " = 0";
    }
    return os.str();
}

NFElem point_eval(const AlgPoint& a, const PolyQ& f) {
    std::map<VarId, NFElem> vals;
    VarId tv = var("tt"), sv = var("ss");
    // points live in the parameter plane; accept (t,s) or (tt,ss) polynomials
    if (f.has_var(var("t")) || f.has_var(var("s"))) {
        tv = var("t");
        sv = var("s");
    }
    vals[tv] = a.coords[0];
    vals[sv] = a.coords[1];
    MPoly<NFElem> lifted = a.field
        ? lift_nf(f, a.field)
        : f.map_coeffs<NFElem>([](const Rational& r) {
              return NFElem(nullptr, UPoly<Rational>::constant(r));
          });
    MPoly<NFElem> ev = lifted.eval_partial(vals);
    if (ev.is_zero()) return NFElem();
    if (!ev.is_constant()) throw InternalError("point_eval: unbound variables remain");
    return ev.constant_value();
}

bool point_on(const AlgPoint& a, const PolyQ& f) { return point_eval(a, f).is_zero(); }

bool point_on(const AlgPoint& a, const ClosedSet& cs) {
    if (cs.whole_plane) return true;
    for (auto& g : cs.gens)
        if (!point_on(a, g)) return false;
    return true;
}

namespace {

PolyQ nf_rep_poly(const NFElem& e, VarId rv) {
    PolyQ out;
    PolyQ x = PolyQ::variable(rv, Rational(1));
    for (size_t i = 0; i < e.rep().c.size(); i++) {
        if (!e.rep().c[i].is_zero())
            out += PolyQ::constant(e.rep().c[i]) * x.pow(static_cast<long>(i));
    }
    return out;
}

/// All points of class b lie in the point set of class a.
bool class_contains(const AlgPoint& a, const AlgPoint& b) {
    VarId rv = var("r"), tvv = var("t"), svv = var("s"), wv = var("w");
    PolyQ tpol = PolyQ::variable(tvv, Rational(1));
    PolyQ spol = PolyQ::variable(svv, Rational(1));
    PolyQ wpol = PolyQ::variable(wv, Rational(1));
    std::vector<PolyQ> tests;
    if (a.is_rational()) {
        tests.push_back(tpol - nf_rep_poly(a.coords[0], rv));
        tests.push_back(spol - nf_rep_poly(a.coords[1], rv));
    } else {
        PolyQ m = from_upoly(a.field->minpoly(), rv);
        PolyQ lin = (tpol - nf_rep_poly(a.coords[0], rv)) +
                    wpol * (spol - nf_rep_poly(a.coords[1], rv));
        PolyQ J = resultant(m, lin, rv);
        for (auto& [e, coeff] : J.coefficients_wrt({wv})) {
            (void)e;
            tests.push_back(coeff);
        }
    }
    for (auto& f : tests) {
        if (!point_eval(b, f).is_zero()) return false;
    }
    return true;
}

} // namespace

bool same_point(const AlgPoint& a, const AlgPoint& b) {
    if (a.projective != b.projective) return false;
    if (a.coords.size() != b.coords.size()) return false;
    if (a.is_rational() != b.is_rational()) return false;
    if (a.is_rational()) {
        for (size_t i = 0; i < a.coords.size(); i++)
            if (a.coords[i] != b.coords[i]) return false;
        return true;
    }
    if (a.field->degree() != b.field->degree()) return false;
    // fast path: identical representations
    if (a.field->minpoly() == b.field->minpoly()) {
        bool same = true;
        for (size_t i = 0; i < a.coords.size(); i++)
            if (a.coords[i] != b.coords[i]) same = false;
        if (same) return true;
    }
    if (a.projective) {
        // normalized projective forms: (t:s:1) handled via the affine pair,
        // (1:lambda:0) via the lambda class
        bool a_inf = a.coords[2].is_zero(), b_inf = b.coords[2].is_zero();
        if (a_inf != b_inf) return false;
        AlgPoint aa = a, bb = b;
        aa.projective = bb.projective = false;
        if (!a_inf) {
            aa.coords = {a.coords[0], a.coords[1]};
            bb.coords = {b.coords[0], b.coords[1]};
        } else {
            aa.coords = {a.coords[1], NFElem()};
            bb.coords = {b.coords[1], NFElem()};
        }
        return class_contains(aa, bb) && class_contains(bb, aa);
    }
    return class_contains(a, b) && class_contains(b, a);
}

std::variant<ProjParam, PlaneReport> validate(const std::array<PolyQ, 4>& polys_in) {
    std::array<PolyQ, 4> p = polys_in;
    std::vector<std::string> warnings;
    std::vector<VarId> ok_vars{var("t"), var("s"), var("v")};
    for (int i = 0; i < 4; i++) {
        if (p[i].is_zero())
            throw ValidationError("p" + std::to_string(i + 1) + " is zero");
        for (VarId v : p[i].vars()) {
            if (std::find(ok_vars.begin(), ok_vars.end(), v) == ok_vars.end())
                throw ValidationError("p" + std::to_string(i + 1) +
                                      " uses a variable outside {t,s,v}");
        }
        long d = -1;
        for (auto& [e, c] : p[i].terms()) {
            long td = 0;
            for (int x : e) td += x;
            if (d < 0) d = td;
            else if (d != td)
                throw ValidationError("p" + std::to_string(i + 1) + " is not homogeneous");
        }
    }
    PolyQ g = mgcd_many(std::vector<PolyQ>{p[0], p[1], p[2], p[3]});
    if (!g.is_constant()) {
        for (auto& q : p) q = *q.divide_exact(g);
        warnings.push_back("common factor " + g.str() + " divided out of p1..p4");
    }
    long gamma = p[0].total_degree();
    for (int i = 1; i < 4; i++) {
        if (p[i].total_degree() != gamma)
            throw ValidationError("components have mixed degrees");
    }
    for (int i = 0; i < 4; i++) {
        for (int j = i + 1; j < 4; j++) {
            if (canonical(p[i]) == canonical(p[j])) {
                Rational li = FieldTraits<Rational>::canonical_unit(p[i]);
                Rational lj = FieldTraits<Rational>::canonical_unit(p[j]);
                return PlaneReport{i + 1, j + 1, li / lj};
            }
        }
    }
    ProjParam P;
    P.p = p;
    P.gamma = gamma;
    P.warnings = std::move(warnings);
    return P;
}

std::array<PolyQ, 4> parse_param_file(const std::string& text) {
    std::array<PolyQ, 4> p;
    std::array<bool, 4> seen{false, false, false, false};
    std::istringstream in(text);
    std::string line;
    std::set<std::string> allowed{"t", "s", "v"};
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto notspace = line.find_first_not_of(" \t\r\n");
        if (notspace == std::string::npos) continue;
        std::string squeezed = line;
        squeezed.erase(remove_if(squeezed.begin(), squeezed.end(), ::isspace), squeezed.end());
        if (squeezed.rfind("field:", 0) == 0) {
            if (squeezed != "field:Q")
                throw ValidationError("line " + std::to_string(lineno) +
                                      ": unsupported field declaration '" + squeezed.substr(6) +
                                      "'");
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError("line " + std::to_string(lineno) + ": expected 'name = poly'");
        std::string name = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        name.erase(remove_if(name.begin(), name.end(), ::isspace), name.end());
        if (name.size() == 2 && name[0] == 'p' && name[1] >= '1' && name[1] <= '4') {
            int idx = name[1] - '1';
            try {
                p[idx] = parse_poly(value, allowed);
            } catch (const ParseError& e) {
                throw ValidationError("line " + std::to_string(lineno) + ": " + e.what());
            }
            seen[idx] = true;
        } else if (name.rfind("field", 0) == 0) {
            std::string f = value;
            f.erase(remove_if(f.begin(), f.end(), ::isspace), f.end());
            if (f != "Q")
                throw ValidationError("line " + std::to_string(lineno) +
                                      ": unsupported field declaration '" + f + "'");
        } else {
            throw ValidationError("line " + std::to_string(lineno) + ": unknown entry '" + name +
                                  "'");
        }
    }
    for (int i = 0; i < 4; i++) {
        if (!seen[i]) throw ValidationError("missing p" + std::to_string(i + 1));
    }
    return p;
}

PolyQ p_tilde(const ProjParam& P, int i) {
    return P.at(i).subst(var("v"), poly_const(1));
}

AffineParam dehomogenize(const ProjParam& P, int i, Flavor flavor) {
    auto chartify = [&](const PolyQ& f) -> PolyQ {
        switch (flavor) {
            case Flavor::affine:
                return f.subst(var("v"), poly_const(1));
            case Flavor::tilde:
                // (t~, v~) = (t/s, v/s): set s = 1, rename v -> s
                return f.subst(var("s"), poly_const(1)).rename_var(var("v"), var("s"));
            case Flavor::hat:
                // (s^, v^) = (s/t, v/t): set t = 1, rename s -> t, v -> s
                return f.subst(var("t"), poly_const(1))
                    .rename_var(var("s"), var("t"))
                    .rename_var(var("v"), var("s"));
        }
        return f;
    };
    PolyQ den = chartify(P.at(i));
    if (den.is_zero())
        throw ValidationError("dehomogenization denominator p" + std::to_string(i) +
                              " vanishes identically on this chart");
    AffineParam A;
    A.origin = i;
    A.flavor = flavor;
    int slot = 0;
    for (int k = 1; k <= 4; k++) {
        if (k == i) continue;
        A.comp[slot] = RatFunc(chartify(P.at(k)), den);
        A.num_index[slot] = k;
        slot++;
    }
    return A;
}

std::array<ClosedSet, 4> denominator_loci(const ProjParam& P) {
    std::array<ClosedSet, 4> out;
    for (int i = 1; i <= 4; i++) {
        AffineParam A = dehomogenize(P, i, Flavor::affine);
        PolyQ l = poly_const(1);
        for (auto& c : A.comp) {
            PolyQ g = mgcd(l, c.den());
            l = *(l * c.den()).divide_exact(g);
        }
        l = canonical(l);
        // the lcm of the reduced denominators is the dehomogenized component
        PolyQ expect = canonical(p_tilde(P, i));
        if (l != expect)
            throw InternalError("denominator locus mismatch for Delta_" + std::to_string(i));
        out[static_cast<size_t>(i - 1)].gens = {l};
    }
    return out;
}

BasePoints base_points(const ProjParam& P) {
    BasePoints out;
    std::vector<PolyQ> gens;
    for (int i = 1; i <= 4; i++) gens.push_back(p_tilde(P, i));
    auto pts = solve_points(gens, var("t"), var("s"));
    for (auto& a : pts) {
        AlgPoint p = a;
        p.projective = true;
        NFElem one = p.field ? NFElem::from_base(p.field, Rational(1))
                             : NFElem(nullptr, UPoly<Rational>::constant(Rational(1)));
        p.coords.push_back(one);
        out.affine.push_back(std::move(p));
    }
    // at infinity: common zeros of p_i(1, lambda, 0) plus the check at (0:1:0)
    VarId lam = var("lambda");
    PolyQ g;
    bool first = true;
    for (int i = 1; i <= 4; i++) {
        PolyQ q = P.at(i)
                      .subst(var("t"), poly_const(1))
                      .subst(var("v"), poly_const(0))
                      .rename_var(var("s"), lam);
        g = first ? canonical(q) : mgcd(g, q);
        first = false;
        if (!g.is_zero() && g.is_constant()) break;
    }
    if (!g.is_zero() && !g.is_constant()) {
        for (auto& root : univariate_roots(g, lam)) {
            AlgPoint p;
            p.field = root.field;
            p.projective = true;
            NFElem one = p.field ? NFElem::from_base(p.field, Rational(1))
                                 : NFElem(nullptr, UPoly<Rational>::constant(Rational(1)));
            p.coords = {one, root.value, NFElem()};
            out.infinity.push_back(std::move(p));
        }
    }
    bool zero_one_zero_base = true;
    for (int i = 1; i <= 4; i++) {
        Rational val = P.at(i).eval_all(
            {{var("t"), Rational(0)}, {var("s"), Rational(1)}, {var("v"), Rational(0)}});
        if (!val.is_zero()) zero_one_zero_base = false;
    }
    if (zero_one_zero_base) {
        AlgPoint p;
        p.projective = true;
        NFElem one(nullptr, UPoly<Rational>::constant(Rational(1)));
        p.coords = {NFElem(), one, NFElem()};
        out.infinity.push_back(std::move(p));
    }
    return out;
}

} // namespace surfstrat
