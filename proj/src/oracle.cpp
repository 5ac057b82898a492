#include "surfstrat/oracle.hpp"

#include <algorithm>

namespace surfstrat {

namespace {

constexpr long kDegreeCap = 12;
constexpr long kInputDegreeCap = 8;

std::vector<std::array<int, 3>> monomials_up_to(long d) {
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a <= d; a++)
        for (int b = 0; a + b <= d; b++)
            for (int c = 0; a + b + c <= d; c++) out.push_back({a, b, c});
    return out;
}

/// nullspace of the exact linear system rows x cols; returns basis vectors
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> M, size_t cols) {
    std::vector<long> pivot_of_col(cols, -1);
    size_t row = 0;
    for (size_t col = 0; col < cols && row < M.size(); col++) {
        size_t sel = row;
        while (sel < M.size() && M[sel][col].is_zero()) sel++;
        if (sel == M.size()) continue;
        std::swap(M[row], M[sel]);
        Rational inv = M[row][col].inv();
        for (size_t j = col; j < cols; j++) M[row][j] = M[row][j] * inv;
        for (size_t i = 0; i < M.size(); i++) {
            if (i == row || M[i][col].is_zero()) continue;
            Rational f = M[i][col];
            for (size_t j = col; j < cols; j++) M[i][j] = M[i][j] - f * M[row][j];
        }
        pivot_of_col[col] = static_cast<long>(row);
        row++;
    }
    std::vector<std::vector<Rational>> basis;
    for (size_t free_col = 0; free_col < cols; free_col++) {
        if (pivot_of_col[free_col] >= 0) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free_col] = Rational(1);
        for (size_t col = 0; col < cols; col++) {
            if (pivot_of_col[col] >= 0) {
                v[col] = -M[static_cast<size_t>(pivot_of_col[col])][free_col];
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

ImplicitSurface implicitize(const AffineParam& Q) {
    for (auto& c : Q.comp) {
        if (c.num().total_degree() > kInputDegreeCap || c.den().total_degree() > kInputDegreeCap)
            throw OracleError("oracle inconclusive: input degree cap exceeded");
    }
    VarId xv = var("x"), yv = var("y"), zv = var("z");
    const PolyQ N1 = Q.comp[0].num(), D1 = Q.comp[0].den();
    const PolyQ N2 = Q.comp[1].num(), D2 = Q.comp[1].den();
    const PolyQ N3 = Q.comp[2].num(), D3 = Q.comp[2].den();

    for (long d = 1; d <= kDegreeCap; d++) {
        auto monos = monomials_up_to(d);
        // powers
        std::vector<PolyQ> n1(d + 1), d1(d + 1), n2(d + 1), d2(d + 1), n3(d + 1), d3(d + 1);
        for (long k = 0; k <= d; k++) {
            n1[k] = N1.pow(k); d1[k] = D1.pow(k);
            n2[k] = N2.pow(k); d2[k] = D2.pow(k);
            n3[k] = N3.pow(k); d3[k] = D3.pow(k);
        }
        // column polynomials in (t, s)
        std::map<std::pair<std::vector<VarId>, std::vector<int>>, size_t> row_index;
        std::vector<std::vector<Rational>> M;
        auto row_of = [&](const std::vector<VarId>& vs, const std::vector<int>& e) -> size_t {
            auto key = std::make_pair(vs, e);
            auto it = row_index.find(key);
            if (it != row_index.end()) return it->second;
            size_t idx = M.size();
            row_index[key] = idx;
            M.emplace_back(monos.size(), Rational(0));
            return idx;
        };
        for (size_t j = 0; j < monos.size(); j++) {
            auto [a, b, c] = monos[j];
            PolyQ term = n1[a] * d1[d - a] * n2[b] * d2[d - b] * n3[c] * d3[d - c];
            for (auto& [e, coeff] : term.terms()) {
                std::vector<VarId> vs;
                std::vector<int> ee;
                for (size_t i = 0; i < term.vars().size(); i++) {
                    if (e[i] != 0) {
                        vs.push_back(term.vars()[i]);
                        ee.push_back(e[i]);
                    }
                }
                M[row_of(vs, ee)][j] = coeff;
            }
        }
        auto basis = nullspace(std::move(M), monos.size());
        if (basis.empty()) continue;
        if (basis.size() > 1) throw OracleError("oracle inconclusive: ambiguous minimal relation");
        PolyQ f;
        PolyQ xp = PolyQ::variable(xv, Rational(1));
        PolyQ yp = PolyQ::variable(yv, Rational(1));
        PolyQ zp = PolyQ::variable(zv, Rational(1));
        for (size_t j = 0; j < monos.size(); j++) {
            if (basis[0][j].is_zero()) continue;
            auto [a, b, c] = monos[j];
            f += PolyQ::constant(basis[0][j]) * xp.pow(a) * yp.pow(b) * zp.pow(c);
        }
        f = canonical(f);
        // exact vanishing check: f(Q1,Q2,Q3) == 0 after clearing denominators
        {
            PolyQ acc;
            for (auto& [e, coeff] : f.terms()) {
                int a = 0, b = 0, c = 0;
                for (size_t i = 0; i < f.vars().size(); i++) {
                    if (f.vars()[i] == xv) a = e[i];
                    if (f.vars()[i] == yv) b = e[i];
                    if (f.vars()[i] == zv) c = e[i];
                }
                long D = f.total_degree();
                acc += PolyQ::constant(coeff) * n1[a] * d1[D - a] * n2[b] * d2[D - b] * n3[c] *
                       d3[D - c];
            }
            if (!acc.is_zero()) throw OracleError("oracle internal: relation fails to vanish");
        }
        ImplicitSurface S;
        S.f = f;
        long D = f.total_degree();
        PolyQ F;
        PolyQ wp = PolyQ::variable(var("w"), Rational(1));
        for (auto& [e, coeff] : f.terms()) {
            long td = 0;
            for (int x : e) td += x;
            std::vector<VarId> vs;
            std::vector<int> ee;
            for (size_t i = 0; i < f.vars().size(); i++) {
                if (e[i] != 0) {
                    vs.push_back(f.vars()[i]);
                    ee.push_back(e[i]);
                }
            }
            F += MPoly<Rational>::monomial(vs, ee, coeff) * wp.pow(D - td);
        }
        S.F = F;
        return S;
    }
    throw OracleError("oracle inconclusive: no relation up to the degree cap");
}

long mult_translate(const ImplicitSurface& S, const std::vector<NFElem>& A, const NFPtr& field) {
    MPoly<NFElem> f = field ? lift_nf(S.f, field)
                            : S.f.map_coeffs<NFElem>([](const Rational& r) {
                                  return NFElem(nullptr, UPoly<Rational>::constant(r));
                              });
    VarId vs[3] = {var("x"), var("y"), var("z")};
    NFElem one = field ? NFElem::from_base(field, Rational(1))
                       : NFElem(nullptr, UPoly<Rational>::constant(Rational(1)));
    for (int i = 0; i < 3; i++) {
        MPoly<NFElem> shift = MPoly<NFElem>::variable(vs[i], one) +
                              MPoly<NFElem>::constant(A[static_cast<size_t>(i)]);
        f = f.subst(vs[i], shift);
    }
    if (f.is_zero()) throw OracleError("mult_translate: zero polynomial");
    long best = -1;
    for (auto& [e, c] : f.terms()) {
        long td = 0;
        for (int x : e) td += x;
        if (best < 0 || td < best) best = td;
    }
    return best;
}

long mult_translate(const ImplicitSurface& S, const std::array<Rational, 3>& A) {
    std::vector<NFElem> coords;
    for (auto& a : A) coords.push_back(NFElem(nullptr, UPoly<Rational>::constant(a)));
    return mult_translate(S, coords, nullptr);
}

} // namespace surfstrat
