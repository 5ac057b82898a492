#pragma once

#include "surfstrat/poly.hpp"

#include <cstdint>
#include <vector>

namespace surfstrat::testutil {

struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

/// Small random polynomial: up to `max_terms` terms, degrees <= max_deg per
/// variable, integer coefficients in [-9, 9].
inline PolyQ random_poly(Rng& rng, const std::vector<VarId>& vars, int max_terms, int max_deg,
                         bool nonzero = false) {
    PolyQ r;
    int terms = static_cast<int>(rng.range(nonzero ? 1 : 0, max_terms));
    for (int i = 0; i < terms; i++) {
        long c = rng.range(-9, 9);
        if (c == 0) c = 1;
        PolyQ t = PolyQ::constant(Rational(c));
        for (VarId v : vars) {
            long e = rng.range(0, max_deg);
            if (e > 0) t *= PolyQ::variable(v, Rational(1)).pow(e);
        }
        r += t;
    }
    if (nonzero && r.is_zero()) r = poly_const(1);
    return r;
}

/// Sylvester-matrix resultant by cofactor expansion; test oracle for the
/// subresultant implementation (small degrees only).
inline PolyQ sylvester_resultant(const PolyQ& f, const PolyQ& g, VarId x) {
    long m = f.degree(x), n = g.degree(x);
    if (m <= 0 && n <= 0) return poly_const(1);
    auto fc = f.univ_coeffs(x);
    auto gc = g.univ_coeffs(x);
    size_t N = static_cast<size_t>(m + n);
    std::vector<std::vector<PolyQ>> M(N, std::vector<PolyQ>(N));
    for (long r = 0; r < n; r++)
        for (long k = 0; k <= m; k++) M[r][r + (m - k)] = fc[k];
    for (long r = 0; r < m; r++)
        for (long k = 0; k <= n; k++) M[n + r][r + (n - k)] = gc[k];

    // cofactor expansion
    std::vector<size_t> cols(N);
    for (size_t i = 0; i < N; i++) cols[i] = i;
    struct Det {
        const std::vector<std::vector<PolyQ>>& M;
        PolyQ run(std::vector<size_t> cols, size_t row) {
            if (cols.empty()) return poly_const(1);
            PolyQ acc;
            for (size_t j = 0; j < cols.size(); j++) {
                const PolyQ& a = M[row][cols[j]];
                if (a.is_zero()) continue;
                std::vector<size_t> rest;
                for (size_t k = 0; k < cols.size(); k++)
                    if (k != j) rest.push_back(cols[k]);
                PolyQ sub = run(rest, row + 1);
                PolyQ term = a * sub;
                if (j % 2 == 1) term = -term;
                acc += term;
            }
            return acc;
        }
    } det{M};
    return det.run(cols, 0);
}

} // namespace surfstrat::testutil
