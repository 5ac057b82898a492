#pragma once

#include "surfstrat/polyops.hpp"

#include <utility>
#include <vector>

namespace surfstrat {

struct Factorization {
    Rational unit;                                // f = unit * prod factors^mult
    std::vector<std::pair<PolyQ, int>> factors;   // canonical irreducibles, sorted
};

/// Factor a nonzero polynomial in at most two variables into irreducibles
/// over Q. Factors come back canonical (integer-primitive, positive leading
/// coefficient) in a deterministic order. Three or more variables are
/// rejected with std::invalid_argument.
Factorization factor(const PolyQ& f);

/// Squarefree decomposition over Q w.r.t. one variable (Yun):
/// f = unit * prod out[i].first^(out[i].second).
std::vector<std::pair<PolyQ, int>> squarefree_decompose(const PolyQ& f, VarId x);

/// True iff f (in <= 2 variables, positive degree) is irreducible over Q.
bool is_irreducible(const PolyQ& f);

} // namespace surfstrat
