#pragma once

#include "surfstrat/param.hpp"

namespace surfstrat {

/// Decomposition of the zero set of a finite polynomial system in (tvar, svar):
/// irreducible curve components plus the isolated points off those curves.
struct SystemSolution {
    std::vector<PolyQ> curves;     // irreducible, canonical
    std::vector<AlgPoint> points;  // affine pairs, deduplicated
};

/// Solve a system of nonzero polynomials in two variables exactly.
/// Points come back as Galois classes over Q[r]/(m) via a separating linear
/// form u = tvar + c*svar (smallest working c >= 0).
SystemSolution solve_system(const std::vector<PolyQ>& gens, VarId tvar, VarId svar);

/// Zero-dimensional solving only; throws InternalError if the system has a
/// curve component.
std::vector<AlgPoint> solve_points(const std::vector<PolyQ>& gens, VarId tvar, VarId svar);

/// Roots of a univariate polynomial as points on a line: returns one AlgPoint
/// per irreducible factor, coordinate in Q[r]/(m).
struct UnivRoot {
    NFPtr field;    // null for a rational root
    NFElem value;   // the root
    PolyQ minpoly;  // canonical irreducible factor (in the input variable)
};
std::vector<UnivRoot> univariate_roots(const PolyQ& f, VarId x);

} // namespace surfstrat
