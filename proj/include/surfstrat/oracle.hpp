#pragma once

#include "surfstrat/param.hpp"

namespace surfstrat {

struct OracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ImplicitSurface {
    PolyQ f;  // defining polynomial in x,y,z, irreducible, canonical
    PolyQ F;  // homogenization in x,y,z,w
    long degree() const { return f.total_degree(); }
};

/// Test-only implicitization: smallest-degree exact linear relation among the
/// monomials in the parametrization's components. Independent of the
/// resultant machinery the production path uses. Guarded to small instances;
/// throws OracleError when inconclusive.
ImplicitSurface implicitize(const AffineParam& Q);

/// Multiplicity of A on the surface: lowest total degree of f translated so
/// that A sits at the origin. Coordinates may live in a number field.
long mult_translate(const ImplicitSurface& S, const std::vector<NFElem>& A, const NFPtr& field);
long mult_translate(const ImplicitSurface& S, const std::array<Rational, 3>& A);

} // namespace surfstrat
