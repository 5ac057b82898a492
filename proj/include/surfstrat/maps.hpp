#pragma once

#include "surfstrat/param.hpp"

namespace surfstrat {

/// Record of the normalizations applied before the resultant computations:
/// sigma_c : (t,s) -> (t + c*s, s), plus the affine coordinate permutation
/// chosen when the (y,z)-Jacobian degenerates. perm[k] = original slot of
/// the k-th working coordinate.
struct ParamChange {
    long shift_c = 0;
    std::array<int, 3> perm{0, 1, 2};
};

/// Global per-surface data shared by all multiplicity computations:
/// n2 = deg of the map, n1 = deg Phi23(A0), deg_z = n1/n2, A0 off-surface.
/// n1 and n2 are chart-independent, so one cache serves every chart.
struct SurfaceCache {
    long n2 = 0;
    long n1 = 0;
    long deg_z = 0;
    std::array<Rational, 3> A0{Rational(0), Rational(0), Rational(0)};
    long partial_deg = 0;     // partial implicit degree w.r.t. the perm[0]-th coordinate
    ParamChange change;       // produced while computing n2
    long offpoint_pairs = 0;  // how many (lambda,mu) pairs were tried
};

/// Apply sigma_c to the parameter plane of Q.
AffineParam shift_parameters(const AffineParam& Q, long c);

/// Smallest c >= 0 such that after sigma_c none of the projective closures of
/// the numerators/denominators of Q passes through (0:1:0).
long find_shift(const AffineParam& Q);

/// Degree of the rational map induced by Q (index of improperness).
long map_degree(const AffineParam& Q, ParamChange* rec = nullptr);

/// Partial degree of the implicit equation w.r.t. the first
/// (possibly permuted) affine coordinate.
long partial_degree(const AffineParam& Q, ParamChange* rec = nullptr);

/// A verified point off the surface, all components nonzero.
std::array<Rational, 3> off_surface_point(const AffineParam& Q, long* pairs_tried = nullptr);

/// The degree data and the off-surface point, computed once per surface.
SurfaceCache build_cache(const AffineParam& Q);

/// Result of the g^{Q,A} / Phi23(A) analysis at one point.
struct PointAnalysis {
    bool g_is_one = true;
    long m1 = -1;        // deg Phi23(A), valid when g_is_one
    PolyQ g;             // the gcd K when g != 1 (rational-coefficient rep)
};

/// g^{Q,A} and deg Phi23(A) at a rational point (used for A0 and rational centers).
PointAnalysis analyze_point(const AffineParam& Q, const std::array<Rational, 3>& A);

/// The same analysis at a point with number-field coordinates.
PointAnalysis analyze_point_nf(const AffineParam& Q, const std::vector<NFElem>& A,
                               const NFPtr& field);

/// g^{Q,A} as a polynomial (1 when trivial); used for cone detection.
PolyQ g_poly(const AffineParam& Q, const std::array<Rational, 3>& A);

/// deg Phi23(A) for a point with g^{Q,A} = 1.
long phi23_degree(const AffineParam& Q, const std::array<Rational, 3>& A);

/// Multiplicity of A on the surface. `cone` reports whether g^{Q,A} != 1.
long multiplicity_at(const AffineParam& Q, const std::array<Rational, 3>& A,
                     const SurfaceCache& cache, bool* cone = nullptr);
long multiplicity_at_nf(const AffineParam& Q, const std::vector<NFElem>& A, const NFPtr& field,
                        const SurfaceCache& cache, bool* cone = nullptr);

/// Multiplicity of the parametrized point at parameter (t0,s0) (must be off
/// the chart's denominator locus).
long multiplicity_at_param(const AffineParam& Q, const Rational& t0, const Rational& s0,
                           const SurfaceCache& cache, bool* cone = nullptr);

/// Re-embed the chart-`from` off-surface point A0 into chart `to`
/// (all components of A0 nonzero, so every re-embedding is defined).
std::array<Rational, 3> reembed_offpoint(const std::array<Rational, 3>& A0, int from, int to);

} // namespace surfstrat
