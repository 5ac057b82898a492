#pragma once

#include "surfstrat/maps.hpp"
#include "surfstrat/solve0.hpp"

namespace surfstrat {

/// Union of irreducible pieces of a closed subset of the parameter plane:
/// curves (canonical irreducible polynomials in (tt,ss)) and isolated points.
struct VarietyDesc {
    std::vector<PolyQ> curves;
    std::vector<AlgPoint> points;

    bool empty() const { return curves.empty() && points.empty(); }
};

/// The level-1 guard sets: outside delta[4-union] every parameter off the
/// chart's denominator locus maps to a simple point.
struct GuardSets {
    std::array<VarietyDesc, 5> delta;  // Delta_0^* .. Delta_4^*
    VarietyDesc delta_star;            // the union, deduplicated

    // intermediates kept for verification
    PolyQ K_gcd;
    PolyQ upsilon1, upsilon2, frak_r;
    PolyQ a_content;
    long m1_generic = -1;
    long cardJ = 0;
    long run_shift = 0;
};

struct GenericOutcome {
    bool plane = false;
    GuardSets guards;
};

/// Generic-center run of the multiplicity method on Q with center
/// Q(tt, ss), producing the guard sets, or the plane verdict.
GenericOutcome generic_g_and_guards(const AffineParam& Q, const SurfaceCache* cache);

/// True iff the surface parametrized by Q is a plane (pipeline short-circuit).
bool is_plane_generic(const AffineParam& Q);

struct CurveVerdict {
    long generic_mult = -1;
    bool cone_locus = false;             // g != 1 along the curve
    std::vector<AlgPoint> exceptional;   // affine (tt,ss) points to recheck
    std::string method;                  // "line-param", "conic-param", "function-field"
    long m1 = -1;
};

/// Multiplicity of the image points along one irreducible curve (poly in
/// (tt,ss)), generically, with the finite exceptional locus extracted.
/// Lines and conics with a small rational point run over Q(lambda); all other
/// components run over the function field of the curve. `force_function_field`
/// exists so tests can cross-check the two routes against each other.
CurveVerdict curve_analyze(const AffineParam& Q, const PolyQ& curve, const SurfaceCache& cache,
                           bool force_function_field = false);

/// Analysis of the infinity family (1:lambda:0) through a hat chart:
/// the same engine on the parametrized line (lambda, 0).
struct InfinityFamily {
    long generic_mult = -1;
    bool cone_locus = false;
    std::vector<UnivRoot> exceptional_lambdas;
    int chart = 4;
};

InfinityFamily infinity_family_analyze(const AffineParam& hat_chart, const SurfaceCache& cache);

/// Image of the parameter point under the chart map, as number-field coords.
/// Throws ValidationError when the point lies on the denominator locus.
std::vector<NFElem> param_image_nf(const AffineParam& Q, const AlgPoint& pt);

/// Pointwise multiplicity at a parameter-plane point through a chart.
long multiplicity_at_point(const AffineParam& Q, const AlgPoint& pt, const SurfaceCache& cache,
                           bool* cone = nullptr);

/// Up to `want` points on the curve (poly in (tt,ss)), possibly with
/// number-field coordinates, sampled deterministically from the seed.
/// Used by the sampling verifier.
std::vector<AlgPoint> points_on_curve(const PolyQ& curve, int want, uint64_t seed);

} // namespace surfstrat
