#pragma once

#include "surfstrat/generic.hpp"

#include <cstdint>

namespace surfstrat {

struct AnalyzeOptions {
    long max_ext_degree = 16;  // extension-degree cap for pointwise runs
    uint64_t seed = 20240101;  // sampling seed (verification only)
    double timeout_seconds = 0;
};

enum class PieceKind { generic_plane, curve, point, infinity_family, infinity_point };

/// One constructible piece of a stratum: a positive part (plane / curve /
/// point / the infinity family) minus finitely many excluded parts.
struct StratumPiece {
    PieceKind kind = PieceKind::point;
    int level = 1;  // 1..4 = affine levels, 5 = infinity
    int chart = 4;  // dehomogenization that classified the piece
    PolyQ curve;    // curve pieces: irreducible poly in (tt,ss)
    AlgPoint point; // point pieces (affine pair or projective triple)
    std::vector<PolyQ> minus_curves;
    std::vector<AlgPoint> minus_points;       // excluded affine points
    std::vector<AlgPoint> minus_lambdas;      // excluded infinity directions
    bool cone = false;
    std::string method;
};

struct Stratum {
    long multiplicity = 1;
    std::vector<StratumPiece> pieces;
};

struct DeferredPoint {
    AlgPoint point;
    std::string reason;
};

struct Decomposition {
    bool plane = false;
    std::vector<Stratum> strata;
    std::vector<AlgPoint> base_points;  // projective triples
    SurfaceCache cache;
    GuardSets guards;
    std::array<PolyQ, 4> delta_gens;
    std::vector<std::string> warnings;
    std::vector<DeferredPoint> deferred;
    ProjParam input;
};

Decomposition analyze(const ProjParam& P, const AnalyzeOptions& opt = {});
Decomposition analyze_plane(const ProjParam& P);  // Step-6 short-circuit form

struct VerifyReport {
    int checked = 0;
    int mismatches = 0;
    int grid_errors = 0;  // partition violations on the sample grid
    std::vector<std::string> details;
};

/// Re-computes multiplicities at sampled points of every infinite piece and
/// checks the partition property on a rational grid. Report-only.
VerifyReport verify_samples(const Decomposition& D, int n, uint64_t seed);

/// Deterministic JSON rendering (byte-identical across runs).
std::string to_json(const Decomposition& D);

/// Parameter-plane picture: curves colored by multiplicity, real points,
/// the infinity line as the boundary circle.
std::string to_svg(const Decomposition& D);

std::string to_text(const Decomposition& D);

} // namespace surfstrat
