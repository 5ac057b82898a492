#pragma once

#include "surfstrat/algebra.hpp"
#include "surfstrat/ratfunc.hpp"

#include <array>
#include <optional>
#include <variant>

namespace surfstrat {

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input describes a plane x_i = lambda x_j; the whole parameter plane maps
/// to simple points and the pipeline short-circuits.
struct PlaneReport {
    int i, j;
    Rational lambda;
};

/// Projective parametrization (p1 : p2 : p3 : p4), homogeneous of equal
/// degree, coprime, pairwise non-proportional.
struct ProjParam {
    std::array<PolyQ, 4> p;
    long gamma = 0;
    std::vector<std::string> warnings;

    const PolyQ& at(int i) const { return p[static_cast<size_t>(i - 1)]; }
};

enum class Flavor { affine, tilde, hat };

/// One dehomogenized chart. Chart coordinates are always named (t, s)
/// internally: (t,s) for v=1 charts, (t~,v~) for s=1, (s^,v^) for t=1.
struct AffineParam {
    std::array<RatFunc, 3> comp;
    std::array<int, 3> num_index;  // which p_k sits in each numerator
    int origin = 4;                // denominator component index 1..4
    Flavor flavor = Flavor::affine;
};

/// Finite polynomial system describing a closed subset of the plane
/// (common zero locus of the generators).
struct ClosedSet {
    std::vector<PolyQ> gens;
    bool whole_plane = false;

    bool known_empty() const;  // generators include a nonzero constant
};

/// Point of the parameter plane with coordinates in Q or Q[r]/(m(r)).
/// A null field means rational coordinates. Projective points carry three
/// coordinates, affine points two.
struct AlgPoint {
    NFPtr field;
    std::vector<NFElem> coords;
    bool projective = false;

    bool is_rational() const { return field == nullptr; }
    long ext_degree() const { return field ? field->degree() : 1; }
    std::string str() const;
};

/// Exact set equality of the Galois classes described by two points.
bool same_point(const AlgPoint& a, const AlgPoint& b);

/// True when the (affine) point lies on the closed set / vanishes on f.
bool point_on(const AlgPoint& a, const PolyQ& f);
bool point_on(const AlgPoint& a, const ClosedSet& cs);

NFElem point_eval(const AlgPoint& a, const PolyQ& f);  // f(t,s) at the point

std::variant<ProjParam, PlaneReport> validate(const std::array<PolyQ, 4>& polys);

/// Parse the input file format: lines "p1 = ..." .. "p4 = ..." in t,s,v
/// with an optional "field: Q" header.
std::array<PolyQ, 4> parse_param_file(const std::string& text);

AffineParam dehomogenize(const ProjParam& P, int i, Flavor flavor);

/// Delta_i = { lcm of the reduced denominators of P_{x_i} = 0 }, i = 1..4.
std::array<ClosedSet, 4> denominator_loci(const ProjParam& P);

struct BasePoints {
    std::vector<AlgPoint> affine;    // projective triples (t0:s0:1)
    std::vector<AlgPoint> infinity;  // projective triples with v = 0
};

BasePoints base_points(const ProjParam& P);

/// p_i(t, s, 1) — the affine dehomogenization of one component.
PolyQ p_tilde(const ProjParam& P, int i);

} // namespace surfstrat
