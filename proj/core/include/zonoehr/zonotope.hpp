#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zonoehr/lattice_linalg.hpp"

namespace zonoehr {

using RatVec = std::vector<Rat>;

// Minkowski sum of the segments [0, g] over the generator columns, shifted
// by the translate. Zero generators are never stored.
struct Zonotope {
    IntMat generators;   // d x m
    RatVec translate;    // length d

    int dim() const { return generators.rows; }
    int num_generators() const { return generators.ncols(); }
    int rank() const { return zonoehr::rank(generators); }
    bool full_dimensional() const { return rank() == dim(); }
    bool integer_translate() const;
};

// Drops zero generators; with merge_parallel, generators sharing a primitive
// direction are folded into one (sign flips are absorbed into the translate,
// which leaves the underlying point set unchanged).
Zonotope make_zonotope(IntMat generators, RatVec translate = {}, bool merge_parallel = false);

Zonotope merge_parallel_generators(const Zonotope& Z);

// n >= 0; scales generators and translate alike.
Zonotope dilate(const Zonotope& Z, int n);

struct FacetDirection {
    IntVec normal;  // primitive, first nonzero entry positive
    Rat lo, hi;
};

// (min, max) of u.x over Z.
std::pair<Rat, Rat> support_interval(const Zonotope& Z, const IntVec& u);

// Facet normals of a full-dimensional zonotope (d <= 3), primitive and
// deduplicated up to sign, sorted lexicographically, each with its support
// interval. The slabs lo <= u.x <= hi are exactly the H-description.
std::vector<FacetDirection> facet_directions(const Zonotope& Z);

// H-description valid in any rank: inequality slabs plus affine-hull
// equalities (encoded as lo == hi).
struct HRep {
    std::vector<FacetDirection> facets;
    std::vector<FacetDirection> equalities;
};
HRep hrep(const Zonotope& Z);

// strict requires a full-dimensional zonotope.
bool contains(const Zonotope& Z, const RatVec& x, bool strict = false);

// All lattice points of nZ in lexicographic order.
std::vector<IntVec> lattice_points(const Zonotope& Z, int n);
Int count_lattice_points(const Zonotope& Z, int n);

// Product of the bounding-box side counts of nZ; cheap overflow guard for
// enumeration budgets.
Int bounding_box_cells(const Zonotope& Z, int n);

std::vector<IntVec> interior_lattice_points(const Zonotope& Z);
bool has_interior_lattice_point(const Zonotope& Z);

// sum_i |u.g_i|; the translate cancels.
Int width_in_direction(const Zonotope& Z, const IntVec& u);

struct WidthResult {
    Int width;
    IntVec witness;  // primitive, canonical sign, lexicographically smallest minimizer
};

// Exact lattice width by exhaustive enumeration of primitive directions
// inside a proven Cramer-type box (see lattice_width_search_bound).
WidthResult lattice_width(const Zonotope& Z);

// Enumeration radius B: any direction at least as good as the best
// coordinate/facet direction W0 satisfies |u_i| <= W0 * rowsum|adj(M^T)| / |det M|
// for any choice M of d independent generators.
Int lattice_width_search_bound(const Zonotope& Z);

// U.Z + shift = factor x [0,1] when some facet direction has width 1;
// detects lattice width 1 exactly for zonotopes.
struct Width1Decomposition {
    Zonotope factor;   // (d-1)-dimensional, zero translate
    IntMat transform;  // unimodular d x d
    IntVec shift;
    IntVec direction;  // the width-1 facet normal used
};
std::optional<Width1Decomposition> width1_decomposition(const Zonotope& Z);

// Solid-angle sum of a full-dimensional planar zonotope with arbitrary
// rational translate: 1 per interior lattice point, 1/2 per edge point,
// normalized vertex angle at vertices. Incidence decisions are exact; only
// the final arccos is floating point.
double solid_angle_sum_2d(const Zonotope& Z);

// Normalized volume = leading Ehrhart coefficient: sum of |det| over
// d-element independent generator subsets.
Int volume(const Zonotope& Z);

}  // namespace zonoehr
