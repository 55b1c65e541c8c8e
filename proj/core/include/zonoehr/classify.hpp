#pragma once

#include <optional>
#include <string>
#include <utility>

#include "zonoehr/ehrhart.hpp"
#include "zonoehr/zonotope.hpp"

namespace zonoehr {

struct Verdict {
    bool accepted = false;
    std::string case_label;  // set when accepted: which clause fired
    std::string reason;      // set when rejected: why
};

// Scott's classification of Ehrhart polynomials 1 + e1 n + e2 n^2 of
// 2-dimensional lattice polytopes.
Verdict check_scott(const Rat& e1, const Rat& e2);

// Treutlein's constraints on h*-polynomials 1 + h1 t + h2 t^2 of lattice
// polytopes of degree <= 2; the flag adds the dimension-2 bound h2 <= h1.
Verdict check_treutlein(const Rat& h1, const Rat& h2, bool enforce_dim2_bound = false);

// c-vectors of Ehrhart polynomials of 2-dimensional lattice zonotopes.
Verdict check_zono2d(const Rat& c1, const Rat& c2);

// c-vectors of Ehrhart polynomials of 3-dimensional degree-2 lattice zonotopes.
Verdict check_zono3d_deg2(const Rat& c1, const Rat& c2, const Rat& c3);

// h*-vectors (1, h1, h2) of 2-dimensional lattice zonotopes.
Verdict check_hstar_zono2d(const Rat& h1, const Rat& h2);

// h*-vectors (1, h1, h2) of 3-dimensional degree-2 lattice zonotopes.
Verdict check_hstar_zono3d_deg2(const Rat& h1, const Rat& h2);

// (c1,c2) -> (e1,e2) = (2+c1, 1+c1+c2): monomial coefficients of the same
// Ehrhart polynomial.
std::pair<Rat, Rat> map_c_to_e_2d(const Rat& c1, const Rat& c2);

// d=2: (c1,c2) -> (1+2c1+c2, c2); d=3 (degree 2, c3=0): (4+4c1+2c2, 1+2c1+4c2).
std::pair<Rat, Rat> map_c_to_hstar(const Rat& c1, const Rat& c2, int d);

// Exact inverse of map_c_to_hstar on its image.
std::pair<Rat, Rat> inverse_map_hstar_to_c(const Rat& h1, const Rat& h2, int d);

// Realizing zonotope with Ehrhart polynomial (n+1)^2 + c1(n+1)n + c2 n^2.
// Throws (mirroring check_zono2d) on inadmissible input.
Zonotope realize_2d(const Int& c1, const Int& c2);

// Realizing zonotope with Ehrhart polynomial
// (n+1)^3 + c1(n+1)^2 n + c2(n+1)n^2: the 2D realizer times [0,1]. For
// (c1,c2) = (0,3) the exceptional parallelepiped is available behind the flag.
Zonotope realize_3d_deg2(const Int& c1, const Int& c2, bool exceptional_witness = false);

// Z([1,1,0], [-1,1,0], [1,1,2]): the unique 3-dimensional degree-2 lattice
// zonotope of lattice width greater than one, up to unimodular equivalence.
Zonotope exceptional_parallelepiped();

struct AffineMap {
    IntMat transform;  // unimodular
    IntVec shift;
};

struct Classification3d {
    enum class Kind { Width1Product, Exceptional, NotDegree2 };
    Kind kind;
    std::optional<Zonotope> factor;  // Width1Product: the 2D zonotope Q
    std::optional<AffineMap> map;    // transform.Z + shift = Q x [0,1] or the parallelepiped
    std::string reason;              // NotDegree2
    bool merged_generators = false;  // parallel generators were merged first
};

// Raised when a degree-2 input fits neither branch; this would falsify the
// classification theorem and must abort loudly.
struct classification_contradiction : std::logic_error {
    using std::logic_error::logic_error;
};

Classification3d classify_3d_deg2(const Zonotope& Z);

}  // namespace zonoehr
