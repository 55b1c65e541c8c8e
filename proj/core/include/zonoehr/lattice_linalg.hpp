#pragma once

#include <utility>
#include <vector>

#include "zonoehr/numeric.hpp"

namespace zonoehr {

using IntVec = std::vector<Int>;

// Column-major integer matrix: cols[j] is the j-th column, all of size rows.
struct IntMat {
    int rows = 0;
    std::vector<IntVec> cols;

    IntMat() = default;
    IntMat(int rows_, std::vector<IntVec> cols_);

    static IntMat identity(int d);

    int ncols() const { return static_cast<int>(cols.size()); }
    const Int& at(int i, int j) const { return cols[j][i]; }
    Int& at(int i, int j) { return cols[j][i]; }

    IntMat submatrix_cols(const std::vector<int>& col_idx) const;

    bool operator==(const IntMat& other) const = default;
};

Int dot(const IntVec& a, const IntVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const Int& c, const IntVec& v);
IntVec negate(const IntVec& v);
bool is_zero_vec(const IntVec& v);
bool lex_less(const IntVec& a, const IntVec& b);

// Flips the sign so the first nonzero entry is positive. Zero stays zero.
IntVec canonical_sign(IntVec v);

// gcd of the absolute values of the entries; 0 for the zero vector.
Int entry_gcd(const IntVec& v);

// v / gcd(entries); keeps direction. Throws on the zero vector.
IntVec primitive_part(const IntVec& v);

// Relative length of the segment [0, v]: one less than its lattice point
// count, i.e. the gcd of the entries. Throws on the zero vector.
Int segment_length(const IntVec& v);

IntVec mat_vec(const IntMat& M, const IntVec& x);
IntMat mat_mul(const IntMat& A, const IntMat& B);
IntMat transpose(const IntMat& M);

// Determinant of a square matrix (Laplace expansion; matrices here are tiny).
Int det(const IntMat& M);

// Adjugate: adj(M) * M = det(M) * I.
IntMat adjugate(const IntMat& M);

// Rank over Q via fraction-free (Bareiss-style) elimination.
int rank(const IntMat& M);

// gcd of the absolute values of all k x k minors; 0 iff rank(M) < k.
// Requires 1 <= k <= min(rows, cols).
Int gcd_of_minors(const IntMat& M, int k);

// All subsets of column indices (0-based) with linearly independent columns,
// including the empty set, ordered by size then lexicographically.
std::vector<std::vector<int>> independent_subsets(const IntMat& M);

// Lattice basis of {x in Z^d : v.x = 0} for primitive v, d >= 2.
// Deterministic: column-style Hermite reduction of the row vector v, each
// basis vector flipped to canonical sign.
std::vector<IntVec> hyperplane_lattice_basis(const IntVec& v);

// Same reduction, additionally returning w with v.w = 1; (basis | w) is a
// basis of Z^d.
std::pair<std::vector<IntVec>, IntVec> hyperplane_basis_with_transversal(const IntVec& v);

// Inverse of the column matrix (b_1 | ... | b_{d-1} | w) as an integer
// matrix U, so U.b_i = e_i and U.w = e_d. Throws "not a lattice basis"
// unless the determinant is +-1.
IntMat unimodular_complement(const std::vector<IntVec>& basis, const IntVec& w);

}  // namespace zonoehr
