#pragma once

#include <stdexcept>
#include <vector>

#include "zonoehr/zonotope.hpp"

namespace zonoehr {

// Univariate polynomial with exact rational coefficients, ascending degree,
// trailing zeros trimmed; the zero polynomial has no coefficients.
struct Poly {
    std::vector<Rat> coeffs;

    Poly() = default;
    explicit Poly(std::vector<Rat> c) : coeffs(std::move(c)) { trim(); }

    void trim();
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    Rat coeff(int k) const { return k < static_cast<int>(coeffs.size()) ? coeffs[k] : Rat(0); }
    Rat operator()(const Rat& x) const;

    bool operator==(const Poly& other) const = default;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rat& c, const Poly& p);

// x^k with coefficient c.
Poly monomial(int k, const Rat& c = Rat(1));

// Unique polynomial of degree <= len(values)-1 through (i, values[i]);
// Newton forward differences, exact.
Poly interpolate_at_naturals(const std::vector<Int>& values);

// Coefficients (c_1..c_d) in the basis {(n+1)^{d-j} n^j}; a degree-d
// Ehrhart polynomial of a lattice zonotope has nonnegative integer entries.
struct CVector {
    int d = 0;
    std::vector<Rat> c;  // c[j-1] = c_j
    bool integral_nonnegative = false;
};

CVector make_cvector(int d, std::vector<Rat> c);

// Coefficients (h*_0..h*_d) in the binomial basis {C(n+d-i, d)}.
struct HStarVector {
    int d = 0;
    std::vector<Rat> h;  // h[i] = h*_i, size d+1
    bool integral_nonnegative = false;
};

HStarVector make_hstar(int d, std::vector<Rat> h);

struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Stanley's summation over independent generator subsets: coefficient of
// n^k is the sum of gcd-of-maximal-minors over independent k-subsets.
// Requires an integer translate (counting is translation invariant).
Poly ehrhart_stanley(const Zonotope& Z);

struct OracleOptions {
    Int cell_budget = Int(100000000);
    bool verify_fit = false;  // also checks two extra dilates against the fit
};

// Independent counting route: exact interpolation through |nZ| at n = 0..d.
Poly ehrhart_oracle(const Zonotope& Z, const OracleOptions& opts = {});

// Expansion of p in {(n+1)^{d-j} n^j}_{j=0..d}; requires p(0) = 1 and
// deg p <= d.
CVector to_cbasis(const Poly& p, int d);
Poly from_cbasis(const CVector& c);

HStarVector hstar_from_poly(const Poly& p, int d);
Poly hstar_polynomial(const HStarVector& h);  // sum h_i t^i

// Descent-generating polynomial over permutations of [d] with fixed last
// value d+1-j; direct enumeration, d <= 9.
Poly eulerian_Aj(int d, int j);
std::vector<Poly> eulerian_table(int d);  // A^d_1 .. A^d_d

// h* via the refined-Eulerian expansion A^{d+1}_1 + sum_j c_j A^{d+1}_{j+1}.
HStarVector hstar_via_eulerian(const CVector& c);

// Degree of the h*-polynomial (0 for the point).
int degree_of(const HStarVector& h);
int degree_of(const Poly& ehr, int d);

// Smallest r such that the (d-r)-th dilate has no interior lattice points,
// the 0-th dilate counting as empty. Cross-check for degree_of.
int degree_via_dilates(const Zonotope& Z, const Int& cell_budget = Int(100000000));

// |p(-1)|: interior lattice point count by Ehrhart-Macdonald reciprocity.
Int interior_count_reciprocity(const Poly& p, int d);

}  // namespace zonoehr
