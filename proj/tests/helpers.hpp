#pragma once

// Test-only oracles, kept independent of the library's geometry paths.

#include <random>
#include <vector>

#include "zonoehr/zonotope.hpp"

namespace zonoehr::testing {

// One row of A x <= b.
struct LinIneq {
    std::vector<Rat> a;
    Rat b;
};

// Exact Fourier-Motzkin feasibility for small systems.
inline bool fourier_motzkin_feasible(std::vector<LinIneq> system, int nvars) {
    for (int v = 0; v < nvars; ++v) {
        std::vector<LinIneq> zero, upper, lower;
        for (auto& row : system) {
            const Rat& c = row.a[v];
            if (c == 0)
                zero.push_back(row);
            else if (c > 0)
                upper.push_back(row);  // x_v <= (b - rest)/c
            else
                lower.push_back(row);
        }
        std::vector<LinIneq> next = zero;
        for (const auto& up : upper)
            for (const auto& lo : lower) {
                // combine with positive multipliers to cancel x_v
                LinIneq row;
                row.a.assign(up.a.size(), Rat(0));
                Rat cu = up.a[v], cl = -lo.a[v];
                for (size_t i = 0; i < row.a.size(); ++i) row.a[i] = cl * up.a[i] + cu * lo.a[i];
                row.b = cl * up.b + cu * lo.b;
                next.push_back(std::move(row));
            }
        system = std::move(next);
    }
    for (const auto& row : system)
        if (row.b < 0) return false;
    return true;
}

// Membership oracle from the V-description: x in Z iff some lambda in [0,1]^m
// solves  G lambda = x - t. Entirely independent of the H-description code.
inline bool membership_by_lp(const Zonotope& Z, const RatVec& x) {
    int d = Z.dim(), m = Z.num_generators();
    std::vector<LinIneq> sys;
    for (int j = 0; j < m; ++j) {
        LinIneq lo{std::vector<Rat>(m, Rat(0)), Rat(0)};
        lo.a[j] = -1;
        sys.push_back(lo);  // -lambda_j <= 0
        LinIneq hi{std::vector<Rat>(m, Rat(0)), Rat(1)};
        hi.a[j] = 1;
        sys.push_back(hi);  // lambda_j <= 1
    }
    for (int i = 0; i < d; ++i) {
        Rat rhs = x[i] - Z.translate[i];
        LinIneq up{std::vector<Rat>(m, Rat(0)), rhs};
        LinIneq dn{std::vector<Rat>(m, Rat(0)), -rhs};
        for (int j = 0; j < m; ++j) {
            up.a[j] = Rat(Z.generators.at(i, j));
            dn.a[j] = -Rat(Z.generators.at(i, j));
        }
        sys.push_back(up);
        sys.push_back(dn);
    }
    return fourier_motzkin_feasible(std::move(sys), m);
}

// Brute-force count of lattice points on the closed segment [0, v]: integer
// points x with x = s/q * v for some 0 <= s <= q.
inline Int segment_points_brute_force(const IntVec& v) {
    // walk multiples of v/N for a large common denominator
    Int count = 0;
    Int N = 0;
    for (const auto& x : v) N = std::max(N, x < 0 ? -x : x);
    N *= 100;  // more than enough resolution for test-sized vectors
    for (Int s = 0; s <= N; ++s) {
        bool integral = true;
        for (const auto& x : v)
            if ((s * x) % N != 0) {
                integral = false;
                break;
            }
        if (integral) ++count;
    }
    return count;
}

inline Zonotope from_columns(int dim, std::vector<std::vector<long long>> cols, RatVec translate = {}) {
    IntMat M;
    M.rows = dim;
    for (auto& c : cols) M.cols.push_back(IntVec(c.begin(), c.end()));
    return make_zonotope(std::move(M), std::move(translate));
}

}  // namespace zonoehr::testing
