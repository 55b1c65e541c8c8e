#include "zonoehr/ehrhart.hpp"

#include <algorithm>
#include <numeric>

namespace zonoehr {

void Poly::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Rat Poly::operator()(const Rat& x) const {
    Rat r = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.coeffs.size(), b.coeffs.size()), Rat(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
    for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + Rat(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> c(a.coeffs.size() + b.coeffs.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    return Poly(std::move(c));
}

Poly operator*(const Rat& c, const Poly& p) {
    std::vector<Rat> r = p.coeffs;
    for (auto& x : r) x *= c;
    return Poly(std::move(r));
}

Poly monomial(int k, const Rat& c) {
    std::vector<Rat> v(k + 1, Rat(0));
    v[k] = c;
    return Poly(std::move(v));
}

Poly interpolate_at_naturals(const std::vector<Int>& values) {
    if (values.empty()) return Poly();
    // Newton form: p(n) = sum_j D^j f(0) * C(n, j)
    std::vector<Rat> diffs;
    std::vector<Rat> row(values.size());
    for (size_t i = 0; i < values.size(); ++i) row[i] = Rat(values[i]);
    diffs.push_back(row[0]);
    for (size_t level = 1; level < values.size(); ++level) {
        for (size_t i = 0; i + level < values.size(); ++i) row[i] = row[i + 1] - row[i];
        diffs.push_back(row[0]);
    }
    Poly result;
    Poly falling({Rat(1)});  // n(n-1)...(n-j+1)/j!
    Rat factorial = 1;
    for (size_t j = 0; j < diffs.size(); ++j) {
        if (j > 0) {
            falling = falling * Poly({Rat(-(Int(j) - 1)), Rat(1)});
            factorial *= Rat(Int(j));
        }
        result = result + (diffs[j] / factorial) * falling;
    }
    return result;
}

CVector make_cvector(int d, std::vector<Rat> c) {
    if (static_cast<int>(c.size()) != d) throw std::invalid_argument("CVector: wrong length");
    bool ok = std::all_of(c.begin(), c.end(), [](const Rat& x) { return is_integer(x) && x >= 0; });
    return {d, std::move(c), ok};
}

HStarVector make_hstar(int d, std::vector<Rat> h) {
    if (static_cast<int>(h.size()) != d + 1) throw std::invalid_argument("HStarVector: wrong length");
    bool ok = std::all_of(h.begin(), h.end(), [](const Rat& x) { return is_integer(x) && x >= 0; });
    return {d, std::move(h), ok};
}

Poly ehrhart_stanley(const Zonotope& Z) {
    if (!Z.integer_translate())
        throw std::invalid_argument("ehrhart_stanley: requires a lattice zonotope (integer translate)");
    std::vector<Rat> coeffs(Z.dim() + 1, Rat(0));
    for (const auto& idx : independent_subsets(Z.generators)) {
        int k = static_cast<int>(idx.size());
        if (k == 0) {
            coeffs[0] += 1;  // g(empty) = 1
            continue;
        }
        coeffs[k] += Rat(gcd_of_minors(Z.generators.submatrix_cols(idx), k));
    }
    return Poly(std::move(coeffs));
}

Poly ehrhart_oracle(const Zonotope& Z, const OracleOptions& opts) {
    if (!Z.integer_translate())
        throw std::invalid_argument("ehrhart_oracle: requires a lattice zonotope (integer translate)");
    // Counting is invariant under integer translation; normalize to zero so
    // bounding boxes stay anchored at the generators.
    Zonotope N{Z.generators, RatVec(Z.dim(), Rat(0))};
    int d = N.dim();
    int top = opts.verify_fit ? d + 2 : d;
    for (int n = 0; n <= top; ++n)
        if (bounding_box_cells(N, n) > opts.cell_budget)
            throw budget_exceeded("ehrhart_oracle: bounding box exceeds cell budget");

    std::vector<Int> counts;
    for (int n = 0; n <= top; ++n) counts.push_back(count_lattice_points(N, n));

    std::vector<Int> nodes(counts.begin(), counts.begin() + d + 1);
    Poly p = interpolate_at_naturals(nodes);
    if (opts.verify_fit) {
        for (int n = d + 1; n <= d + 2; ++n)
            if (p(Rat(n)) != Rat(counts[n]))
                throw std::logic_error("ehrhart_oracle: counts do not fit a degree-d polynomial");
    }
    return p;
}

namespace {

// (n+1)^{d-j} n^j
Poly cbasis_element(int d, int j) {
    Poly np1({Rat(1), Rat(1)});
    Poly result({Rat(1)});
    for (int i = 0; i < d - j; ++i) result = result * np1;
    return result * monomial(j);
}

}  // namespace

CVector to_cbasis(const Poly& p, int d) {
    if (p.degree() > d) throw std::invalid_argument("to_cbasis: polynomial degree exceeds dimension");
    if (p.coeff(0) != 1) throw std::invalid_argument("to_cbasis: not normalized (constant term must be 1)");
    // The basis elements are triangular in the lowest-order exponent:
    // (n+1)^{d-j} n^j has valuation j with unit coefficient.
    Poly residual = p;
    std::vector<Rat> x(d + 1, Rat(0));
    for (int j = 0; j <= d; ++j) {
        x[j] = residual.coeff(j);
        if (x[j] != 0) residual = residual - x[j] * cbasis_element(d, j);
    }
    if (!residual.is_zero()) throw std::logic_error("to_cbasis: expansion failed");
    return make_cvector(d, std::vector<Rat>(x.begin() + 1, x.end()));
}

Poly from_cbasis(const CVector& c) {
    Poly p = cbasis_element(c.d, 0);
    for (int j = 1; j <= c.d; ++j) p = p + c.c[j - 1] * cbasis_element(c.d, j);
    return p;
}

namespace {

Int binomial(const Int& n, int k) {
    if (n < 0 || k < 0 || n < k) return 0;
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

}  // namespace

HStarVector hstar_from_poly(const Poly& p, int d) {
    if (p.degree() > d) throw std::invalid_argument("hstar_from_poly: polynomial degree exceeds dimension");
    // Evaluating C(n+d-i, d) at n = r vanishes for i > r, so the system is
    // triangular with unit diagonal.
    std::vector<Rat> h(d + 1, Rat(0));
    for (int r = 0; r <= d; ++r) {
        Rat v = p(Rat(r));
        for (int i = 0; i < r; ++i) v -= h[i] * Rat(binomial(Int(r + d - i), d));
        h[r] = v;
    }
    return make_hstar(d, std::move(h));
}

Poly hstar_polynomial(const HStarVector& h) { return Poly(std::vector<Rat>(h.h)); }

std::vector<Poly> eulerian_table(int d) {
    if (d < 1 || d > 9) throw std::invalid_argument("eulerian polynomials: d must be in 1..9");
    std::vector<std::vector<Rat>> acc(d, std::vector<Rat>(d, Rat(0)));
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        int descents = 0;
        for (int i = 0; i + 1 < d; ++i)
            if (perm[i] > perm[i + 1]) ++descents;
        int j = d + 1 - perm[d - 1];  // sigma(d) = d+1-j
        acc[j - 1][descents] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<Poly> table;
    table.reserve(d);
    for (auto& coeffs : acc) table.emplace_back(std::move(coeffs));
    return table;
}

Poly eulerian_Aj(int d, int j) {
    if (j < 1 || j > d) throw std::invalid_argument("eulerian_Aj: j must be in 1..d");
    return eulerian_table(d)[j - 1];
}

HStarVector hstar_via_eulerian(const CVector& c) {
    auto table = eulerian_table(c.d + 1);
    Poly h = table[0];
    for (int j = 1; j <= c.d; ++j) h = h + c.c[j - 1] * table[j];
    std::vector<Rat> out(c.d + 1, Rat(0));
    if (h.degree() > c.d) throw std::logic_error("hstar_via_eulerian: degree overflow");
    for (int i = 0; i <= h.degree(); ++i) out[i] = h.coeff(i);
    HStarVector result = make_hstar(c.d, std::move(out));
    // the combination is only certified for admissible c-vectors
    result.integral_nonnegative = result.integral_nonnegative && c.integral_nonnegative;
    return result;
}

int degree_of(const HStarVector& h) {
    for (int i = h.d; i >= 1; --i)
        if (h.h[i] != 0) return i;
    return 0;
}

int degree_of(const Poly& ehr, int d) { return degree_of(hstar_from_poly(ehr, d)); }

int degree_via_dilates(const Zonotope& Z, const Int& cell_budget) {
    if (!Z.full_dimensional())
        throw std::invalid_argument("degree_via_dilates: zonotope is degenerate");
    int d = Z.dim();
    for (int r = 0; r <= d; ++r) {
        int k = d - r;
        if (k == 0) return r;  // the 0-th dilate is a point: no interior
        if (bounding_box_cells(Z, k) > cell_budget)
            throw budget_exceeded("degree_via_dilates: bounding box exceeds cell budget");
        if (!has_interior_lattice_point(dilate(Z, k))) return r;
    }
    return d;
}

Int interior_count_reciprocity(const Poly& p, int d) {
    if (p.degree() > d)
        throw std::invalid_argument("interior_count_reciprocity: polynomial degree exceeds dimension");
    Rat v = p(Rat(-1));
    if (v < 0) v = -v;
    return to_integer(v);
}

}  // namespace zonoehr
