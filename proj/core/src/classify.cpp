#include "zonoehr/classify.hpp"

#include <algorithm>
#include <sstream>

namespace zonoehr {

namespace {

bool is_nonneg_integer(const Rat& x) { return is_integer(x) && x >= 0; }

bool is_half_integer(const Rat& x) { return is_integer(Rat(2) * x); }

std::string rs(const Rat& x) { return rational_string(x); }

Int mod6(const Rat& x) {
    Int v = to_integer(x);
    return ((v % 6) + 6) % 6;
}

Verdict accept(std::string label) { return {true, std::move(label), ""}; }
Verdict reject(std::string reason) { return {false, "", std::move(reason)}; }

}  // namespace

Verdict check_scott(const Rat& e1, const Rat& e2) {
    if (!is_half_integer(e1) || !is_half_integer(e2))
        return reject("e1, e2 must be half-integers, got (" + rs(e1) + ", " + rs(e2) + ")");
    if (e1 <= 0 || e2 <= 0) return reject("e1, e2 must be positive");
    if (e2 == e1 - 1) return accept("Scott-(i)");
    if (e1 < e2 + 1 && Rat(3, 2) <= e1 && e1 <= e2 / 2 + 2) return accept("Scott-(ii)");
    if (e1 == Rat(9, 2) && e2 == Rat(9, 2)) return accept("Scott-(iii)");
    return reject("(" + rs(e1) + ", " + rs(e2) + ") satisfies none of (i), (ii), (iii)");
}

Verdict check_treutlein(const Rat& h1, const Rat& h2, bool enforce_dim2_bound) {
    if (!is_nonneg_integer(h1) || !is_nonneg_integer(h2))
        return reject("h1*, h2* must be nonnegative integers, got (" + rs(h1) + ", " + rs(h2) + ")");
    if (enforce_dim2_bound && h2 > h1)
        return reject("dimension-2 bound violated: h2* = " + rs(h2) + " > h1* = " + rs(h1));
    if (h2 == 0) return accept("Treutlein-(i)");
    if (h1 <= 3 * h2 + 3) return accept("Treutlein-(ii)");
    if (h1 == 7 && h2 == 1) return accept("Treutlein-(iii)");
    return reject("h1* = " + rs(h1) + " > 3 h2* + 3 = " + rs(3 * h2 + 3) + ", h2* != 0, and (h1*, h2*) != (7, 1)");
}

Verdict check_zono2d(const Rat& c1, const Rat& c2) {
    if (!is_nonneg_integer(c1) || !is_nonneg_integer(c2))
        return reject("c1, c2 must be nonnegative integers, got (" + rs(c1) + ", " + rs(c2) + ")");
    if (c2 == 0) return accept("Zono2d-(c2=0)");
    if (c2 >= c1 - 1) return accept("Zono2d-(c2>=c1-1)");
    return reject("c2 = " + rs(c2) + " < c1 - 1 = " + rs(c1 - 1) + " and c2 != 0");
}

Verdict check_zono3d_deg2(const Rat& c1, const Rat& c2, const Rat& c3) {
    if (!is_nonneg_integer(c1) || !is_nonneg_integer(c2))
        return reject("c1, c2 must be nonnegative integers, got (" + rs(c1) + ", " + rs(c2) + ")");
    if (c3 != 0) return reject("c3 = " + rs(c3) + " != 0 (degree-2 zonotopes have no interior points)");
    Verdict v2 = check_zono2d(c1, c2);
    if (!v2.accepted) return v2;
    return accept("Zono3dDeg2-" + v2.case_label.substr(v2.case_label.find('(')));
}

Verdict check_hstar_zono2d(const Rat& h1, const Rat& h2) {
    if (!is_nonneg_integer(h1) || !is_nonneg_integer(h2))
        return reject("h1*, h2* must be nonnegative integers, got (" + rs(h1) + ", " + rs(h2) + ")");
    if ((to_integer(h1 - h2) % 2 + 2) % 2 != 1)
        return reject("parity: h1* - h2* = " + rs(h1 - h2) + " is even, expected odd");
    if (h2 + 1 > h1) return reject("h2* + 1 = " + rs(h2 + 1) + " > h1* = " + rs(h1));
    if (h2 == 0) return accept("HstarZono2d-(h2=0)");
    if (h1 <= 3 * h2 + 3) return accept("HstarZono2d-(h1<=3h2+3)");
    return reject("h1* = " + rs(h1) + " > 3 h2* + 3 = " + rs(3 * h2 + 3) + " and h2* != 0");
}

Verdict check_hstar_zono3d_deg2(const Rat& h1, const Rat& h2) {
    if (!is_nonneg_integer(h1) || !is_nonneg_integer(h2))
        return reject("h1*, h2* must be nonnegative integers, got (" + rs(h1) + ", " + rs(h2) + ")");
    if (mod6(2 * h1 - h2) != 1)
        return reject("residue 2h1*-h2* = " + rs(2 * h1 - h2) + " ≡ " + mod6(2 * h1 - h2).str() +
                      " (mod 6), expected 1");
    if (mod6(2 * h2 - h1) != 4)
        return reject("residue 2h2*-h1* = " + rs(2 * h2 - h1) + " ≡ " + mod6(2 * h2 - h1).str() +
                      " (mod 6), expected 4");
    if (h1 / 2 - 1 > h2) return reject("h2* = " + rs(h2) + " < h1*/2 - 1 = " + rs(h1 / 2 - 1));
    if (h2 > 2 * h1 - 7) return reject("h2* = " + rs(h2) + " > 2 h1* - 7 = " + rs(2 * h1 - 7));
    if (h2 >= h1 - 5) return accept("HstarZono3dDeg2-(h2>=h1-5)");
    if (2 * h2 == h1 - 2) return accept("HstarZono3dDeg2-(2h2=h1-2)");
    return reject("h2* = " + rs(h2) + " < h1* - 5 = " + rs(h1 - 5) + " and 2 h2* != h1* - 2");
}

std::pair<Rat, Rat> map_c_to_e_2d(const Rat& c1, const Rat& c2) {
    return {2 + c1, 1 + c1 + c2};
}

std::pair<Rat, Rat> map_c_to_hstar(const Rat& c1, const Rat& c2, int d) {
    if (d == 2) return {1 + 2 * c1 + c2, c2};
    if (d == 3) return {4 + 4 * c1 + 2 * c2, 1 + 2 * c1 + 4 * c2};
    throw std::invalid_argument("map_c_to_hstar: d must be 2 or 3");
}

std::pair<Rat, Rat> inverse_map_hstar_to_c(const Rat& h1, const Rat& h2, int d) {
    if (d == 2) return {(h1 - h2 - 1) / 2, h2};
    if (d == 3) return {(2 * h1 - h2 - 7) / 6, (2 * h2 - h1 + 2) / 6};
    throw std::invalid_argument("inverse_map_hstar_to_c: d must be 2 or 3");
}

Zonotope realize_2d(const Int& c1, const Int& c2) {
    Verdict v = check_zono2d(Rat(c1), Rat(c2));
    if (!v.accepted) throw std::invalid_argument("realize_2d: " + v.reason);
    IntMat gens;
    gens.rows = 2;
    if (c2 == 0) {
        gens.cols = {{Int(1), Int(0)}, {Int(0), c1 + 1}};
    } else {
        gens.cols = {{Int(1), Int(0)}, {Int(0), c1}, {Int(1), 1 - c1 + c2}};
    }
    return make_zonotope(std::move(gens));
}

Zonotope realize_3d_deg2(const Int& c1, const Int& c2, bool exceptional_witness) {
    Verdict v = check_zono3d_deg2(Rat(c1), Rat(c2), Rat(0));
    if (!v.accepted) throw std::invalid_argument("realize_3d_deg2: " + v.reason);
    if (exceptional_witness) {
        if (c1 != 0 || c2 != 3)
            throw std::invalid_argument("realize_3d_deg2: the exceptional witness realizes only (c1, c2) = (0, 3)");
        return exceptional_parallelepiped();
    }
    Zonotope Q = realize_2d(c1, c2);
    IntMat gens;
    gens.rows = 3;
    for (const auto& g : Q.generators.cols) gens.cols.push_back({g[0], g[1], Int(0)});
    gens.cols.push_back({Int(0), Int(0), Int(1)});
    return make_zonotope(std::move(gens));
}

Zonotope exceptional_parallelepiped() {
    IntMat gens;
    gens.rows = 3;
    gens.cols = {{Int(1), Int(1), Int(0)}, {Int(-1), Int(1), Int(0)}, {Int(1), Int(1), Int(2)}};
    return make_zonotope(std::move(gens));
}

namespace {

[[noreturn]] void contradiction(const std::string& what) {
    throw classification_contradiction(
        "classification contradiction (this would falsify the degree-2 classification): " + what);
}

}  // namespace

Classification3d classify_3d_deg2(const Zonotope& Z) {
    if (Z.dim() != 3) throw std::invalid_argument("classify_3d_deg2: ambient dimension must be 3");
    if (!Z.integer_translate()) throw std::invalid_argument("classify_3d_deg2: non-lattice translate");

    Zonotope M = merge_parallel_generators(Z);
    Classification3d out;
    out.merged_generators = M.num_generators() != Z.num_generators();
    if (!M.full_dimensional()) throw std::invalid_argument("classify_3d_deg2: zonotope is degenerate");

    if (has_interior_lattice_point(M)) {
        out.kind = Classification3d::Kind::NotDegree2;
        out.reason = "interior lattice points present, so the degree is 3";
        return out;
    }

    if (auto dec = width1_decomposition(M)) {
        out.kind = Classification3d::Kind::Width1Product;
        out.factor = std::move(dec->factor);
        out.map = AffineMap{std::move(dec->transform), std::move(dec->shift)};
        return out;
    }

    // No width-1 facet direction: the only remaining degree-2 shape is the
    // exceptional parallelepiped; build the explicit equivalence and verify.
    if (M.num_generators() != 3)
        contradiction("empty interior, no width-1 facet direction, and not a parallelepiped");
    const IntVec& v1 = M.generators.cols[0];
    const IntVec& v2 = M.generators.cols[1];
    const IntVec& v3 = M.generators.cols[2];
    for (const auto& g : M.generators.cols)
        if (entry_gcd(g) != 1) contradiction("parallelepiped has a non-primitive generator");

    // b1 = v1, b2 = (v1+v2)/2, b3 = (v1+v3)/2 must form a lattice basis.
    IntMat B;
    B.rows = 3;
    B.cols.push_back(v1);
    for (const IntVec* v : {&v2, &v3}) {
        IntVec s = add(v1, *v);
        for (const auto& x : s)
            if (x % 2 != 0) contradiction("facet midpoint is not a lattice point");
        B.cols.push_back({s[0] / 2, s[1] / 2, s[2] / 2});
    }
    Int D = det(B);
    if (D != 1 && D != -1) contradiction("midpoint basis is not unimodular");
    IntMat Binv = adjugate(B);
    if (D == -1)
        for (auto& col : Binv.cols)
            for (auto& x : col) x = -x;
    IntMat T;
    T.rows = 3;
    T.cols = {{Int(1), Int(1), Int(0)}, {Int(0), Int(1), Int(0)}, {Int(1), Int(1), Int(1)}};
    IntMat U = mat_mul(T, Binv);

    // The images must be the exceptional generators up to sign and order.
    Zonotope E = exceptional_parallelepiped();
    std::vector<bool> used(3, false);
    IntVec flip_correction(3, 0);
    for (const auto& g : M.generators.cols) {
        IntVec img = mat_vec(U, g);
        bool matched = false;
        for (int k = 0; k < 3 && !matched; ++k) {
            if (used[k]) continue;
            if (img == E.generators.cols[k]) {
                used[k] = true;
                matched = true;
            } else if (img == negate(E.generators.cols[k])) {
                used[k] = true;
                matched = true;
                flip_correction = add(flip_correction, E.generators.cols[k]);
            }
        }
        if (!matched) contradiction("mapped generators do not match the exceptional parallelepiped");
    }

    IntVec t(3);
    for (int i = 0; i < 3; ++i) t[i] = to_integer(M.translate[i]);
    IntVec shift = sub(flip_correction, mat_vec(U, t));

    out.kind = Classification3d::Kind::Exceptional;
    out.map = AffineMap{std::move(U), std::move(shift)};
    return out;
}

}  // namespace zonoehr
