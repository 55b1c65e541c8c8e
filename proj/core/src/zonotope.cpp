#include "zonoehr/zonotope.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace zonoehr {

namespace {

Rat dot_rat(const IntVec& u, const RatVec& x) {
    if (u.size() != x.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rat s = 0;
    for (size_t i = 0; i < u.size(); ++i) s += Rat(u[i]) * x[i];
    return s;
}

IntVec rotate90(const IntVec& v) { return {-v[1], v[0]}; }

IntVec cross(const IntVec& a, const IntVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

void require_geometry_dim(const Zonotope& Z) {
    if (Z.dim() < 1 || Z.dim() > 3)
        throw std::invalid_argument("geometric operations support ambient dimension 1..3");
}

}  // namespace

bool Zonotope::integer_translate() const {
    return std::all_of(translate.begin(), translate.end(), [](const Rat& r) { return is_integer(r); });
}

Zonotope make_zonotope(IntMat generators, RatVec translate, bool merge_parallel) {
    int d = generators.rows;
    if (d < 1) throw std::invalid_argument("make_zonotope: ambient dimension must be positive");
    if (translate.empty()) translate.assign(d, Rat(0));
    if (static_cast<int>(translate.size()) != d)
        throw std::invalid_argument("make_zonotope: translate dimension mismatch");

    IntMat kept;
    kept.rows = d;
    for (auto& c : generators.cols) {
        if (static_cast<int>(c.size()) != d)
            throw std::invalid_argument("make_zonotope: generator dimension mismatch");
        if (!is_zero_vec(c)) kept.cols.push_back(std::move(c));
    }
    Zonotope Z{std::move(kept), std::move(translate)};
    return merge_parallel ? merge_parallel_generators(Z) : Z;
}

Zonotope merge_parallel_generators(const Zonotope& Z) {
    // Bucket generators by primitive direction with canonical sign. A
    // generator pointing the "wrong" way is replaced by its negative, which
    // shifts the translate by the original generator and leaves the set
    // unchanged.
    std::map<IntVec, Int> total;  // canonical primitive direction -> summed length
    RatVec t = Z.translate;
    for (const auto& g : Z.generators.cols) {
        IntVec p = primitive_part(g);
        IntVec cp = canonical_sign(p);
        Int len = segment_length(g);
        if (cp != p) {
            for (int i = 0; i < Z.dim(); ++i) t[i] += Rat(g[i]);
        }
        total[cp] += len;
    }
    IntMat gens;
    gens.rows = Z.dim();
    for (const auto& [dir, len] : total) gens.cols.push_back(scale(len, dir));
    std::sort(gens.cols.begin(), gens.cols.end(), lex_less);
    return Zonotope{std::move(gens), std::move(t)};
}

Zonotope dilate(const Zonotope& Z, int n) {
    if (n < 0) throw std::invalid_argument("dilate: negative factor");
    IntMat gens;
    gens.rows = Z.dim();
    if (n > 0)
        for (const auto& g : Z.generators.cols) gens.cols.push_back(scale(n, g));
    RatVec t(Z.dim());
    for (int i = 0; i < Z.dim(); ++i) t[i] = Rat(n) * Z.translate[i];
    return Zonotope{std::move(gens), std::move(t)};
}

std::pair<Rat, Rat> support_interval(const Zonotope& Z, const IntVec& u) {
    if (is_zero_vec(u)) throw std::invalid_argument("support_interval: zero direction");
    Rat base = dot_rat(u, Z.translate);
    Rat lo = base, hi = base;
    for (const auto& g : Z.generators.cols) {
        Int s = dot(u, g);
        if (s > 0) hi += Rat(s);
        else lo += Rat(s);
    }
    return {lo, hi};
}

namespace {

// Primitive canonical normals orthogonal to (d-1)-subsets of the given
// generator columns, within the sublattice orthogonal to `constrain`
// (for full-dimensional use, `constrain` is empty).
std::vector<IntVec> normal_candidates(const IntMat& gens, const std::vector<IntVec>& constrain, int d) {
    std::vector<IntVec> out;
    auto push = [&](const IntVec& raw) {
        if (is_zero_vec(raw)) return;
        IntVec u = canonical_sign(primitive_part(raw));
        if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
    };
    if (constrain.empty()) {
        if (d == 1) {
            push({Int(1)});
        } else if (d == 2) {
            for (const auto& g : gens.cols) push(rotate90(g));
        } else {
            for (int i = 0; i < gens.ncols(); ++i)
                for (int j = i + 1; j < gens.ncols(); ++j) push(cross(gens.cols[i], gens.cols[j]));
        }
    } else {
        // rank-2 span in R^3: in-plane edge normals
        for (const auto& g : gens.cols) push(cross(constrain[0], g));
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace

std::vector<FacetDirection> facet_directions(const Zonotope& Z) {
    require_geometry_dim(Z);
    if (!Z.full_dimensional()) throw std::invalid_argument("facet_directions: zonotope is degenerate");
    std::vector<FacetDirection> out;
    for (const auto& u : normal_candidates(Z.generators, {}, Z.dim())) {
        auto [lo, hi] = support_interval(Z, u);
        out.push_back({u, lo, hi});
    }
    return out;
}

HRep hrep(const Zonotope& Z) {
    require_geometry_dim(Z);
    int d = Z.dim();
    int r = Z.rank();
    HRep H;
    if (r == d) {
        H.facets = facet_directions(Z);
        return H;
    }
    auto add_equality = [&](const IntVec& u) {
        Rat val = dot_rat(u, Z.translate);
        H.equalities.push_back({u, val, val});
    };
    if (r == 0) {
        for (int i = 0; i < d; ++i) {
            IntVec e(d, 0);
            e[i] = 1;
            add_equality(e);
        }
        return H;
    }
    if (r == 1) {
        IntVec p = canonical_sign(primitive_part(Z.generators.cols[0]));
        if (d == 2) {
            add_equality(canonical_sign(rotate90(p)));
        } else {  // d == 3
            for (const auto& b : hyperplane_lattice_basis(p)) add_equality(b);
        }
        auto [lo, hi] = support_interval(Z, p);
        H.facets.push_back({p, lo, hi});
        return H;
    }
    // r == 2, d == 3
    IntVec w;
    for (int i = 0; i < Z.num_generators() && w.empty(); ++i)
        for (int j = i + 1; j < Z.num_generators(); ++j) {
            IntVec c = cross(Z.generators.cols[i], Z.generators.cols[j]);
            if (!is_zero_vec(c)) {
                w = canonical_sign(primitive_part(c));
                break;
            }
        }
    add_equality(w);
    for (const auto& u : normal_candidates(Z.generators, {w}, d)) {
        auto [lo, hi] = support_interval(Z, u);
        H.facets.push_back({u, lo, hi});
    }
    return H;
}

bool contains(const Zonotope& Z, const RatVec& x, bool strict) {
    if (static_cast<int>(x.size()) != Z.dim()) throw std::invalid_argument("contains: dimension mismatch");
    if (strict && !Z.full_dimensional())
        throw std::invalid_argument("contains: strict containment requires a full-dimensional zonotope");
    HRep H = hrep(Z);
    for (const auto& e : H.equalities)
        if (dot_rat(e.normal, x) != e.lo) return false;
    for (const auto& f : H.facets) {
        Rat v = dot_rat(f.normal, x);
        if (strict ? !(f.lo < v && v < f.hi) : !(f.lo <= v && v <= f.hi)) return false;
    }
    return true;
}

namespace {

struct Slab {
    IntVec normal;
    Rat lo, hi;
    bool strict;
};

// Shared enumerator: walks the bounding box over the first d-1 axes and
// solves the last coordinate's feasible interval from the slabs exactly.
template <typename Emit>
void enumerate_points(const Zonotope& Z, bool strict, Emit&& emit) {
    int d = Z.dim();
    HRep H = hrep(Z);
    std::vector<Slab> slabs;
    for (const auto& e : H.equalities) slabs.push_back({e.normal, e.lo, e.hi, false});
    for (const auto& f : H.facets) slabs.push_back({f.normal, f.lo, f.hi, strict});

    std::vector<Int> box_lo(d), box_hi(d);
    for (int i = 0; i < d; ++i) {
        IntVec e(d, 0);
        e[i] = 1;
        auto [lo, hi] = support_interval(Z, e);
        box_lo[i] = rat_ceil(lo);
        box_hi[i] = rat_floor(hi);
        if (box_lo[i] > box_hi[i]) return;
    }

    IntVec x(d, 0);
    for (int i = 0; i + 1 < d; ++i) x[i] = box_lo[i];

    while (true) {
        // feasible interval for the last coordinate given the prefix
        Int zlo = box_lo[d - 1], zhi = box_hi[d - 1];
        bool empty = false;
        for (const auto& s : slabs) {
            Int a = 0;
            for (int i = 0; i + 1 < d; ++i) a += s.normal[i] * x[i];
            const Int& c = s.normal[d - 1];
            if (c == 0) {
                Rat av(a);
                if (s.strict ? !(s.lo < av && av < s.hi) : !(s.lo <= av && av <= s.hi)) {
                    empty = true;
                    break;
                }
                continue;
            }
            Rat q_lo = (s.lo - Rat(a)) / Rat(c);
            Rat q_hi = (s.hi - Rat(a)) / Rat(c);
            if (c < 0) std::swap(q_lo, q_hi);
            Int zl = s.strict ? rat_floor(q_lo) + 1 : rat_ceil(q_lo);
            Int zh = s.strict ? rat_ceil(q_hi) - 1 : rat_floor(q_hi);
            if (zl > zlo) zlo = zl;
            if (zh < zhi) zhi = zh;
            if (zlo > zhi) {
                empty = true;
                break;
            }
        }
        if (!empty)
            for (Int z = zlo; z <= zhi; ++z) {
                x[d - 1] = z;
                if (!emit(x)) return;
            }

        // advance the prefix odometer (last prefix axis fastest)
        int i = d - 2;
        while (i >= 0) {
            if (x[i] < box_hi[i]) {
                ++x[i];
                break;
            }
            x[i] = box_lo[i];
            --i;
        }
        if (i < 0) break;
    }
}

}  // namespace

std::vector<IntVec> lattice_points(const Zonotope& Z, int n) {
    if (n < 0) throw std::invalid_argument("lattice_points: negative dilate");
    Zonotope D = dilate(Z, n);
    std::vector<IntVec> pts;
    enumerate_points(D, false, [&](const IntVec& x) {
        pts.push_back(x);
        return true;
    });
    return pts;
}

Int count_lattice_points(const Zonotope& Z, int n) {
    if (n < 0) throw std::invalid_argument("count_lattice_points: negative dilate");
    Zonotope D = dilate(Z, n);
    Int count = 0;
    enumerate_points(D, false, [&](const IntVec&) {
        ++count;
        return true;
    });
    return count;
}

Int bounding_box_cells(const Zonotope& Z, int n) {
    Zonotope D = dilate(Z, n);
    Int cells = 1;
    for (int i = 0; i < D.dim(); ++i) {
        IntVec e(D.dim(), 0);
        e[i] = 1;
        auto [lo, hi] = support_interval(D, e);
        Int side = rat_floor(hi) - rat_ceil(lo) + 1;
        if (side <= 0) return 0;
        cells *= side;
    }
    return cells;
}

std::vector<IntVec> interior_lattice_points(const Zonotope& Z) {
    if (!Z.full_dimensional())
        throw std::invalid_argument("interior_lattice_points: zonotope is degenerate");
    std::vector<IntVec> pts;
    enumerate_points(Z, true, [&](const IntVec& x) {
        pts.push_back(x);
        return true;
    });
    return pts;
}

bool has_interior_lattice_point(const Zonotope& Z) {
    if (!Z.full_dimensional())
        throw std::invalid_argument("has_interior_lattice_point: zonotope is degenerate");
    bool found = false;
    enumerate_points(Z, true, [&](const IntVec&) {
        found = true;
        return false;
    });
    return found;
}

Int width_in_direction(const Zonotope& Z, const IntVec& u) {
    if (is_zero_vec(u)) throw std::invalid_argument("width_in_direction: zero direction");
    if (static_cast<int>(u.size()) != Z.dim())
        throw std::invalid_argument("width_in_direction: dimension mismatch");
    Int w = 0;
    for (const auto& g : Z.generators.cols) {
        Int s = dot(u, g);
        w += (s < 0) ? -s : s;
    }
    return w;
}

Int lattice_width_search_bound(const Zonotope& Z) {
    int d = Z.dim();
    Int W0 = -1;
    for (int i = 0; i < d; ++i) {
        IntVec e(d, 0);
        e[i] = 1;
        Int w = width_in_direction(Z, e);
        if (W0 < 0 || w < W0) W0 = w;
    }
    for (const auto& f : facet_directions(Z)) {
        Int w = width_in_direction(Z, f.normal);
        if (w < W0) W0 = w;
    }
    // first full-rank generator subset
    IntMat M;
    for (const auto& idx : independent_subsets(Z.generators)) {
        if (static_cast<int>(idx.size()) == d) {
            M = Z.generators.submatrix_cols(idx);
            break;
        }
    }
    IntMat adj = adjugate(transpose(M));
    Int max_row_sum = 0;
    for (int i = 0; i < d; ++i) {
        Int s = 0;
        for (int j = 0; j < d; ++j) {
            Int v = adj.at(i, j);
            s += (v < 0) ? -v : v;
        }
        if (s > max_row_sum) max_row_sum = s;
    }
    Int D = det(M);
    if (D < 0) D = -D;
    Int B = ceil_div(W0 * max_row_sum, D);
    return B < 1 ? Int(1) : B;
}

WidthResult lattice_width(const Zonotope& Z) {
    require_geometry_dim(Z);
    int d = Z.dim();
    if (!Z.full_dimensional()) {
        HRep H = hrep(Z);
        IntVec witness;
        for (const auto& e : H.equalities)
            if (witness.empty() || lex_less(e.normal, witness)) witness = e.normal;
        return {Int(0), witness};
    }
    Int B = lattice_width_search_bound(Z);
    if (B > 1000000)
        throw std::runtime_error("lattice_width: search bound " + B.str() +
                                 " is too large to enumerate");
    long bound = static_cast<long>(B);

    WidthResult best{Int(-1), {}};
    IntVec u(d, 0);
    // lexicographic sweep over the box; canonical + primitive directions only
    std::vector<long> coord(d, -bound);
    auto consider = [&]() {
        for (int i = 0; i < d; ++i) u[i] = coord[i];
        // canonical sign: first nonzero entry positive
        for (int i = 0; i < d; ++i) {
            if (coord[i] < 0) return;
            if (coord[i] > 0) break;
        }
        if (is_zero_vec(u) || entry_gcd(u) != 1) return;
        Int w = width_in_direction(Z, u);
        if (best.width < 0 || w < best.width) best = {w, u};
    };
    while (true) {
        consider();
        int i = d - 1;
        while (i >= 0 && coord[i] == bound) coord[i--] = -bound;
        if (i < 0) break;
        ++coord[i];
    }
    return best;
}

std::optional<Width1Decomposition> width1_decomposition(const Zonotope& Z) {
    require_geometry_dim(Z);
    if (Z.dim() < 2) throw std::invalid_argument("width1_decomposition: dimension must be >= 2");
    if (!Z.full_dimensional()) throw std::invalid_argument("width1_decomposition: zonotope is degenerate");
    if (!Z.integer_translate())
        throw std::invalid_argument("width1_decomposition: non-lattice translate");
    int d = Z.dim();

    IntVec direction;
    for (const auto& f : facet_directions(Z)) {
        if (width_in_direction(Z, f.normal) == 1) {
            direction = f.normal;
            break;
        }
    }
    if (direction.empty()) return std::nullopt;

    // The width-1 direction sees exactly one crossing generator with
    // v.g = +-1; flip it positive (an integer translation of the set).
    IntVec t(d);
    for (int i = 0; i < d; ++i) t[i] = to_integer(Z.translate[i]);
    IntMat gens = Z.generators;
    int crossing = -1;
    for (int j = 0; j < gens.ncols(); ++j) {
        Int s = dot(direction, gens.cols[j]);
        if (s == 0) continue;
        crossing = j;
        if (s < 0) {
            t = add(t, gens.cols[j]);
            gens.cols[j] = negate(gens.cols[j]);
        }
    }

    auto basis = hyperplane_lattice_basis(direction);
    IntMat U = unimodular_complement(basis, gens.cols[crossing]);

    IntMat factor_gens;
    factor_gens.rows = d - 1;
    for (int j = 0; j < gens.ncols(); ++j) {
        if (j == crossing) continue;
        IntVec img = mat_vec(U, gens.cols[j]);
        factor_gens.cols.push_back(IntVec(img.begin(), img.end() - 1));
    }
    IntVec shift = negate(mat_vec(U, t));

    Width1Decomposition result;
    result.factor = make_zonotope(std::move(factor_gens));
    result.transform = std::move(U);
    result.shift = std::move(shift);
    result.direction = std::move(direction);
    return result;
}

double solid_angle_sum_2d(const Zonotope& Z) {
    if (Z.dim() != 2) throw std::invalid_argument("solid_angle_sum_2d: ambient dimension must be 2");
    if (!Z.full_dimensional()) throw std::invalid_argument("solid_angle_sum_2d: zonotope is degenerate");
    auto facets = facet_directions(Z);

    double total = 0.0;
    enumerate_points(Z, false, [&](const IntVec& x) {
        RatVec xr(x.size());
        for (size_t i = 0; i < x.size(); ++i) xr[i] = Rat(x[i]);
        std::vector<IntVec> outward;
        for (const auto& f : facets) {
            Rat v = dot_rat(f.normal, xr);
            if (v == f.lo) outward.push_back(negate(f.normal));
            if (v == f.hi) outward.push_back(f.normal);
        }
        if (outward.empty()) {
            total += 1.0;
        } else if (outward.size() == 1) {
            total += 0.5;
        } else if (outward.size() == 2) {
            // tangent cone angle at a vertex: pi minus the normals' angle
            double n1x = static_cast<double>(outward[0][0]), n1y = static_cast<double>(outward[0][1]);
            double n2x = static_cast<double>(outward[1][0]), n2y = static_cast<double>(outward[1][1]);
            double c = (n1x * n2x + n1y * n2y) /
                       (std::sqrt(n1x * n1x + n1y * n1y) * std::sqrt(n2x * n2x + n2y * n2y));
            c = std::clamp(c, -1.0, 1.0);
            total += (M_PI - std::acos(c)) / (2.0 * M_PI);
        } else {
            throw std::logic_error("solid_angle_sum_2d: lattice point tight on more than two facets");
        }
        return true;
    });
    return total;
}

Int volume(const Zonotope& Z) {
    if (!Z.full_dimensional()) throw std::invalid_argument("volume: zonotope is degenerate");
    int d = Z.dim();
    Int vol = 0;
    for (const auto& idx : independent_subsets(Z.generators)) {
        if (static_cast<int>(idx.size()) != d) continue;
        Int D = det(Z.generators.submatrix_cols(idx));
        vol += (D < 0) ? -D : D;
    }
    return vol;
}

}  // namespace zonoehr
