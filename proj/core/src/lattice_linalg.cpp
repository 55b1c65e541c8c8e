#include "zonoehr/lattice_linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace zonoehr {

IntMat::IntMat(int rows_, std::vector<IntVec> cols_) : rows(rows_), cols(std::move(cols_)) {
    for (const auto& c : cols)
        if (static_cast<int>(c.size()) != rows)
            throw std::invalid_argument("IntMat: column dimension mismatch");
}

IntMat IntMat::identity(int d) {
    IntMat M;
    M.rows = d;
    M.cols.assign(d, IntVec(d, 0));
    for (int i = 0; i < d; ++i) M.cols[i][i] = 1;
    return M;
}

IntMat IntMat::submatrix_cols(const std::vector<int>& col_idx) const {
    IntMat S;
    S.rows = rows;
    S.cols.reserve(col_idx.size());
    for (int j : col_idx) S.cols.push_back(cols.at(j));
    return S;
}

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVec scale(const Int& c, const IntVec& v) {
    IntVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

IntVec negate(const IntVec& v) { return scale(-1, v); }

bool is_zero_vec(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool lex_less(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

IntVec canonical_sign(IntVec v) {
    for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0) for (Int& y : v) y = -y;
        break;
    }
    return v;
}

Int entry_gcd(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

IntVec primitive_part(const IntVec& v) {
    Int g = entry_gcd(v);
    if (g == 0) throw std::invalid_argument("primitive_part: zero vector");
    IntVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

Int segment_length(const IntVec& v) {
    Int g = entry_gcd(v);
    if (g == 0) throw std::invalid_argument("segment_length: zero vector");
    return g;
}

IntVec mat_vec(const IntMat& M, const IntVec& x) {
    if (static_cast<int>(x.size()) != M.ncols()) throw std::invalid_argument("mat_vec: dimension mismatch");
    IntVec r(M.rows, 0);
    for (int j = 0; j < M.ncols(); ++j)
        for (int i = 0; i < M.rows; ++i) r[i] += M.cols[j][i] * x[j];
    return r;
}

IntMat mat_mul(const IntMat& A, const IntMat& B) {
    if (A.ncols() != B.rows) throw std::invalid_argument("mat_mul: dimension mismatch");
    IntMat C;
    C.rows = A.rows;
    C.cols.reserve(B.ncols());
    for (int j = 0; j < B.ncols(); ++j) C.cols.push_back(mat_vec(A, B.cols[j]));
    return C;
}

IntMat transpose(const IntMat& M) {
    IntMat T;
    T.rows = M.ncols();
    T.cols.assign(M.rows, IntVec(M.ncols()));
    for (int j = 0; j < M.ncols(); ++j)
        for (int i = 0; i < M.rows; ++i) T.cols[i][j] = M.cols[j][i];
    return T;
}

Int det(const IntMat& M) {
    int n = M.rows;
    if (M.ncols() != n) throw std::invalid_argument("det: matrix not square");
    if (n == 0) return 1;
    if (n == 1) return M.at(0, 0);
    if (n == 2) return M.at(0, 0) * M.at(1, 1) - M.at(0, 1) * M.at(1, 0);
    // Laplace expansion along the first row.
    Int result = 0;
    std::vector<int> all_cols(n);
    for (int j = 0; j < n; ++j) all_cols[j] = j;
    for (int j = 0; j < n; ++j) {
        if (M.at(0, j) == 0) continue;
        std::vector<int> rest;
        for (int k = 0; k < n; ++k)
            if (k != j) rest.push_back(k);
        IntMat sub = M.submatrix_cols(rest);
        IntMat minor;
        minor.rows = n - 1;
        for (const auto& c : sub.cols) minor.cols.emplace_back(c.begin() + 1, c.end());
        Int term = M.at(0, j) * det(minor);
        result += (j % 2 == 0) ? term : -term;
    }
    return result;
}

IntMat adjugate(const IntMat& M) {
    int n = M.rows;
    if (M.ncols() != n) throw std::invalid_argument("adjugate: matrix not square");
    IntMat A;
    A.rows = n;
    A.cols.assign(n, IntVec(n, 0));
    if (n == 0) return A;
    if (n == 1) {
        A.cols[0][0] = 1;
        return A;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // Cofactor C_ji: delete row j, column i.
            IntMat minor;
            minor.rows = n - 1;
            for (int c = 0; c < n; ++c) {
                if (c == i) continue;
                IntVec col;
                col.reserve(n - 1);
                for (int r = 0; r < n; ++r)
                    if (r != j) col.push_back(M.at(r, c));
                minor.cols.push_back(std::move(col));
            }
            Int cof = det(minor);
            A.at(i, j) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    }
    return A;
}

int rank(const IntMat& M) {
    // Bareiss fraction-free elimination on a row-major working copy.
    int nr = M.rows, nc = M.ncols();
    if (nr == 0 || nc == 0) return 0;
    std::vector<IntVec> a(nr, IntVec(nc));
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) a[i][j] = M.at(i, j);

    int r = 0;
    Int prev = 1;
    for (int c = 0; c < nc && r < nr; ++c) {
        int pivot = -1;
        for (int i = r; i < nr; ++i)
            if (a[i][c] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(a[r], a[pivot]);
        for (int i = r + 1; i < nr; ++i) {
            for (int j = c + 1; j < nc; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

namespace {

// Visits all k-subsets of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(int n, int k, F&& visit) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        visit(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

Int gcd_of_minors(const IntMat& M, int k) {
    int nr = M.rows, nc = M.ncols();
    if (k < 1 || k > std::min(nr, nc)) throw std::invalid_argument("gcd_of_minors: k out of range");
    Int g = 0;
    for_each_subset(nc, k, [&](const std::vector<int>& cs) {
        IntMat colsub = M.submatrix_cols(cs);
        for_each_subset(nr, k, [&](const std::vector<int>& rs) {
            IntMat minor;
            minor.rows = k;
            for (const auto& col : colsub.cols) {
                IntVec v(k);
                for (int i = 0; i < k; ++i) v[i] = col[rs[i]];
                minor.cols.push_back(std::move(v));
            }
            g = gcd(g, det(minor));
        });
    });
    return g < 0 ? -g : g;
}

std::vector<std::vector<int>> independent_subsets(const IntMat& M) {
    std::vector<std::vector<int>> out;
    out.push_back({});
    int m = M.ncols();
    int max_k = std::min(m, M.rows);
    for (int k = 1; k <= max_k; ++k) {
        for_each_subset(m, k, [&](const std::vector<int>& idx) {
            if (rank(M.submatrix_cols(idx)) == k) out.push_back(idx);
        });
    }
    return out;
}

std::pair<std::vector<IntVec>, IntVec> hyperplane_basis_with_transversal(const IntVec& v) {
    int d = static_cast<int>(v.size());
    if (d < 1) throw std::invalid_argument("hyperplane basis: empty vector");
    if (is_zero_vec(v)) throw std::invalid_argument("hyperplane basis: zero vector");
    if (entry_gcd(v) != 1) throw std::invalid_argument("hyperplane basis: vector not primitive");

    // Column reduction of the 1 x d row vector v: track the unimodular U with
    // v.U = (1, 0, ..., 0). Column 0 of U is the transversal, the rest span
    // the kernel lattice.
    IntMat U = IntMat::identity(d);
    IntVec r = v;
    int pivot = -1;
    for (int j = 0; j < d; ++j) {
        if (r[j] == 0) continue;
        if (pivot < 0) { pivot = j; continue; }
        XGcd e = xgcd(r[pivot], r[j]);
        Int ap = r[pivot] / e.g, aj = r[j] / e.g;
        IntVec colp = U.cols[pivot], colj = U.cols[j];
        U.cols[pivot] = add(scale(e.s, colp), scale(e.t, colj));
        U.cols[j] = sub(scale(ap, colj), scale(aj, colp));
        r[pivot] = e.g;
        r[j] = 0;
    }
    if (pivot != 0)
        std::rotate(U.cols.begin(), U.cols.begin() + pivot, U.cols.begin() + pivot + 1);
    if (dot(v, U.cols[0]) < 0) U.cols[0] = negate(U.cols[0]);

    std::vector<IntVec> basis;
    basis.reserve(d - 1);
    for (int j = 1; j < d; ++j) basis.push_back(canonical_sign(U.cols[j]));
    return {basis, U.cols[0]};
}

std::vector<IntVec> hyperplane_lattice_basis(const IntVec& v) {
    if (v.size() < 2) throw std::invalid_argument("hyperplane basis: dimension must be >= 2");
    return hyperplane_basis_with_transversal(v).first;
}

IntMat unimodular_complement(const std::vector<IntVec>& basis, const IntVec& w) {
    int d = static_cast<int>(w.size());
    if (static_cast<int>(basis.size()) != d - 1)
        throw std::invalid_argument("unimodular_complement: need d-1 basis vectors");
    IntMat B;
    B.rows = d;
    for (const auto& b : basis) {
        if (static_cast<int>(b.size()) != d)
            throw std::invalid_argument("unimodular_complement: dimension mismatch");
        B.cols.push_back(b);
    }
    B.cols.push_back(w);
    Int D = det(B);
    if (D != 1 && D != -1) throw std::invalid_argument("unimodular_complement: not a lattice basis");
    IntMat U = adjugate(B);
    if (D == -1)
        for (auto& col : U.cols)
            for (auto& x : col) x = -x;
    return U;
}

}  // namespace zonoehr
