#include "zonoehr/census.hpp"

#include <atomic>
#include <mutex>
#include <ostream>
#include <random>
#include <thread>

namespace zonoehr {

namespace {

std::vector<IntVec> canonical_vectors(int dim, int max_entry) {
    std::vector<IntVec> out;
    IntVec v(dim, 0);
    std::vector<long> c(dim, -max_entry);
    while (true) {
        bool canonical = false, nonzero = false;
        for (int i = 0; i < dim; ++i) {
            if (c[i] != 0) {
                canonical = c[i] > 0;
                nonzero = true;
                break;
            }
        }
        if (nonzero && canonical) {
            for (int i = 0; i < dim; ++i) v[i] = c[i];
            out.push_back(v);
        }
        int i = dim - 1;
        while (i >= 0 && c[i] == max_entry) c[i--] = -max_entry;
        if (i < 0) break;
        ++c[i];
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

Int binom(const Int& n, int k) {
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

}  // namespace

Int canonical_family_size(int dim, int max_entry, int max_generators) {
    Int V = static_cast<long>(canonical_vectors(dim, max_entry).size());
    Int total = 0;
    for (int m = 1; m <= max_generators; ++m) total += binom(V + m - 1, m);
    return total;
}

std::vector<IntMat> canonical_family(int dim, int max_entry, int max_generators) {
    auto vecs = canonical_vectors(dim, max_entry);
    std::vector<IntMat> out;
    std::vector<int> pick;
    auto emit = [&]() {
        IntMat M;
        M.rows = dim;
        for (int i : pick) M.cols.push_back(vecs[i]);
        out.push_back(std::move(M));
    };
    // multisets in lexicographic order, sizes ascending
    for (int m = 1; m <= max_generators; ++m) {
        pick.assign(m, 0);
        while (true) {
            emit();
            int i = m - 1;
            while (i >= 0 && pick[i] == static_cast<int>(vecs.size()) - 1) --i;
            if (i < 0) break;
            int next = pick[i] + 1;
            for (int j = i; j < m; ++j) pick[j] = next;
        }
    }
    return out;
}

std::vector<IntMat> random_generator_matrices(int dim, int max_entry, int max_generators,
                                              int count, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    long span = 2L * max_entry + 1;
    auto draw_entry = [&]() { return static_cast<long>(rng() % span) - max_entry; };
    std::vector<IntMat> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        IntMat M;
        M.rows = dim;
        int m = 1 + static_cast<int>(rng() % max_generators);
        for (int j = 0; j < m; ++j) {
            IntVec g(dim);
            do {
                for (int k = 0; k < dim; ++k) g[k] = draw_entry();
            } while (is_zero_vec(g));
            M.cols.push_back(g);
        }
        out.push_back(std::move(M));
    }
    return out;
}

bool pairwise_linearly_independent(const IntMat& gens) {
    for (int i = 0; i < gens.ncols(); ++i)
        for (int j = i + 1; j < gens.ncols(); ++j)
            if (rank(gens.submatrix_cols({i, j})) < 2) return false;
    return true;
}

namespace {

ordered_json generators_json(const IntMat& gens) {
    ordered_json arr = ordered_json::array();
    for (const auto& g : gens.cols) {
        ordered_json row = ordered_json::array();
        for (const auto& x : g) row.push_back(static_cast<long long>(x));
        arr.push_back(row);
    }
    return arr;
}

bool multiset_equal(std::vector<IntVec> a, std::vector<IntVec> b) {
    std::sort(a.begin(), a.end(), lex_less);
    std::sort(b.begin(), b.end(), lex_less);
    return a == b;
}

}  // namespace

InstanceResult verify_instance(const Zonotope& Z, const Int& cell_budget) {
    InstanceResult res;
    res.key = generators_json(Z.generators).dump();
    res.rank = Z.rank();
    res.full_dimensional = res.rank == Z.dim();
    auto bad = [&](const std::string& what) { res.violations.push_back(what); };

    int d = Z.dim();
    int r = res.rank;

    Poly stanley = ehrhart_stanley(Z);
    OracleOptions opts;
    opts.cell_budget = cell_budget;
    Poly oracle = ehrhart_oracle(Z, opts);
    if (stanley != oracle) bad("stanley_oracle_mismatch");

    // Basis statements hold in the intrinsic dimension (the rank).
    CVector c = to_cbasis(stanley, r);
    if (!c.integral_nonnegative) bad("c_vector_not_nonnegative_integer");
    if (from_cbasis(c) != stanley) bad("c_basis_roundtrip_failed");
    HStarVector hs = hstar_from_poly(stanley, r);
    if (!hs.integral_nonnegative) bad("hstar_not_nonnegative_integer");
    HStarVector hs2 = hstar_via_eulerian(c);
    if (hs.h != hs2.h) bad("hstar_eulerian_route_mismatch");
    int degree = degree_of(hs);
    if (r == 0 ? degree != 0 : (degree != r && degree != r - 1)) bad("degree_dichotomy_violated");
    Int reciprocity = interior_count_reciprocity(stanley, r);

    res.record = ordered_json{{"key", res.key},
                              {"dim", d},
                              {"rank", r},
                              {"generators", generators_json(Z.generators)},
                              {"ehr", poly_strings(stanley)},
                              {"c", rat_strings(c.c)},
                              {"hstar", rat_strings(hs.h)},
                              {"degree", degree},
                              {"interior_count", reciprocity.str()}};

    if (res.full_dimensional) {
        Int interior = static_cast<long>(interior_lattice_points(Z).size());
        if (interior != reciprocity) bad("reciprocity_interior_count_mismatch");
        if (degree_via_dilates(Z, cell_budget) != degree) bad("degree_via_dilates_mismatch");

        if (d == 2) {
            if (!check_zono2d(c.c[0], c.c[1]).accepted) bad("zono2d_checker_rejected");
            auto [h1, h2] = map_c_to_hstar(c.c[0], c.c[1], 2);
            if (h1 != hs.h[1] || h2 != hs.h[2]) bad("hstar_map_mismatch_2d");
            auto [e1, e2] = map_c_to_e_2d(c.c[0], c.c[1]);
            if (e1 != stanley.coeff(1) || e2 != stanley.coeff(2)) bad("e_map_mismatch_2d");
            if (!check_scott(e1, e2).accepted) bad("scott_checker_rejected");
            if (!check_hstar_zono2d(hs.h[1], hs.h[2]).accepted) bad("hstar2d_checker_rejected");
        } else if (d == 3) {
            bool interior_empty = interior == 0;
            if ((c.c[2] == 0) != interior_empty) bad("c3_interior_dichotomy_violated");
            if (interior_empty) {
                if (!check_zono3d_deg2(c.c[0], c.c[1], c.c[2]).accepted)
                    bad("zono3d_checker_rejected");
                auto [h1, h2] = map_c_to_hstar(c.c[0], c.c[1], 3);
                if (h1 != hs.h[1] || h2 != hs.h[2]) bad("hstar_map_mismatch_3d");
                if (!check_hstar_zono3d_deg2(hs.h[1], hs.h[2]).accepted)
                    bad("hstar3d_checker_rejected");
            }
            try {
                Classification3d cls = classify_3d_deg2(Z);
                switch (cls.kind) {
                    case Classification3d::Kind::NotDegree2:
                        res.classification = "not_degree2";
                        if (degree == 2) bad("classifier_rejected_degree2_instance");
                        break;
                    case Classification3d::Kind::Width1Product: {
                        res.classification = "width1_product";
                        if (degree != 2) bad("classifier_accepted_degree3_instance");
                        Poly lifted = Poly({Rat(1), Rat(1)}) * ehrhart_stanley(*cls.factor);
                        if (lifted != stanley) bad("width1_factor_ehrhart_mismatch");
                        break;
                    }
                    case Classification3d::Kind::Exceptional: {
                        res.classification = "exceptional";
                        if (degree != 2) bad("classifier_accepted_degree3_instance");
                        Int dU = det(cls.map->transform);
                        if (dU != 1 && dU != -1) bad("exceptional_map_not_unimodular");
                        std::vector<IntVec> mapped;
                        for (const auto& p : lattice_points(Z, 1))
                            mapped.push_back(add(mat_vec(cls.map->transform, p), cls.map->shift));
                        if (!multiset_equal(mapped, lattice_points(exceptional_parallelepiped(), 1)))
                            bad("exceptional_map_not_point_bijection");
                        break;
                    }
                }
            } catch (const classification_contradiction& e) {
                bad(std::string("classification_contradiction: ") + e.what());
            }
        }
    }

    res.ok = res.violations.empty();
    res.record["classification"] = res.classification;
    res.record["ok"] = res.ok;
    res.record["violations"] = res.violations;
    return res;
}

ordered_json CensusSummary::to_json() const {
    return ordered_json{{"instances", instances},
                        {"violations", violations},
                        {"full_dimensional", full_dimensional},
                        {"width1_products", width1_products},
                        {"exceptional", exceptional},
                        {"not_degree2", not_degree2},
                        {"first_violations", first_violations}};
}

CensusSummary run_census(const CensusConfig& config, std::ostream* jsonl_out) {
    if (config.dim < 1 || config.dim > 3)
        throw std::invalid_argument("census: dimension must be 1..3");
    if (canonical_family_size(config.dim, config.max_entry, config.max_generators) +
            config.random_count >
        config.max_instances)
        throw budget_exceeded("census: instance budget exceeded");

    std::vector<IntMat> family = canonical_family(config.dim, config.max_entry, config.max_generators);
    if (config.random_count > 0) {
        auto extra = random_generator_matrices(config.dim, config.max_entry, config.max_generators,
                                               config.random_count, config.seed);
        family.insert(family.end(), extra.begin(), extra.end());
    }

    std::vector<InstanceResult> results(family.size());
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= family.size()) return;
            try {
                results[i] = verify_instance(Zonotope{family[i], RatVec(config.dim, Rat(0))},
                                             config.cell_budget);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    int jobs = config.jobs > 0 ? config.jobs
                               : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    CensusSummary summary;
    for (const auto& r : results) {
        ++summary.instances;
        if (!r.ok) {
            ++summary.violations;
            if (summary.first_violations.size() < 10)
                summary.first_violations.push_back(r.key + ": " + r.violations.front());
        }
        if (r.full_dimensional) ++summary.full_dimensional;
        if (r.classification == "width1_product") ++summary.width1_products;
        if (r.classification == "exceptional") ++summary.exceptional;
        if (r.classification == "not_degree2") ++summary.not_degree2;
        if (jsonl_out) *jsonl_out << r.record.dump() << "\n";
    }
    return summary;
}

}  // namespace zonoehr
