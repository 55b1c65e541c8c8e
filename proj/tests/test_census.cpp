#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "zonoehr/census.hpp"

using namespace zonoehr;
using zonoehr::testing::from_columns;

TEST_CASE("canonical_family enumerates sign/order classes once") {
    auto family = canonical_family(2, 1, 2);
    // canonical nonzero vectors in [-1,1]^2: (0,1), (1,-1), (1,0), (1,1)
    CHECK(canonical_family_size(2, 1, 2) == 14);  // 4 singles + 10 multisets of two
    CHECK(family.size() == 14);
    for (const auto& M : family) {
        for (const auto& g : M.cols) {
            CHECK_FALSE(is_zero_vec(g));
            // canonical sign
            CHECK(g == canonical_sign(g));
        }
        CHECK(std::is_sorted(M.cols.begin(), M.cols.end(), lex_less));
    }
    // all distinct
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i + 1; j < family.size(); ++j) CHECK_FALSE(family[i] == family[j]);
}

TEST_CASE("random_generator_matrices is deterministic per seed") {
    auto a = random_generator_matrices(3, 3, 4, 10, 42);
    auto b = random_generator_matrices(3, 3, 4, 10, 42);
    auto c = random_generator_matrices(3, 3, 4, 10, 43);
    CHECK(a.size() == 10);
    bool all_equal = true;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) all_equal = false;
    CHECK(all_equal);
    bool any_different = false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == c[i])) any_different = true;
    CHECK(any_different);
    for (const auto& M : a)
        for (const auto& g : M.cols) CHECK_FALSE(is_zero_vec(g));
}

TEST_CASE("pairwise_linearly_independent") {
    CHECK(pairwise_linearly_independent(from_columns(2, {{1, 0}, {0, 2}, {1, 2}}).generators));
    CHECK_FALSE(pairwise_linearly_independent(from_columns(2, {{1, 0}, {2, 0}, {0, 1}}).generators));
}

TEST_CASE("verify_instance accepts sound zonotopes") {
    InstanceResult r = verify_instance(from_columns(3, {{1, 1, 0}, {-1, 1, 0}, {1, 1, 2}}));
    CHECK(r.ok);
    CHECK(r.violations.empty());
    CHECK(r.rank == 3);
    CHECK(r.classification == "exceptional");
    CHECK(r.record["ehr"] == std::vector<std::string>{"1", "3", "6", "4"});
    CHECK(r.record["degree"] == 2);

    r = verify_instance(from_columns(2, {{1, 0}, {2, 0}}));  // rank 1
    CHECK(r.ok);
    CHECK(r.rank == 1);
    CHECK(r.classification.empty());
}

TEST_CASE("run_census small family is violation free and self-contained") {
    CensusConfig cfg;
    cfg.dim = 2;
    cfg.max_entry = 1;
    cfg.max_generators = 2;
    cfg.jobs = 2;
    std::ostringstream jsonl;
    CensusSummary s = run_census(cfg, &jsonl);
    CHECK(s.instances == 14);
    CHECK(s.violations == 0);

    // records are self-contained: the stored polynomial is reproducible
    std::istringstream lines(jsonl.str());
    std::string line;
    int parsed = 0;
    while (std::getline(lines, line)) {
        ordered_json rec = ordered_json::parse(line);
        ZonotopeDocument doc;
        doc.dim = rec["dim"].get<int>();
        for (const auto& g : rec["generators"])
            doc.generators.push_back(g.get<std::vector<long long>>());
        Poly p = ehrhart_stanley(zonotope_from_document(doc));
        CHECK(poly_strings(p) == rec["ehr"].get<std::vector<std::string>>());
        ++parsed;
    }
    CHECK(parsed == 14);

    // deterministic regardless of the worker count
    std::ostringstream serial;
    cfg.jobs = 1;
    run_census(cfg, &serial);
    CHECK(serial.str() == jsonl.str());
}

TEST_CASE("run_census respects the instance budget") {
    CensusConfig cfg;
    cfg.dim = 2;
    cfg.max_entry = 3;
    cfg.max_generators = 3;
    cfg.max_instances = 10;
    CHECK_THROWS_AS(run_census(cfg, nullptr), budget_exceeded);
}
