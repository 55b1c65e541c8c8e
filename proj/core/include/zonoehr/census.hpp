#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zonoehr/classify.hpp"
#include "zonoehr/document.hpp"

namespace zonoehr {

// Exhaustive family of canonical generator matrices: columns are nonzero
// vectors with entries in [-max_entry, max_entry], flipped to positive
// leading sign, listed as lexicographically sorted multisets of size
// 1..max_generators. Sign/order duplicates are visited once.
std::vector<IntMat> canonical_family(int dim, int max_entry, int max_generators);

// Number of instances canonical_family would produce (budget check).
Int canonical_family_size(int dim, int max_entry, int max_generators);

// Seeded random generator matrices (not canonicalized): column count in
// 1..max_generators, entries in [-max_entry, max_entry], no zero columns.
std::vector<IntMat> random_generator_matrices(int dim, int max_entry, int max_generators,
                                              int count, unsigned long long seed);

bool pairwise_linearly_independent(const IntMat& gens);

// One zonotope's verification record: Stanley vs counting oracle, basis
// conversions and their theorems, degree dichotomy, checkers, and for
// full-dimensional 3D instances the degree-2 classifier.
struct InstanceResult {
    std::string key;
    ordered_json record;
    bool ok = false;
    std::vector<std::string> violations;
    int rank = 0;
    bool full_dimensional = false;
    std::string classification;  // "width1_product", "exceptional", "not_degree2", ""
};

InstanceResult verify_instance(const Zonotope& Z, const Int& cell_budget = Int(100000000));

struct CensusConfig {
    int dim = 2;
    int max_entry = 2;
    int max_generators = 3;
    Int cell_budget = Int(100000000);
    Int max_instances = Int(1000000);
    int jobs = 0;  // 0: hardware concurrency
    int random_count = 0;
    unsigned long long seed = 1;
};

struct CensusSummary {
    long long instances = 0;
    long long violations = 0;
    long long full_dimensional = 0;
    long long width1_products = 0;
    long long exceptional = 0;
    long long not_degree2 = 0;
    std::vector<std::string> first_violations;  // up to 10, for the report
    ordered_json to_json() const;
};

// Runs every instance (concurrently, deterministic output order) and writes
// one JSON-lines record per instance to jsonl_out when given.
CensusSummary run_census(const CensusConfig& config, std::ostream* jsonl_out);

}  // namespace zonoehr
