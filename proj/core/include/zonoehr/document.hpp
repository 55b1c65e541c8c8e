#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "zonoehr/ehrhart.hpp"

namespace zonoehr {

using ordered_json = nlohmann::ordered_json;

// Wire format for a zonotope:
//   {"dim": int, "generators": [[int,...],...],
//    "translate": ["p/q",...] (optional), "merge_parallel": bool (optional)}
// Rationals are canonical strings: lowest terms, positive denominator.
struct ZonotopeDocument {
    int dim = 0;
    std::vector<std::vector<long long>> generators;
    std::optional<std::vector<std::string>> translate;
    bool merge_parallel = false;

    bool operator==(const ZonotopeDocument& other) const = default;
};

ZonotopeDocument parse_document(const ordered_json& j);
ZonotopeDocument parse_document(const std::string& text);
ordered_json serialize_document(const ZonotopeDocument& doc);

Zonotope zonotope_from_document(const ZonotopeDocument& doc);
ZonotopeDocument document_from_zonotope(const Zonotope& Z, bool merge_parallel = false);

// Ascending coefficient list as canonical rational strings.
std::vector<std::string> poly_strings(const Poly& p);
std::vector<std::string> rat_strings(const std::vector<Rat>& v);

}  // namespace zonoehr
