#include "zonoehr/document.hpp"

#include <algorithm>
#include <limits>

namespace zonoehr {

ZonotopeDocument parse_document(const ordered_json& j) {
    if (!j.is_object()) throw std::invalid_argument("document: expected a JSON object");
    ZonotopeDocument doc;
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw std::invalid_argument("document: missing integer field \"dim\"");
    doc.dim = j["dim"].get<int>();
    if (doc.dim < 1) throw std::invalid_argument("document: \"dim\" must be positive");
    if (!j.contains("generators") || !j["generators"].is_array())
        throw std::invalid_argument("document: missing array field \"generators\"");
    for (const auto& row : j["generators"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != doc.dim)
            throw std::invalid_argument("document: each generator must be an integer vector of length dim");
        std::vector<long long> g;
        for (const auto& x : row) {
            if (!x.is_number_integer())
                throw std::invalid_argument("document: generator entries must be integers");
            g.push_back(x.get<long long>());
        }
        doc.generators.push_back(std::move(g));
    }
    if (j.contains("translate")) {
        if (!j["translate"].is_array() || static_cast<int>(j["translate"].size()) != doc.dim)
            throw std::invalid_argument("document: \"translate\" must be a string array of length dim");
        std::vector<std::string> t;
        for (const auto& x : j["translate"]) {
            if (!x.is_string()) throw std::invalid_argument("document: translate entries must be \"p/q\" strings");
            parse_rational(x.get<std::string>());  // validate early
            t.push_back(x.get<std::string>());
        }
        doc.translate = std::move(t);
    }
    if (j.contains("merge_parallel")) {
        if (!j["merge_parallel"].is_boolean())
            throw std::invalid_argument("document: \"merge_parallel\" must be a boolean");
        doc.merge_parallel = j["merge_parallel"].get<bool>();
    }
    return doc;
}

ZonotopeDocument parse_document(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("document: malformed JSON");
    return parse_document(j);
}

ordered_json serialize_document(const ZonotopeDocument& doc) {
    ordered_json j;
    j["dim"] = doc.dim;
    j["generators"] = doc.generators;
    if (doc.translate) {
        // re-canonicalize so serialization is stable
        std::vector<std::string> t;
        for (const auto& s : *doc.translate) t.push_back(rational_string(parse_rational(s)));
        j["translate"] = t;
    }
    if (doc.merge_parallel) j["merge_parallel"] = true;
    return j;
}

Zonotope zonotope_from_document(const ZonotopeDocument& doc) {
    IntMat gens;
    gens.rows = doc.dim;
    for (const auto& g : doc.generators) gens.cols.push_back(IntVec(g.begin(), g.end()));
    RatVec t;
    if (doc.translate)
        for (const auto& s : *doc.translate) t.push_back(parse_rational(s));
    return make_zonotope(std::move(gens), std::move(t), doc.merge_parallel);
}

ZonotopeDocument document_from_zonotope(const Zonotope& Z, bool merge_parallel) {
    ZonotopeDocument doc;
    doc.dim = Z.dim();
    for (const auto& g : Z.generators.cols) {
        std::vector<long long> row;
        for (const auto& x : g) {
            if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
                throw std::domain_error("document: generator entry exceeds the JSON integer range");
            row.push_back(static_cast<long long>(x));
        }
        doc.generators.push_back(std::move(row));
    }
    bool zero_translate = std::all_of(Z.translate.begin(), Z.translate.end(),
                                      [](const Rat& r) { return r == 0; });
    if (!zero_translate) {
        std::vector<std::string> t;
        for (const auto& r : Z.translate) t.push_back(rational_string(r));
        doc.translate = std::move(t);
    }
    doc.merge_parallel = merge_parallel;
    return doc;
}

std::vector<std::string> poly_strings(const Poly& p) { return rat_strings(p.coeffs); }

std::vector<std::string> rat_strings(const std::vector<Rat>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& r : v) out.push_back(rational_string(r));
    return out;
}

}  // namespace zonoehr
