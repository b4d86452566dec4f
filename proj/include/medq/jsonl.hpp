#pragma once

// JSONL records for representative triples and oracle summaries.
//
// Triple record fields, in order: group, phi, psi, c, case_tag and optionally
// table. Matrices are 4 integers row-major; units are a single integer; c is
// its component list; table is an array of row strings in the Cayley text
// format.

#include <string>
#include <vector>

#include <json.hpp>

#include "medq/enumerator.hpp"
#include "medq/iso_oracle.hpp"
#include "medq/quasigroup.hpp"

namespace medq {

using Json = nlohmann::ordered_json;

inline Json automorphism_json(const Automorphism& a) {
    if (a.is_unit()) return a.unit().value();
    const auto& e = a.matrix().entries();
    return Json::array({e[0], e[1], e[2], e[3]});
}

inline Json table_rows_json(const CayleyTable& t) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < t.order(); ++i) rows.push_back(row_text(t, i));
    return rows;
}

inline CayleyTable triple_table(const GroupSpec& g, const RepresentativeTriple& t) {
    return build_table(AffineForm(g, t.phi, t.psi, t.c));
}

inline Json triple_json(const GroupSpec& g, const RepresentativeTriple& t, bool with_table) {
    Json j;
    j["group"] = g.to_string();
    j["phi"] = automorphism_json(t.phi);
    j["psi"] = automorphism_json(t.psi);
    j["c"] = components(t.c);
    j["case_tag"] = t.case_tag;
    if (with_table) j["table"] = table_rows_json(triple_table(g, t));
    return j;
}

inline Json oracle_summary_json(const GroupSpec& g, const std::vector<IsoClass>& classes, std::uint64_t enumerated,
                                bool bijection) {
    Json j;
    j["group"] = g.to_string();
    j["classes"] = classes.size();
    Json sizes = Json::array();
    for (const auto& c : classes) sizes.push_back(c.members);
    j["class_sizes"] = std::move(sizes);
    j["enumerated"] = enumerated;
    j["bijection"] = bijection;
    j["verdict"] = (bijection && classes.size() == enumerated) ? "OK" : "MISMATCH";
    return j;
}

}  // namespace medq
