#pragma once

// JSON wire formats shared by the CLI and the census files.
//   field:   {"k": 2, "poly": "7"}
//   vector:  {"phi": "E6", "field": {...}, "e": {"1,1,1,1,1,0": "3"}, "h": ["0", ...]}
//   label:   {"kind": "Fam", "s": "2", "c": "1"}  (s and c only for Fam)
//   word:    [["0,1,0,1,1,0", "1"], ...] in product order

#include "json.hpp"

#include "chevorb/invariants.hpp"

namespace chevorb {

using json = nlohmann::json;

json field_to_json(const Field& field);
/// Returns the cached gf(k); the polynomial must match the canonical one.
const Field& field_from_json(const json& j);

json vec_to_json(const ChevVec& v);
/// Throws std::invalid_argument on unknown roots, bad hex, wrong h length,
/// or coefficients outside the field.
ChevVec vec_from_json(const json& j);

json label_to_json(const OrbitLabel& label, const Field& field);
OrbitLabel label_from_json(const json& j);

json word_to_json(const RootSystem& sys, const GroupWord& w);
json signature_to_json(const Signature& sig);

/// Roots, delta, alpha_k (1-based) and layer sizes.
json rootsys_to_json(const RootSystem& sys);

}  // namespace chevorb
