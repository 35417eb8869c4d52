#pragma once

#include <nlohmann/json.hpp>

#include "stsrank/design.hpp"
#include "stsrank/gf.hpp"
#include "stsrank/structure.hpp"

namespace stsrank::io {

using json = nlohmann::json;

// STS: {"v": int, "blocks": [[a,b,c], ...]} with 1-based points.
json to_json(const design::SteinerTripleSystem& sts);
design::SteinerTripleSystem sts_from_json(const json& j);

// Latin square: {"n": int, "rows": [[...], ...]}.
json to_json(const design::LatinSquare& ls);
design::LatinSquare latin_from_json(const json& j);

// Subspace: {"p": int, "rows": [[...], ...]} holding any generator matrix.
json to_json(const gf::Subspace& s);
json matrix_to_json(const gf::GfMatrix& m);
gf::Subspace subspace_from_json(const json& j);

// Ingredients: {"kind": "gf3"|"gf2", "j": int, "sts_parts": [...],
// "latin": [{"triple": [a,b,c], "square": {...}}, ...], "symmetric": [...]}
// with 1-based group indices in "triple".  A "subspace" key, when present,
// pins the dual subspace the ingredients refer to.
json ingredients_to_json(const structure::GroupPartition& gp, const structure::Ingredients3& ing);
json ingredients_to_json(const structure::GroupPartition& gp, const structure::Ingredients2& ing);
structure::Ingredients3 ingredients3_from_json(const json& j, const structure::GroupPartition& gp);
structure::Ingredients2 ingredients2_from_json(const json& j, const structure::GroupPartition& gp);

json load_json_file(const std::string& path);

}  // namespace stsrank::io
