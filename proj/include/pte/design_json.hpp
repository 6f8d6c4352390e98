#pragma once

#include "pte/designs.hpp"
#include "pte/json_io.hpp"

namespace pte {

/// {"kind": "oa" | "type1oa", "params": {...}, "rows": [[...]]}
Json to_json(const OrthogonalArray& oa, bool type1 = false);
/// {"kind": "gdd", "params": {...}, "groups": [...], "blocks": [...]}
Json to_json(const Gdd& design);
Json latin_to_json(const std::vector<std::vector<int>>& grid);
Json hadamard_to_json(const HadamardMatrix& h);

/// Readers for the same layouts. Only the fields needed to rebuild the object
/// are required; params that can be recomputed are optional.
SymbolArray rows_from_json(const Json& j);
Gdd gdd_from_json(const Json& j);
std::vector<std::vector<int>> grid_from_json(const Json& j, const char* field = "grid");

} // namespace pte
