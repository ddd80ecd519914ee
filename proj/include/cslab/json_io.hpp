#pragma once

#include <json.hpp>

#include "cslab/action.hpp"
#include "cslab/fstree.hpp"
#include "cslab/lattice.hpp"
#include "cslab/series.hpp"
#include "cslab/spitzer.hpp"

namespace cslab::io {

using nlohmann::json;

// {"k": int, "kind": "catalan"|"augmented"|"bridge", "steps": "UUD..."}
json to_json(const LatticePath& path);
LatticePath path_from_json(const json& j);

json to_json(const Permutation& p);
Permutation permutation_from_json(const json& j);

json to_json(const IntVector& v);
IntVector int_vector_from_json(const json& j);

// {"label": int, "left": tree|null, "right": tree|null}
json tree_to_json(const PlaneTree& tree);
PlaneTree tree_from_json(const json& j);
// {"left": shape|null, "right": shape|null}
json shape_to_json(const PlaneTree& tree);
PlaneTree shape_from_json(const json& j);

// [{"exps": [int...], "coef": "decimal"}...]
json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const json& j, std::size_t nvars);
// {"trunc": D, "terms": [...]}
json to_json(const TruncatedMultiSeries& s);
TruncatedMultiSeries series_from_json(const json& j, std::size_t nvars);

// {"rep": [ints], "I": [ints], "size": int}
json to_json(const OrbitRecord& rec);
OrbitRecord orbit_from_json(const json& j);

}  // namespace cslab::io
