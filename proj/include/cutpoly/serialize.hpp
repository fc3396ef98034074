#pragma once

#include <json.hpp>

#include "cutpoly/constructions.hpp"

namespace cutpoly {

using json = nlohmann::ordered_json;

/// {"n": int, "cuts": [bitmask], "adj": [[int]]}
json to_json(const SkeletonGraph& s);
/// Rebuilds and validates (symmetric, irreflexive, canonical cuts in order).
SkeletonGraph skeleton_from_json(const json& doc);

/// {"diameter", "clique_number", "clique_exact", "witness_clique"}
json to_json(const Metrics& m);
json to_json(const GraphClass& cls);
json to_json(const BoundsRow& row);
json to_json(const CliqueFamily& family);
json to_json(const Coloring& col);
json to_json(const AdjacencyCertificate& cert);
json to_json(const NonAdjacencyWitness& w);

json cut_json(const Cut& c);

} // namespace cutpoly
