/*
  Canonical JSON interchange.

  Schemas:
    Weight   {"finite": ["p/q", ...], "delta": "p/q"}
    Window   [Weight, ...]
    Graph    {"nvars": n, "root_system": "A1",
              "vertices": [Weight...], "order": [[i,j]...],
              "edges": [{"u": i, "v": j, "label": ["p/q"...]}]}
    Module   {"graph": Graph, "generators": [["poly per vertex"...]...],
              "degree_bound": D}
    Sheaf    {"graph": Graph, "base": i, "degree_bound": D,
              "stalks": [[deg...]...], "edge_maps": [[["poly"...]...]...],
              "boundary_dims": [[...]...]}

  Export is canonical (keys sorted, two-space indent, trailing newline), so
  import followed by export reproduces the bytes.
*/

#pragma once

#include <nlohmann/json.hpp>

#include "critmg/bm_sheaf.hpp"

namespace critmg {

using Json = nlohmann::json;

Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json window_to_json(const std::vector<Weight>& weights);
std::vector<Weight> window_from_json(const Json& j);

Json graph_to_json(const MomentGraph& g);
MomentGraph graph_from_json(const Json& j);

// Only modules embedded in one polynomial-ring copy per vertex serialize
// (one slot per vertex, shift zero); that covers every interchange object.
Json module_to_json(const SectionModule& m);
SectionModule module_from_json(const Json& j);

Json sheaf_to_json(const BMSheaf& b);
BMSheaf sheaf_from_json(const Json& j);

std::string dump_canonical(const Json& j);

}  // namespace critmg
