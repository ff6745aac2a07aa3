#pragma once

// JSON forms of every file the tool reads or writes.
//
//   edge         [u, v, w]                      sorted, 1 to 3 ids
//   hypergraph   {"ground": n, "edges": [{"verts": [...], "mult": m}]}
//   coloring     {"k": k, "ground": n, "classes": [{"color": i, "edges": [[...], ...]}]}
//                ("ground" is optional on input; repeated edges mean copies)
//   lists        {"k": k, "lists": [{"edge": [u, v], "colors": [...]}]}
//   quotas       [q1, ..., qk]
//   extension    {"nX": .., "nY": .., "lambda": .., "coloring": {...}}
//   partial      {"nX": .., "nY": .., "lambda": .., "q": .., "coloring": {...}}
//   detach task  {"alpha": a, "m": m, "graph": {coloring}, "degree_bounds": [[[lo, hi], ...], ...],
//                 "mult_targets": [{"verts": [...], "mult": n}]}
//   cube         {"n": n, "symbols": [...], "entries": [layer][row][col]}
//   mixed        {"n": n, "classes": [[[1], [2, 4], [3, 5]], ...]}
//
// Parse failures throw Error(InvalidInput).

#include <nlohmann/json.hpp>

#include "tripext/certificate.hpp"
#include "tripext/cube.hpp"
#include "tripext/detach.hpp"
#include "tripext/evans.hpp"
#include "tripext/extension.hpp"
#include "tripext/hypergraph.hpp"
#include "tripext/list_color.hpp"

namespace tripext::json {

using json = nlohmann::ordered_json;

json edge_to_json(const Edge& e);
Edge edge_from_json(const json& j);

json to_json(const Hypergraph& g);
Hypergraph hypergraph_from_json(const json& j);

json to_json(const Coloring& c);
Coloring coloring_from_json(const json& j);

json to_json(const ListAssignment& lists);
ListAssignment lists_from_json(const json& j);

json quotas_to_json(const QuotaVector& q);
QuotaVector quotas_from_json(const json& j);

json to_json(const InfeasibilityCertificate& cert);

json to_json(const ExtensionInstance& inst);
ExtensionInstance extension_from_json(const json& j);

json to_json(const PartialInstance& inst);
PartialInstance partial_from_json(const json& j);

json to_json(const DetachmentTask& task);
DetachmentTask task_from_json(const json& j);

json to_json(const LatinCube& cube);
LatinCube cube_from_json(const json& j);

json to_json(const MixedFactorization& mf);
MixedFactorization mixed_from_json(const json& j);

json to_json(const Report& r);

}  // namespace tripext::json
