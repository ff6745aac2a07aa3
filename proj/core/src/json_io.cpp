#include "tripext/json_io.hpp"

#include <algorithm>
#include <map>

#include "tripext/error.hpp"

namespace tripext::json {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::InvalidInput, std::string(what) + ": " + ex.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::InvalidInput, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

VertexId max_vertex(const json& classes) {
  VertexId top = 0;
  for (const auto& cls : classes) {
    for (const auto& e : field(cls, "edges")) {
      for (const auto& v : e) top = std::max(top, v.get<VertexId>());
    }
  }
  return top;
}

}  // namespace

json edge_to_json(const Edge& e) {
  json out = json::array();
  for (VertexId v : e) out.push_back(v);
  return out;
}

Edge edge_from_json(const json& j) {
  return guarded("edge", [&] {
    if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "edge must be an array");
    std::vector<VertexId> v = j.get<std::vector<VertexId>>();
    return Edge(std::span<const VertexId>(v.data(), v.size()));
  });
}

json to_json(const Hypergraph& g) {
  json edges = json::array();
  for (const auto& [e, m] : g.edges()) edges.push_back({{"verts", edge_to_json(e)}, {"mult", m}});
  return {{"ground", g.ground()}, {"edges", edges}};
}

Hypergraph hypergraph_from_json(const json& j) {
  return guarded("hypergraph", [&] {
    Hypergraph g(field(j, "ground").get<VertexId>());
    for (const auto& e : field(j, "edges")) g.add(edge_from_json(field(e, "verts")), field(e, "mult").get<int>());
    return g;
  });
}

json to_json(const Coloring& c) {
  json classes = json::array();
  for (Color i = 1; i <= c.k(); ++i) {
    const auto& cls = c.color_class(i);
    if (cls.empty()) continue;
    json edges = json::array();
    for (const Edge& e : cls.instances()) edges.push_back(edge_to_json(e));
    classes.push_back({{"color", i}, {"edges", edges}});
  }
  return {{"k", c.k()}, {"ground", c.ground()}, {"classes", classes}};
}

Coloring coloring_from_json(const json& j) {
  return guarded("coloring", [&] {
    const json& classes = field(j, "classes");
    const VertexId ground = j.contains("ground") ? j.at("ground").get<VertexId>() : max_vertex(classes);
    Coloring c(ground, field(j, "k").get<int>());
    for (const auto& cls : classes) {
      const Color color = field(cls, "color").get<Color>();
      for (const auto& e : field(cls, "edges")) c.add(color, edge_from_json(e));
    }
    return c;
  });
}

json to_json(const ListAssignment& lists) {
  json arr = json::array();
  for (const auto& [e, colors] : lists.lists()) arr.push_back({{"edge", edge_to_json(e)}, {"colors", colors}});
  return {{"k", lists.k()}, {"lists", arr}};
}

ListAssignment lists_from_json(const json& j) {
  return guarded("lists", [&] {
    ListAssignment lists(field(j, "k").get<int>());
    for (const auto& item : field(j, "lists")) {
      lists.set(edge_from_json(field(item, "edge")), field(item, "colors").get<std::vector<Color>>());
    }
    return lists;
  });
}

json quotas_to_json(const QuotaVector& q) { return json(q); }

QuotaVector quotas_from_json(const json& j) {
  return guarded("quotas", [&] { return j.get<QuotaVector>(); });
}

json to_json(const InfeasibilityCertificate& cert) {
  json out = {{"kind", to_string(cert.kind)}};
  switch (cert.kind) {
    case InfeasibilityCertificate::Kind::QuotaSum:
      out["sum"] = cert.quota_sum;
      out["edges"] = cert.edges;
      break;
    case InfeasibilityCertificate::Kind::ColorCapacity:
      if (cert.edge) {
        out["edge"] = edge_to_json(*cert.edge);
      } else {
        out["color"] = cert.color;
      }
      out["needed"] = cert.needed;
      out["capacity"] = cert.capacity;
      break;
    case InfeasibilityCertificate::Kind::SearchExhausted:
      out["nodes"] = cert.nodes;
      break;
    case InfeasibilityCertificate::Kind::NotDivisible:
      out["nY"] = cert.ground;
      break;
  }
  return out;
}

json to_json(const ExtensionInstance& inst) {
  return {{"nX", inst.nX}, {"nY", inst.nY}, {"lambda", inst.lambda}, {"coloring", to_json(inst.coloring)}};
}

ExtensionInstance extension_from_json(const json& j) {
  return guarded("extension instance", [&] {
    const int nX = field(j, "nX").get<int>();
    Coloring f = coloring_from_json(field(j, "coloring"));
    if (f.ground() != nX) {
      // Ground omitted or inferred from the edges: rebuild on 1..nX.
      Coloring fixed(nX, f.k());
      for (Color c = 1; c <= f.k(); ++c) {
        for (const auto& [e, m] : f.color_class(c).edges()) fixed.add(c, e, m);
      }
      f = std::move(fixed);
    }
    return make_extension_instance(nX, field(j, "nY").get<int>(), j.value("lambda", 1), std::move(f));
  });
}

json to_json(const PartialInstance& inst) {
  return {{"nX", inst.nX},
          {"nY", inst.nY},
          {"lambda", inst.lambda},
          {"q", inst.q},
          {"coloring", to_json(inst.coloring)}};
}

PartialInstance partial_from_json(const json& j) {
  return guarded("partial instance", [&] {
    PartialInstance inst;
    inst.nX = field(j, "nX").get<int>();
    inst.nY = field(j, "nY").get<int>();
    inst.lambda = j.value("lambda", 1);
    inst.q = field(j, "q").get<int>();
    json c = field(j, "coloring");
    if (!c.contains("ground")) c["ground"] = inst.nX;
    inst.coloring = coloring_from_json(c);
    return inst;
  });
}

json to_json(const DetachmentTask& task) {
  json bounds = json::array();
  for (const auto& row : task.degree_bounds) {
    json r = json::array();
    for (const auto& b : row) r.push_back({b.lo, b.hi});
    bounds.push_back(r);
  }
  json targets = json::array();
  for (const auto& [e, n] : task.mult_targets) targets.push_back({{"verts", edge_to_json(e)}, {"mult", n}});
  return {{"alpha", task.alpha},
          {"m", task.m},
          {"graph", to_json(task.graph)},
          {"degree_bounds", bounds},
          {"mult_targets", targets}};
}

DetachmentTask task_from_json(const json& j) {
  return guarded("detachment task", [&] {
    DetachmentTask task;
    task.alpha = field(j, "alpha").get<VertexId>();
    task.m = field(j, "m").get<int>();
    json g = field(j, "graph");
    if (!g.contains("ground")) g["ground"] = task.alpha;
    task.graph = coloring_from_json(g);
    for (const auto& row : field(j, "degree_bounds")) {
      std::vector<DegreeBound> r;
      for (const auto& b : row) {
        const auto pair = b.get<std::vector<int>>();
        if (pair.size() != 2) throw Error(ErrorCode::InvalidInput, "degree bound must be [lo, hi]");
        r.push_back({pair[0], pair[1]});
      }
      task.degree_bounds.push_back(std::move(r));
    }
    for (const auto& t : field(j, "mult_targets")) {
      task.mult_targets[edge_from_json(field(t, "verts"))] = field(t, "mult").get<int>();
    }
    return task;
  });
}

json to_json(const LatinCube& cube) {
  json layers = json::array();
  for (int i = 1; i <= cube.n(); ++i) {
    json rows = json::array();
    for (int r = 1; r <= cube.n(); ++r) {
      json cols = json::array();
      for (int c = 1; c <= cube.n(); ++c) cols.push_back(cube.name_at(i, r, c));
      rows.push_back(cols);
    }
    layers.push_back(rows);
  }
  return {{"n", cube.n()}, {"symbols", cube.symbols()}, {"entries", layers}};
}

LatinCube cube_from_json(const json& j) {
  return guarded("cube", [&] {
    const int n = field(j, "n").get<int>();
    auto symbols = field(j, "symbols").get<std::vector<std::string>>();
    std::map<std::string, int> index;
    for (std::size_t s = 0; s < symbols.size(); ++s) index.emplace(symbols[s], static_cast<int>(s));
    LatinCube cube(n, symbols);
    const json& entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::InvalidInput, "entries must have n layers");
    }
    for (int i = 1; i <= n; ++i) {
      const json& layer = entries[static_cast<std::size_t>(i - 1)];
      if (layer.size() != static_cast<std::size_t>(n)) throw Error(ErrorCode::InvalidInput, "layer must have n rows");
      for (int r = 1; r <= n; ++r) {
        const json& row = layer[static_cast<std::size_t>(r - 1)];
        if (row.size() != static_cast<std::size_t>(n)) throw Error(ErrorCode::InvalidInput, "row must have n cells");
        for (int c = 1; c <= n; ++c) {
          const json& cell = row[static_cast<std::size_t>(c - 1)];
          int s = -1;
          if (cell.is_number_integer()) {
            s = cell.get<int>();
          } else {
            auto it = index.find(cell.get<std::string>());
            if (it == index.end()) throw Error(ErrorCode::InvalidInput, "unknown symbol " + cell.dump());
            s = it->second;
          }
          cube.set(i, r, c, s);
        }
      }
    }
    return cube;
  });
}

json to_json(const MixedFactorization& mf) {
  json classes = json::array();
  for (const auto& cls : mf.classes) {
    json edges = json::array();
    for (const Edge& e : cls) edges.push_back(edge_to_json(e));
    classes.push_back(edges);
  }
  return {{"n", mf.n}, {"classes", classes}};
}

MixedFactorization mixed_from_json(const json& j) {
  return guarded("mixed factorization", [&] {
    MixedFactorization mf;
    mf.n = field(j, "n").get<int>();
    for (const auto& cls : field(j, "classes")) {
      std::vector<Edge> edges;
      for (const auto& e : cls) edges.push_back(edge_from_json(e));
      mf.classes.push_back(std::move(edges));
    }
    return mf;
  });
}

json to_json(const Report& r) { return {{"ok", r.ok()}, {"violations", r.violations}}; }

}  // namespace tripext::json
