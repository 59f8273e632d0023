#pragma once

#include <json.hpp>

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gbp/embedding.hpp"
#include "gbp/geometry.hpp"
#include "gbp/graph.hpp"
#include "gbp/setfamily.hpp"

namespace gbp {

using json = nlohmann::json;

// --- rationals --------------------------------------------------------------

inline json rationals_to_json(const std::vector<rational>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(to_string(v));
  return arr;
}

inline std::vector<rational> rationals_from_json(const json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("expected an array of rational strings");
  std::vector<rational> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_string()) throw std::invalid_argument("rationals must be strings like \"3/5\"");
    out.push_back(parse_rational(v.get<std::string>()));
  }
  return out;
}

// --- packing instances and placements ---------------------------------------

// {"d": <int>, "boxes": [["p/q", ...], ...]}; extra keys (e.g. "alpha")
// are preserved by readers that care and ignored here.
inline json instance_to_json(const packing_instance& inst) {
  json boxes = json::array();
  for (const auto& b : inst.boxes()) boxes.push_back(rationals_to_json(b.sides()));
  return json{{"d", inst.dimension()}, {"boxes", boxes}};
}

inline packing_instance instance_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("d") || !doc.contains("boxes"))
    throw std::invalid_argument("instance: expected {\"d\": ..., \"boxes\": ...}");
  if (!doc["d"].is_number_integer()) throw std::invalid_argument("instance: d must be an integer");
  const int d = doc["d"].get<int>();
  std::vector<box_dims> boxes;
  for (const auto& b : doc["boxes"]) boxes.emplace_back(rationals_from_json(b));
  return packing_instance(d, std::move(boxes));
}

inline json placement_to_json(const placement& pl) {
  json rows = json::array();
  for (const auto& row : pl.positions) rows.push_back(rationals_to_json(row));
  return rows;
}

inline placement placement_from_json(const json& rows) {
  if (!rows.is_array()) throw std::invalid_argument("positions: expected an array of rows");
  placement out;
  for (const auto& row : rows) out.positions.push_back(rationals_from_json(row));
  return out;
}

// --- graphs -----------------------------------------------------------------

// DIMACS edge format: "c" comments, "p edge <n> <m>", "e <u> <v>" with
// 1-indexed vertices.
inline graph read_dimacs(std::istream& in) {
  std::string line;
  int n = -1;
  graph g(0);
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      int m = 0;
      if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "col") || n < 0)
        throw std::invalid_argument("dimacs: malformed problem line");
      g = graph(n);
      continue;
    }
    if (tag == "e") {
      if (n < 0) throw std::invalid_argument("dimacs: edge before problem line");
      int u = 0, v = 0;
      if (!(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n)
        throw std::invalid_argument("dimacs: malformed edge line");
      g.add_edge(u - 1, v - 1);
      continue;
    }
    throw std::invalid_argument("dimacs: unknown line tag '" + tag + "'");
  }
  if (n < 0) throw std::invalid_argument("dimacs: missing problem line");
  return g;
}

inline void write_dimacs(std::ostream& out, const graph& g) {
  out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

// {"n": <int>, "edges": [[u, v], ...]} with 1-indexed vertices, matching
// the DIMACS convention for everything outside the library.
inline json graph_to_json(const graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u + 1, v + 1}));
  return json{{"n", g.vertex_count()}, {"edges", edges}};
}

inline graph graph_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    throw std::invalid_argument("graph: expected {\"n\": ..., \"edges\": ...}");
  graph g(doc["n"].get<int>());
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph: bad edge entry");
    g.add_edge(e[0].get<int>() - 1, e[1].get<int>() - 1);
  }
  return g;
}

// --- set families ------------------------------------------------------------

// Text format: first line "universe <n>", then one set per line as
// space-separated 0-based indices, "{}" for the empty set. An optional
// "closure" directive line makes the loader take the downward closure.
inline set_family family_from_stream(std::istream& in) {
  std::string line;
  int universe = -1;
  bool closure = false;
  std::vector<std::vector<int>> sets;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    if (first == "universe") {
      if (universe >= 0) throw std::invalid_argument("family: duplicate universe line");
      if (!(ls >> universe) || universe < 1)
        throw std::invalid_argument("family: malformed universe line");
      continue;
    }
    if (universe < 0) throw std::invalid_argument("family: first line must be 'universe <n>'");
    if (first == "closure") {
      closure = true;
      continue;
    }
    std::vector<int> s;
    if (first != "{}") {
      std::istringstream reparse(line);
      int e;
      while (reparse >> e) s.push_back(e);
      if (!reparse.eof()) throw std::invalid_argument("family: malformed set line '" + line + "'");
    }
    sets.push_back(std::move(s));
  }
  if (universe < 0) throw std::invalid_argument("family: missing universe line");
  set_family f(universe, std::move(sets));
  return closure ? downward_closure(f) : f;
}

inline void family_to_stream(std::ostream& out, const set_family& f) {
  out << "universe " << f.universe_size() << "\n";
  for (const auto& s : f.sets()) {
    if (s.empty()) {
      out << "{}\n";
      continue;
    }
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << "\n";
  }
}

inline json family_to_json(const set_family& f) {
  json sets = json::array();
  for (const auto& s : f.sets()) sets.push_back(s);
  return json{{"universe", f.universe_size()}, {"sets", sets}};
}

inline set_family family_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("universe") || !doc.contains("sets"))
    throw std::invalid_argument("family: expected {\"universe\": ..., \"sets\": ...}");
  std::vector<std::vector<int>> sets;
  for (const auto& s : doc["sets"]) sets.push_back(s.get<std::vector<int>>());
  return set_family(doc["universe"].get<int>(), std::move(sets));
}

// --- embeddings ---------------------------------------------------------------

// {"d": <int>, "map": {"<element>": ["p/q", ...], ...}}
inline json embedding_to_json(const embedding& emb) {
  json map = json::object();
  for (int e = 0; e < emb.universe_size(); ++e)
    map[std::to_string(e)] = rationals_to_json(emb.of(e).sides());
  return json{{"d", emb.dimension()}, {"map", map}};
}

inline embedding embedding_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("d") || !doc.contains("map"))
    throw std::invalid_argument("embedding: expected {\"d\": ..., \"map\": ...}");
  const int d = doc["d"].get<int>();
  const json& map = doc["map"];
  if (!map.is_object()) throw std::invalid_argument("embedding: map must be an object");
  const int universe = static_cast<int>(map.size());
  std::vector<box_dims> boxes;
  boxes.reserve(map.size());
  for (int e = 0; e < universe; ++e) {
    const std::string key = std::to_string(e);
    if (!map.contains(key))
      throw std::invalid_argument("embedding: map must cover elements 0..universe-1 (missing " + key + ")");
    boxes.emplace_back(rationals_from_json(map[key]));
  }
  return embedding(d, std::move(boxes));
}

}  // namespace gbp
