#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "genmat/graph.hpp"

namespace genmat {

// A graph plus optional provenance metadata (generator name and parameters).
// Round-trips losslessly through both the text and the JSON format.
struct GraphDocument {
  std::variant<SemisimpleGraph, BipartiteGraph> graph;
  std::string name;               // empty when absent
  std::vector<long long> params;  // empty when absent

  GraphDocument() : graph(SemisimpleGraph(0)) {}
  explicit GraphDocument(SemisimpleGraph g) : graph(std::move(g)) {}
  explicit GraphDocument(BipartiteGraph g) : graph(std::move(g)) {}

  bool is_bipartite() const { return std::holds_alternative<BipartiteGraph>(graph); }

  const SemisimpleGraph& semisimple() const {
    if (is_bipartite()) throw std::invalid_argument("GraphDocument: expected a semisimple graph");
    return std::get<SemisimpleGraph>(graph);
  }

  const BipartiteGraph& bipartite() const {
    if (!is_bipartite()) throw std::invalid_argument("GraphDocument: expected a bipartite graph");
    return std::get<BipartiteGraph>(graph);
  }

  int vertex_count() const {
    return is_bipartite() ? bipartite().vertex_count() : semisimple().vertex_count();
  }

  EdgeList flat_edges() const {
    return is_bipartite() ? bipartite().flat_edges() : semisimple().flat_edges();
  }
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline bool parse_nonneg(const std::string& token, long long& out) {
  if (token.empty()) return false;
  for (char c : token)
    if (c < '0' || c > '9') return false;
  try {
    out = std::stoll(token);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace detail

// Text format:
//   first line   "semisimple <n>"  or  "bipartite <a> <b>"
//   then one "u v" line per edge using flat vertex ids (bipartite: X is
//   0..a-1, Y is a..a+b-1); "u u" denotes a loop. Lines starting with '#'
//   are comments; "# name <s>" and "# params <ints>" carry metadata.
inline GraphDocument parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  bool bipartite = false;
  long long n = 0, a = 0, b = 0;
  std::string name;
  std::vector<long long> params;
  EdgeList flat;

  while (std::getline(in, line)) {
    auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0][0] == '#') {
      if (tokens.size() >= 3 && tokens[0] == "#" && tokens[1] == "name") name = tokens[2];
      if (tokens.size() >= 2 && tokens[0] == "#" && tokens[1] == "params") {
        for (std::size_t i = 2; i < tokens.size(); ++i) {
          long long value = 0;
          if (detail::parse_nonneg(tokens[i], value)) params.push_back(value);
        }
      }
      continue;
    }
    if (!have_header) {
      if (tokens[0] == "semisimple" && tokens.size() == 2 && detail::parse_nonneg(tokens[1], n)) {
        bipartite = false;
      } else if (tokens[0] == "bipartite" && tokens.size() == 3 &&
                 detail::parse_nonneg(tokens[1], a) && detail::parse_nonneg(tokens[2], b)) {
        bipartite = true;
      } else {
        throw ParseError("malformed header: expected 'semisimple <n>' or 'bipartite <a> <b>'");
      }
      have_header = true;
      continue;
    }
    long long u = 0, v = 0;
    if (tokens.size() != 2 || !detail::parse_nonneg(tokens[0], u) || !detail::parse_nonneg(tokens[1], v)) {
      throw ParseError("malformed edge line: '" + line + "'");
    }
    long long total = bipartite ? a + b : n;
    if (u >= total || v >= total) {
      throw ParseError("vertex index out of range: '" + line + "'");
    }
    if (bipartite) {
      if (u == v) throw ParseError("loop in bipartite graph: '" + line + "'");
      if ((u < a) == (v < a)) {
        throw ParseError("edge inside one bipartition class: '" + line + "'");
      }
    }
    int cu = static_cast<int>(u), cv = static_cast<int>(v);
    if (cu > cv) std::swap(cu, cv);
    if (std::find(flat.begin(), flat.end(), std::make_pair(cu, cv)) != flat.end()) {
      throw ParseError("duplicate edge: '" + line + "'");
    }
    flat.emplace_back(cu, cv);
  }
  if (!have_header) throw ParseError("malformed header: empty input");

  GraphDocument doc;
  if (bipartite) {
    EdgeList class_edges;
    for (const auto& [u, v] : flat) class_edges.emplace_back(u, v - static_cast<int>(a));
    doc.graph = BipartiteGraph(static_cast<int>(a), static_cast<int>(b), std::move(class_edges));
  } else {
    doc.graph = SemisimpleGraph(static_cast<int>(n), std::move(flat));
  }
  doc.name = name;
  doc.params = params;
  return doc;
}

inline std::string serialize_graph_text(const GraphDocument& doc) {
  std::ostringstream out;
  if (!doc.name.empty()) out << "# name " << doc.name << "\n";
  if (!doc.params.empty()) {
    out << "# params";
    for (long long p : doc.params) out << " " << p;
    out << "\n";
  }
  if (doc.is_bipartite()) {
    const BipartiteGraph& g = doc.bipartite();
    out << "bipartite " << g.left_count() << " " << g.right_count() << "\n";
  } else {
    out << "semisimple " << doc.semisimple().vertex_count() << "\n";
  }
  for (const auto& [u, v] : doc.flat_edges()) out << u << " " << v << "\n";
  return out.str();
}

// JSON mirror of the text format:
//   {"kind": "semisimple"|"bipartite", "sizes": [n] | [a, b],
//    "edges": [[u, v], ...], "name"?: string, "params"?: [ints]}
inline std::string serialize_graph_json(const GraphDocument& doc) {
  nlohmann::ordered_json j;
  j["kind"] = doc.is_bipartite() ? "bipartite" : "semisimple";
  if (doc.is_bipartite()) {
    j["sizes"] = {doc.bipartite().left_count(), doc.bipartite().right_count()};
  } else {
    j["sizes"] = {doc.semisimple().vertex_count()};
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [u, v] : doc.flat_edges()) j["edges"].push_back({u, v});
  if (!doc.name.empty()) j["name"] = doc.name;
  if (!doc.params.empty()) j["params"] = doc.params;
  return j.dump(2);
}

inline GraphDocument parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j.contains("sizes") || !j.contains("edges")) {
    throw ParseError("malformed header: JSON graph needs kind, sizes, edges");
  }
  std::ostringstream out;  // reuse the text parser and its diagnostics
  std::string kind = j["kind"].get<std::string>();
  if (kind == "semisimple") {
    if (j["sizes"].size() != 1) throw ParseError("malformed header: semisimple sizes must be [n]");
    out << "semisimple " << j["sizes"][0].get<long long>() << "\n";
  } else if (kind == "bipartite") {
    if (j["sizes"].size() != 2) throw ParseError("malformed header: bipartite sizes must be [a, b]");
    out << "bipartite " << j["sizes"][0].get<long long>() << " " << j["sizes"][1].get<long long>() << "\n";
  } else {
    throw ParseError("malformed header: unknown kind '" + kind + "'");
  }
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw ParseError("malformed edge line in JSON");
    out << e[0].get<long long>() << " " << e[1].get<long long>() << "\n";
  }
  GraphDocument doc = parse_graph_text(out.str());
  if (j.contains("name")) doc.name = j["name"].get<std::string>();
  if (j.contains("params")) doc.params = j["params"].get<std::vector<long long>>();
  return doc;
}

}  // namespace genmat
