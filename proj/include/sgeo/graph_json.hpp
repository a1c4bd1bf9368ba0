#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "sgeo/graph.hpp"

namespace sgeo {

// Malformed or unreadable input (CLI exit code 2).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"vertices":["a",...],"edges":[{"id":0,"u":"a","v":"b","len":"3/2"},...]}
inline nlohmann::json graph_to_json(const WeightedMultigraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.name(v));
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"id", e.id}, {"u", g.name(e.u)}, {"v", g.name(e.v)}, {"len", e.length.str()}});
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

inline WeightedMultigraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw InputError("graph JSON needs \"vertices\" and \"edges\"");
  const auto& vs = j.at("vertices");
  const auto& es = j.at("edges");
  if (!vs.is_array() || !es.is_array()) throw InputError("\"vertices\" and \"edges\" must be arrays");
  WeightedMultigraph g;
  for (const auto& v : vs) {
    if (!v.is_string()) throw InputError("vertex names must be strings");
    try {
      g.add_vertex(v.get<std::string>());
    } catch (const std::invalid_argument& err) {
      throw InputError(err.what());
    }
  }
  struct Raw {
    VertexId u, v;
    Rational len;
  };
  std::vector<std::optional<Raw>> slots(es.size());
  for (const auto& e : es) {
    if (!e.is_object() || !e.contains("id") || !e.contains("u") || !e.contains("v") || !e.contains("len"))
      throw InputError("edge entries need \"id\", \"u\", \"v\" and \"len\"");
    if (!e.at("id").is_number_unsigned()) throw InputError("edge id must be a non-negative integer");
    const auto id = e.at("id").get<std::size_t>();
    if (id >= slots.size() || slots[id]) throw InputError("edge ids must be exactly 0..m-1 without repeats");
    if (!e.at("u").is_string() || !e.at("v").is_string() || !e.at("len").is_string())
      throw InputError("edge endpoints and lengths must be strings");
    const auto u = g.find_vertex(e.at("u").get<std::string>());
    const auto v = g.find_vertex(e.at("v").get<std::string>());
    if (!u || !v) throw InputError("edge " + std::to_string(id) + " references an unknown vertex");
    if (*u == *v) throw InputError("edge " + std::to_string(id) + " is a loop");
    Rational len;
    try {
      len = Rational::parse(e.at("len").get<std::string>());
    } catch (const std::exception& err) {
      throw InputError(err.what());
    }
    if (!len.is_positive()) throw InputError("edge " + std::to_string(id) + " has non-positive length " + len.str());
    slots[id] = Raw{*u, *v, len};
  }
  for (const auto& s : slots) g.add_edge(s->u, s->v, s->len);
  return g;
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& err) {
    throw InputError(path + ": " + err.what());
  }
}

inline WeightedMultigraph read_graph_file(const std::string& path) { return graph_from_json(read_json_file(path)); }

}  // namespace sgeo
