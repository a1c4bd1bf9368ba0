#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sgeo/rational.hpp"

namespace sgeo {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// Raised when an instance exceeds a configured desk-scale limit.
struct CapExceeded : std::length_error {
  using std::length_error::length_error;
};

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;
  Rational length;

  VertexId other(VertexId w) const { return w == u ? v : u; }
};

// Finite undirected multigraph with positive rational edge lengths.
// Vertex and edge ids are dense and assigned in insertion order; every
// iteration below is in id order. Loops are rejected.
class WeightedMultigraph {
 public:
  WeightedMultigraph() = default;

  // n vertices named "0" .. "n-1".
  explicit WeightedMultigraph(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) add_vertex(std::to_string(i));
  }

  VertexId add_vertex(std::string name) {
    if (index_.contains(name)) throw std::invalid_argument("duplicate vertex name \"" + name + "\"");
    const auto id = static_cast<VertexId>(names_.size());
    index_.emplace(name, id);
    names_.push_back(std::move(name));
    incident_.emplace_back();
    return id;
  }

  EdgeId add_edge(VertexId u, VertexId v, Rational length) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop at vertex \"" + names_[u] + "\"");
    if (!length.is_positive()) throw std::invalid_argument("edge length must be positive, got " + length.str());
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(Edge{id, u, v, length});
    incident_[u].push_back(id);
    incident_[v].push_back(id);
    return id;
  }

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId e) const {
    if (e >= edges_.size()) throw std::out_of_range("edge id " + std::to_string(e) + " out of range");
    return edges_[e];
  }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const EdgeId> incident(VertexId v) const {
    check_vertex(v);
    return incident_[v];
  }
  std::size_t degree(VertexId v) const { return incident(v).size(); }

  const std::string& name(VertexId v) const {
    check_vertex(v);
    return names_[v];
  }
  std::optional<VertexId> find_vertex(const std::string& name) const {
    if (auto it = index_.find(name); it != index_.end()) return it->second;
    return std::nullopt;
  }

  Rational total_length() const {
    Rational sum;
    for (const auto& e : edges_) sum += e.length;
    return sum;
  }

  // Same topology with lengths replaced (indexed by edge id).
  WeightedMultigraph with_lengths(std::span<const Rational> lengths) const {
    if (lengths.size() != edges_.size()) throw std::invalid_argument("length vector does not match edge count");
    WeightedMultigraph g = *this;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      if (!lengths[i].is_positive()) throw std::invalid_argument("edge length must be positive");
      g.edges_[i].length = lengths[i];
    }
    return g;
  }

  void check_vertex(VertexId v) const {
    if (v >= names_.size()) throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

// A subgraph materialized as a standalone graph, with the id maps back to
// (and from) its host.
struct Materialized {
  WeightedMultigraph graph;
  std::vector<VertexId> to_host_vertex;
  std::vector<EdgeId> to_host_edge;
  std::vector<VertexId> from_host_vertex;  // kNoVertex when absent
};

// Edge-subset view of a host graph; the vertex set always contains the
// endpoints of its edges. The host must outlive the view.
class Subgraph {
 public:
  Subgraph(const WeightedMultigraph& host, std::span<const EdgeId> edges, std::span<const VertexId> extra_vertices = {})
      : host_{&host}, has_edge_(host.edge_count(), false), has_vertex_(host.vertex_count(), false) {
    for (EdgeId e : edges) {
      const Edge& edge = host.edge(e);
      has_edge_[e] = true;
      has_vertex_[edge.u] = true;
      has_vertex_[edge.v] = true;
    }
    for (VertexId v : extra_vertices) {
      host.check_vertex(v);
      has_vertex_[v] = true;
    }
  }

  static Subgraph whole(const WeightedMultigraph& host) {
    std::vector<EdgeId> all(host.edge_count());
    std::iota(all.begin(), all.end(), EdgeId{0});
    std::vector<VertexId> verts(host.vertex_count());
    std::iota(verts.begin(), verts.end(), VertexId{0});
    return Subgraph(host, all, verts);
  }

  // Subgraph induced by a vertex set (all host edges with both ends inside).
  static Subgraph induced(const WeightedMultigraph& host, std::span<const VertexId> vertices) {
    std::vector<bool> in(host.vertex_count(), false);
    for (VertexId v : vertices) {
      host.check_vertex(v);
      in[v] = true;
    }
    std::vector<EdgeId> edges;
    for (const auto& e : host.edges())
      if (in[e.u] && in[e.v]) edges.push_back(e.id);
    return Subgraph(host, edges, vertices);
  }

  const WeightedMultigraph& host() const noexcept { return *host_; }
  bool contains_vertex(VertexId v) const { return v < has_vertex_.size() && has_vertex_[v]; }
  bool contains_edge(EdgeId e) const { return e < has_edge_.size() && has_edge_[e]; }

  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < has_vertex_.size(); ++v)
      if (has_vertex_[v]) out.push_back(v);
    return out;
  }
  std::vector<EdgeId> edges() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < has_edge_.size(); ++e)
      if (has_edge_[e]) out.push_back(e);
    return out;
  }
  std::size_t vertex_count() const { return static_cast<std::size_t>(std::count(has_vertex_.begin(), has_vertex_.end(), true)); }
  std::size_t edge_count() const { return static_cast<std::size_t>(std::count(has_edge_.begin(), has_edge_.end(), true)); }

  Materialized materialize() const {
    Materialized m;
    m.from_host_vertex.assign(host_->vertex_count(), kNoVertex);
    for (VertexId v : vertices()) {
      m.from_host_vertex[v] = m.graph.add_vertex(host_->name(v));
      m.to_host_vertex.push_back(v);
    }
    for (EdgeId e : edges()) {
      const Edge& edge = host_->edge(e);
      m.graph.add_edge(m.from_host_vertex[edge.u], m.from_host_vertex[edge.v], edge.length);
      m.to_host_edge.push_back(e);
    }
    return m;
  }

 private:
  const WeightedMultigraph* host_;
  std::vector<bool> has_edge_;
  std::vector<bool> has_vertex_;
};

inline Rational subgraph_length(const Subgraph& h) {
  Rational sum;
  for (EdgeId e : h.edges()) sum += h.host().edge(e).length;
  return sum;
}

// Component label per vertex (labels dense, in order of smallest vertex).
inline std::vector<std::size_t> component_labels(const WeightedMultigraph& g, std::size_t* count = nullptr) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label(g.vertex_count(), unset);
  std::size_t next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (label[s] != unset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        const VertexId w = g.edge(e).other(v);
        if (label[w] == unset) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

struct StructureReport {
  bool is_connected = false;
  bool is_tree = false;
  bool is_cycle = false;
  std::vector<VertexId> leaves;               // host ids, degree exactly 1
  std::vector<std::size_t> degree_sequence;   // non-increasing
};

inline StructureReport structural_predicates(const WeightedMultigraph& g) {
  StructureReport r;
  std::size_t components = 0;
  component_labels(g, &components);
  r.is_connected = components == 1;
  r.is_tree = r.is_connected && g.edge_count() + 1 == g.vertex_count();
  bool two_regular = g.vertex_count() >= 2;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::size_t d = g.degree(v);
    if (d == 1) r.leaves.push_back(v);
    if (d != 2) two_regular = false;
    r.degree_sequence.push_back(d);
  }
  r.is_cycle = r.is_connected && two_regular;
  std::sort(r.degree_sequence.begin(), r.degree_sequence.end(), std::greater<>{});
  return r;
}

inline StructureReport structural_predicates(const Subgraph& h) {
  const Materialized m = h.materialize();
  StructureReport r = structural_predicates(m.graph);
  for (VertexId& v : r.leaves) v = m.to_host_vertex[v];
  return r;
}

struct EdgeBipartition {
  std::vector<VertexId> first;   // side containing the edge's u endpoint
  std::vector<VertexId> second;
  bool non_trivial = false;
};

// Splits X by the two components of T - e.
inline EdgeBipartition edge_bipartition(const Subgraph& tree, EdgeId e, std::span<const VertexId> x) {
  if (!tree.contains_edge(e)) throw std::invalid_argument("edge " + std::to_string(e) + " is not an edge of the tree");
  if (!structural_predicates(tree).is_tree) throw std::invalid_argument("edge_bipartition requires a tree");
  const WeightedMultigraph& host = tree.host();
  std::vector<bool> side(host.vertex_count(), false);
  std::vector<VertexId> stack{host.edge(e).u};
  side[host.edge(e).u] = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId f : host.incident(v)) {
      if (f == e || !tree.contains_edge(f)) continue;
      const VertexId w = host.edge(f).other(v);
      if (!side[w]) {
        side[w] = true;
        stack.push_back(w);
      }
    }
  }
  EdgeBipartition out;
  for (VertexId v : x) {
    if (!tree.contains_vertex(v)) throw std::invalid_argument("vertex " + host.name(v) + " is not in the tree");
    (side[v] ? out.first : out.second).push_back(v);
  }
  out.non_trivial = !out.first.empty() && !out.second.empty();
  return out;
}

// Replaces every maximal path through degree-2 vertices by a single edge of
// the summed length. Vertices keep their names; surviving edges keep their
// relative order and merged edges are appended in creation order.
inline WeightedMultigraph suppress_degree_two(const WeightedMultigraph& g) {
  std::size_t components = 0;
  const auto label = component_labels(g, &components);
  for (std::size_t c = 0; c < components; ++c) {
    bool all_two = true;
    bool any = false;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (label[v] != c) continue;
      any = true;
      if (g.degree(v) != 2) all_two = false;
    }
    if (any && all_two) throw std::invalid_argument("cannot suppress degree-2 vertices of a cycle");
  }

  struct Working {
    VertexId u, v;
    Rational length;
    bool alive;
  };
  std::vector<Working> edges;
  std::vector<std::vector<std::size_t>> incident(g.vertex_count());
  for (const auto& e : g.edges()) {
    incident[e.u].push_back(edges.size());
    incident[e.v].push_back(edges.size());
    edges.push_back({e.u, e.v, e.length, true});
  }
  std::vector<bool> removed(g.vertex_count(), false);
  auto live = [&](VertexId v) {
    std::vector<std::size_t> out;
    for (std::size_t i : incident[v])
      if (edges[i].alive) out.push_back(i);
    return out;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (removed[v]) continue;
      const auto inc = live(v);
      if (inc.size() != 2) continue;
      const VertexId a = edges[inc[0]].u == v ? edges[inc[0]].v : edges[inc[0]].u;
      const VertexId b = edges[inc[1]].u == v ? edges[inc[1]].v : edges[inc[1]].u;
      if (a == b) throw std::invalid_argument("suppressing vertex \"" + g.name(v) + "\" would create a loop");
      edges[inc[0]].alive = false;
      edges[inc[1]].alive = false;
      removed[v] = true;
      incident[a].push_back(edges.size());
      incident[b].push_back(edges.size());
      edges.push_back({a, b, edges[inc[0]].length + edges[inc[1]].length, true});
      changed = true;
    }
  }
  WeightedMultigraph out;
  std::vector<VertexId> map(g.vertex_count(), kNoVertex);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!removed[v]) map[v] = out.add_vertex(g.name(v));
  for (const auto& e : edges)
    if (e.alive) out.add_edge(map[e.u], map[e.v], e.length);
  return out;
}

// Graph obtained from g by deleting the given vertices and their edges.
inline WeightedMultigraph delete_vertices(const WeightedMultigraph& g, std::span<const VertexId> gone) {
  std::vector<bool> drop(g.vertex_count(), false);
  for (VertexId v : gone) drop.at(v) = true;
  WeightedMultigraph out;
  std::vector<VertexId> map(g.vertex_count(), kNoVertex);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!drop[v]) map[v] = out.add_vertex(g.name(v));
  for (const auto& e : g.edges())
    if (!drop[e.u] && !drop[e.v]) out.add_edge(map[e.u], map[e.v], e.length);
  return out;
}

}  // namespace sgeo
