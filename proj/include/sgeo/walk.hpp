#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <vector>

#include "sgeo/graph.hpp"
#include "sgeo/planarity.hpp"
#include "sgeo/steiner.hpp"

namespace sgeo {

// Alternating vertex/edge sequence v1 e1 v2 ... ek v(k+1).
struct Walk {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  bool closed() const { return !vertices.empty() && vertices.front() == vertices.back(); }

  Rational length(const WeightedMultigraph& g) const {
    Rational sum;
    for (EdgeId e : edges) sum += g.edge(e).length;
    return sum;
  }
};

enum class Orientation { forward, backward };

// Walk traced by the cycle c0 c1 ... c(r-1) c0: each cycle edge ab, taken
// from `start` in the given orientation, is replaced by a shortest a-b path
// in g (lexicographically least vertex sequence among shortest paths).
inline Walk trace_walk(const WeightedMultigraph& g, const DistanceMatrix& d, std::span<const VertexId> cycle,
                       VertexId start, Orientation orientation = Orientation::forward) {
  if (cycle.size() < 2) throw std::invalid_argument("a cycle needs at least two vertices");
  auto it = std::find(cycle.begin(), cycle.end(), start);
  if (it == cycle.end()) throw std::invalid_argument("start vertex is not on the cycle");
  std::vector<VertexId> order;
  const std::size_t r = cycle.size();
  const std::size_t s = static_cast<std::size_t>(it - cycle.begin());
  for (std::size_t i = 0; i < r; ++i)
    order.push_back(orientation == Orientation::forward ? cycle[(s + i) % r] : cycle[(s + r - i) % r]);
  order.push_back(start);
  Walk w;
  w.vertices.push_back(start);
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const PathResult p = shortest_path(g, d, order[i], order[i + 1]);
    w.vertices.insert(w.vertices.end(), p.vertices.begin() + 1, p.vertices.end());
    w.edges.insert(w.edges.end(), p.edges.begin(), p.edges.end());
  }
  return w;
}

inline Walk trace_walk(const WeightedMultigraph& g, std::span<const VertexId> cycle, VertexId start,
                       Orientation orientation = Orientation::forward) {
  return trace_walk(g, shortest_path_matrix(g), cycle, start, orientation);
}

// m_W(e): how often W traverses e.
inline std::map<EdgeId, std::size_t> walk_multiplicities(const Walk& w) {
  std::map<EdgeId, std::size_t> m;
  for (EdgeId e : w.edges) ++m[e];
  return m;
}

inline Rational cycle_distance_sum(const DistanceMatrix& d, std::span<const VertexId> cycle) {
  Rational sum;
  for (std::size_t i = 0; i < cycle.size(); ++i) sum += d(cycle[i], cycle[(i + 1) % cycle.size()]).value();
  return sum;
}

// Cyclic order of the leaves met by an Eulerian circuit of the tree with
// every edge doubled (Hierholzer, started at the smallest leaf).
inline std::vector<VertexId> eulerian_double_cover_cycle(const WeightedMultigraph& tree) {
  const StructureReport s = structural_predicates(tree);
  if (!s.is_tree) throw std::invalid_argument("eulerian_double_cover_cycle requires a tree");
  if (s.leaves.size() < 2) throw std::invalid_argument("tree needs at least two leaves");
  const std::size_t copies = 2 * tree.edge_count();
  std::vector<bool> used(copies, false);
  std::vector<std::vector<std::size_t>> adj(tree.vertex_count());
  for (const auto& e : tree.edges()) {
    for (std::size_t c = 0; c < 2; ++c) {
      adj[e.u].push_back(2 * e.id + c);
      adj[e.v].push_back(2 * e.id + c);
    }
  }
  std::vector<std::size_t> next(tree.vertex_count(), 0);
  std::vector<VertexId> stack{s.leaves.front()};
  std::vector<VertexId> circuit;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    while (next[v] < adj[v].size() && used[adj[v][next[v]]]) ++next[v];
    if (next[v] == adj[v].size()) {
      circuit.push_back(v);
      stack.pop_back();
      continue;
    }
    const std::size_t c = adj[v][next[v]];
    used[c] = true;
    stack.push_back(tree.edge(static_cast<EdgeId>(c / 2)).other(v));
  }
  std::vector<bool> is_leaf(tree.vertex_count(), false);
  for (VertexId v : s.leaves) is_leaf[v] = true;
  std::vector<VertexId> order;
  std::vector<bool> seen(tree.vertex_count(), false);
  for (VertexId v : circuit) {
    if (is_leaf[v] && !seen[v]) {
      seen[v] = true;
      order.push_back(v);
    }
  }
  return order;
}

struct PlanarEquivalence {
  bool planar = false;             // T + C is planar
  bool arcs_connected = false;     // every edge of T splits V(C) into two arcs of C
  bool doubly_traversed = false;   // the traced walk uses every edge of T exactly twice

  bool consistent() const { return planar == arcs_connected && arcs_connected == doubly_traversed; }
};

// Graph T + C, where C joins consecutive entries of `cycle` (two parallel
// edges for a 2-cycle). C-edges get unit length.
inline WeightedMultigraph tree_plus_cycle(const WeightedMultigraph& tree, std::span<const VertexId> cycle) {
  WeightedMultigraph g = tree;
  if (cycle.size() == 2) {
    g.add_edge(cycle[0], cycle[1], Rational(1));
    g.add_edge(cycle[0], cycle[1], Rational(1));
  } else {
    for (std::size_t i = 0; i < cycle.size(); ++i) g.add_edge(cycle[i], cycle[(i + 1) % cycle.size()], Rational(1));
  }
  return g;
}

inline PlanarEquivalence planar_equivalence_report(const WeightedMultigraph& tree, std::span<const VertexId> cycle) {
  const StructureReport s = structural_predicates(tree);
  if (!s.is_tree) throw std::invalid_argument("planar_equivalence_report requires a tree");
  {
    std::vector<VertexId> sorted(cycle.begin(), cycle.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted != s.leaves) throw std::invalid_argument("cycle vertex set must equal the leaf set of the tree");
  }
  if (cycle.size() < 2) throw std::invalid_argument("tree needs at least two leaves");
  PlanarEquivalence r;
  r.planar = is_planar(tree_plus_cycle(tree, cycle));

  const Subgraph whole = Subgraph::whole(tree);
  r.arcs_connected = true;
  for (const auto& e : tree.edges()) {
    const EdgeBipartition split = edge_bipartition(whole, e.id, cycle);
    std::vector<bool> first(tree.vertex_count(), false);
    for (VertexId v : split.first) first[v] = true;
    std::size_t changes = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i)
      changes += first[cycle[i]] != first[cycle[(i + 1) % cycle.size()]];
    if (changes != 2) r.arcs_connected = false;
  }

  const Walk w = trace_walk(tree, cycle, cycle.front());
  const auto m = walk_multiplicities(w);
  r.doubly_traversed = m.size() == tree.edge_count();
  for (const auto& [edge, count] : m)
    if (count != 2) r.doubly_traversed = false;
  return r;
}

}  // namespace sgeo
