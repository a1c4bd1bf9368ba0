#pragma once

#include <algorithm>
#include <bit>
#include <span>
#include <utility>
#include <vector>

#include "sgeo/graph.hpp"
#include "sgeo/steiner.hpp"

namespace sgeo {

inline constexpr std::size_t kSctLeafCap = 12;

// A tree T and a host graph H living in one joint graph that carries the
// length-function on T + H. T is given by its edge set; H by its edge set
// plus (possibly isolated) vertices. A shortcut tree for H satisfies
//   (1) V(T) ∩ V(H) = L(T)      (2) E(T) ∩ E(H) = ∅
//   (3) ℓ(T) < sd_H(L(T))      (4) sd_H(B) <= sd_T(B) for all B ⊊ L(T).
class ShortcutTree {
 public:
  ShortcutTree(WeightedMultigraph joint, std::vector<EdgeId> tree_edges, std::vector<EdgeId> host_edges,
               std::vector<VertexId> host_vertices)
      : joint_{std::move(joint)},
        tree_edges_{std::move(tree_edges)},
        host_edges_{std::move(host_edges)},
        host_vertices_{std::move(host_vertices)} {
    std::sort(tree_edges_.begin(), tree_edges_.end());
    std::sort(host_edges_.begin(), host_edges_.end());
    for (EdgeId e : host_edges_) {
      host_vertices_.push_back(joint_.edge(e).u);
      host_vertices_.push_back(joint_.edge(e).v);
    }
    std::sort(host_vertices_.begin(), host_vertices_.end());
    host_vertices_.erase(std::unique(host_vertices_.begin(), host_vertices_.end()), host_vertices_.end());
    for (EdgeId e : tree_edges_) joint_.edge(e);
  }

  // Glues a standalone tree onto a host: tree leaf `first` is identified
  // with host vertex `second`. Host ids are preserved in the joint graph;
  // the other tree vertices become fresh vertices.
  static ShortcutTree assemble(const WeightedMultigraph& host, const WeightedMultigraph& tree,
                               std::span<const std::pair<VertexId, VertexId>> leaf_map) {
    WeightedMultigraph joint = host;
    std::vector<VertexId> map(tree.vertex_count(), kNoVertex);
    std::vector<bool> image_used(host.vertex_count(), false);
    for (const auto& [t, h] : leaf_map) {
      tree.check_vertex(t);
      host.check_vertex(h);
      if (map[t] != kNoVertex) throw std::invalid_argument("tree vertex mapped twice");
      if (image_used[h]) throw std::invalid_argument("leaf map is not injective");
      image_used[h] = true;
      map[t] = h;
    }
    for (VertexId t = 0; t < tree.vertex_count(); ++t) {
      if (map[t] != kNoVertex) continue;
      std::string name = tree.name(t);
      while (joint.find_vertex(name)) name += "'";
      map[t] = joint.add_vertex(name);
    }
    std::vector<EdgeId> tree_edges;
    for (const auto& e : tree.edges()) tree_edges.push_back(joint.add_edge(map[e.u], map[e.v], e.length));
    std::vector<EdgeId> host_edges(host.edge_count());
    for (EdgeId e = 0; e < host.edge_count(); ++e) host_edges[e] = e;
    std::vector<VertexId> host_vertices(host.vertex_count());
    for (VertexId v = 0; v < host.vertex_count(); ++v) host_vertices[v] = v;
    return ShortcutTree(std::move(joint), std::move(tree_edges), std::move(host_edges), std::move(host_vertices));
  }

  const WeightedMultigraph& joint() const noexcept { return joint_; }
  std::span<const EdgeId> tree_edges() const noexcept { return tree_edges_; }
  std::span<const EdgeId> host_edges() const noexcept { return host_edges_; }
  std::span<const VertexId> host_vertices() const noexcept { return host_vertices_; }

  // Views into joint(); valid while *this is alive.
  Subgraph tree_view() const { return Subgraph(joint_, tree_edges_); }
  Subgraph host_view() const { return Subgraph(joint_, host_edges_, host_vertices_); }

  // Joint ids of the leaves of T.
  std::vector<VertexId> leaves() const {
    std::vector<std::size_t> degree(joint_.vertex_count(), 0);
    for (EdgeId e : tree_edges_) {
      ++degree[joint_.edge(e).u];
      ++degree[joint_.edge(e).v];
    }
    std::vector<VertexId> out;
    for (VertexId v = 0; v < joint_.vertex_count(); ++v)
      if (degree[v] == 1) out.push_back(v);
    return out;
  }

  Rational tree_length() const {
    Rational sum;
    for (EdgeId e : tree_edges_) sum += joint_.edge(e).length;
    return sum;
  }

  // Same configuration with new lengths on the tree edges (in tree_edges() order).
  ShortcutTree with_tree_lengths(std::span<const Rational> lengths) const {
    if (lengths.size() != tree_edges_.size()) throw std::invalid_argument("one length per tree edge expected");
    std::vector<Rational> all;
    for (const auto& e : joint_.edges()) all.push_back(e.length);
    for (std::size_t i = 0; i < lengths.size(); ++i) all[tree_edges_[i]] = lengths[i];
    return ShortcutTree(joint_.with_lengths(all), tree_edges_, host_edges_, host_vertices_);
  }

 private:
  WeightedMultigraph joint_;
  std::vector<EdgeId> tree_edges_;
  std::vector<EdgeId> host_edges_;
  std::vector<VertexId> host_vertices_;
};

struct SctReport {
  bool sct1 = false;
  bool sct2 = false;
  bool sct3 = false;
  bool sct4 = false;
  Rational tree_length;
  Distance host_steiner_distance;                  // sd_H(L(T))
  Distance margin;                                 // sd_H(L(T)) - ℓ(T)
  std::vector<std::vector<VertexId>> violated_subsets;  // joint ids

  bool valid() const { return sct1 && sct2 && sct3 && sct4; }
};

// Exact evaluation of the four shortcut-tree conditions. Singletons are
// skipped in (4) since both sides vanish.
inline SctReport verify_sct(const ShortcutTree& s) {
  const WeightedMultigraph& joint = s.joint();
  const Materialized tree = s.tree_view().materialize();
  const StructureReport shape = structural_predicates(tree.graph);
  if (!shape.is_tree || tree.graph.edge_count() == 0) throw std::invalid_argument("tree part is not a tree with an edge");
  const std::vector<VertexId> leaves = s.leaves();
  if (leaves.size() > kSctLeafCap) throw CapExceeded("shortcut tree verification limited to " + std::to_string(kSctLeafCap) + " leaves");

  SctReport r;
  {
    const Subgraph host = s.host_view();
    std::vector<VertexId> common;
    for (VertexId v : tree.to_host_vertex)
      if (host.contains_vertex(v)) common.push_back(v);
    r.sct1 = common == leaves;
    r.sct2 = std::none_of(s.tree_edges().begin(), s.tree_edges().end(),
                          [&](EdgeId e) { return host.contains_edge(e); });
  }

  // sd_T(B) is the total length of tree edges that separate B.
  const std::size_t m = leaves.size();
  using Mask = SteinerTable::Mask;
  std::vector<std::pair<Mask, Rational>> cuts;
  {
    const Subgraph tv = s.tree_view();
    for (EdgeId e : s.tree_edges()) {
      const EdgeBipartition split = edge_bipartition(tv, e, leaves);
      Mask side = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (std::find(split.first.begin(), split.first.end(), leaves[i]) != split.first.end()) side |= Mask{1} << i;
      cuts.emplace_back(side, joint.edge(e).length);
    }
  }
  const Mask full = static_cast<Mask>((std::size_t{1} << m) - 1);
  auto tree_sd = [&](Mask b) {
    Rational sum;
    for (const auto& [side, len] : cuts)
      if ((b & side) != 0 && (b & ~side) != 0) sum += len;
    return sum;
  };

  // sd_H over subsets of the leaves; leaves outside H make the value infinite.
  const Materialized host = s.host_view().materialize();
  std::vector<VertexId> in_host;
  std::vector<std::size_t> position(m, kNoVertex);
  Mask outside = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const VertexId h = host.from_host_vertex[leaves[i]];
    if (h == kNoVertex) {
      outside |= Mask{1} << i;
    } else {
      position[i] = in_host.size();
      in_host.push_back(h);
    }
  }
  const SteinerTable table(host.graph, in_host, in_host.size());
  auto host_sd = [&](Mask b) -> Distance {
    if ((b & outside) != 0) return Distance::infinity();
    Mask local = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (b >> i & 1u) local |= Mask{1} << position[i];
    return table.distance(local);
  };

  r.tree_length = s.tree_length();
  r.host_steiner_distance = host_sd(full);
  r.margin = r.host_steiner_distance.is_finite() ? Distance(r.host_steiner_distance.value() - r.tree_length)
                                                 : Distance::infinity();
  r.sct3 = r.tree_length < r.host_steiner_distance;
  r.sct4 = true;
  for (Mask b = 1; b < full; ++b) {
    if (std::popcount(b) < 2) continue;
    if (host_sd(b) <= Distance(tree_sd(b))) continue;
    r.sct4 = false;
    std::vector<VertexId> subset;
    for (std::size_t i = 0; i < m; ++i)
      if (b >> i & 1u) subset.push_back(leaves[i]);
    r.violated_subsets.push_back(std::move(subset));
  }
  return r;
}

}  // namespace sgeo
