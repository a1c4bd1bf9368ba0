#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "sgeo/graph.hpp"

namespace sgeo {

inline constexpr std::size_t kTopologyLeafCap = 8;

// Leaf-labelled tree without degree-2 vertices. Vertices 0..leaf_count-1
// are the leaves (leaf i carries label i); internal vertices follow.
struct TreeTopology {
  std::size_t leaf_count = 0;
  std::size_t vertex_count = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;

  // Unit-length graph; leaves named "l<i>", internal vertices "t<j>".
  WeightedMultigraph to_graph(std::span<const Rational> lengths = {}) const {
    WeightedMultigraph g;
    for (std::size_t v = 0; v < vertex_count; ++v)
      g.add_vertex(v < leaf_count ? "l" + std::to_string(v) : "t" + std::to_string(v - leaf_count));
    for (std::size_t i = 0; i < edges.size(); ++i)
      g.add_edge(edges[i].first, edges[i].second, lengths.empty() ? Rational(1) : lengths[i]);
    return g;
  }

  // For each edge, the set of leaves on the side of its first endpoint.
  std::vector<std::uint32_t> leaf_splits() const {
    std::vector<std::vector<std::size_t>> adj(vertex_count);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      adj[edges[i].first].push_back(i);
      adj[edges[i].second].push_back(i);
    }
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      std::uint32_t mask = 0;
      std::vector<bool> seen(vertex_count, false);
      std::vector<VertexId> stack{edges[i].first};
      seen[edges[i].first] = true;
      while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        if (v < leaf_count) mask |= std::uint32_t{1} << v;
        for (std::size_t f : adj[v]) {
          if (f == i) continue;
          const VertexId w = edges[f].first == v ? edges[f].second : edges[f].first;
          if (!seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
        }
      }
      out.push_back(mask);
    }
    return out;
  }
};

// All leaf-labelled trees with m leaves and no degree-2 vertices, each once.
// Leaf i is inserted into every topology on leaves 0..i-1 either by
// subdividing an edge or by attaching to an internal vertex; deleting the
// largest leaf (and suppressing) inverts the step, so there are no repeats.
inline std::vector<TreeTopology> enumerate_topologies(std::size_t m) {
  if (m > kTopologyLeafCap) throw CapExceeded("topology enumeration limited to " + std::to_string(kTopologyLeafCap) + " leaves");
  if (m < 2) throw std::invalid_argument("a topology needs at least two leaves");
  // During construction vertex ids are: leaves 0..m-1, internal from m on.
  std::vector<TreeTopology> level{TreeTopology{2, m, {{0, 1}}}};
  for (VertexId leaf = 2; leaf < m; ++leaf) {
    std::vector<TreeTopology> next;
    for (const auto& t : level) {
      for (std::size_t i = 0; i < t.edges.size(); ++i) {
        TreeTopology u = t;
        const auto w = static_cast<VertexId>(u.vertex_count++);
        const auto [a, b] = u.edges[i];
        u.edges[i] = {a, w};
        u.edges.push_back({w, b});
        u.edges.push_back({w, leaf});
        u.leaf_count = leaf + 1;
        next.push_back(std::move(u));
      }
      for (auto w = static_cast<VertexId>(m); w < t.vertex_count; ++w) {
        TreeTopology u = t;
        u.edges.push_back({w, leaf});
        u.leaf_count = leaf + 1;
        next.push_back(std::move(u));
      }
    }
    level = std::move(next);
  }
  for (auto& t : level) {
    t.leaf_count = m;
    for (auto& [a, b] : t.edges)
      if (a > b) std::swap(a, b);
    std::sort(t.edges.begin(), t.edges.end());
  }
  return level;
}

}  // namespace sgeo
