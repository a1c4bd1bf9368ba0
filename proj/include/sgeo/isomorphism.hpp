#pragma once

#include <algorithm>
#include <vector>

#include "sgeo/graph.hpp"

namespace sgeo {

inline constexpr std::size_t kIsomorphismVertexCap = 16;

namespace detail {

// Pairwise edge data: multiplicity, and the sorted length multiset when
// lengths are respected.
struct PairTable {
  std::size_t n = 0;
  std::vector<std::vector<Rational>> cells;

  PairTable(const WeightedMultigraph& g, bool respect_lengths) : n{g.vertex_count()}, cells(n * n) {
    for (const auto& e : g.edges()) {
      const Rational tag = respect_lengths ? e.length : Rational(1);
      cells[e.u * n + e.v].push_back(tag);
      cells[e.v * n + e.u].push_back(tag);
    }
    for (auto& c : cells) std::sort(c.begin(), c.end());
  }
  const std::vector<Rational>& at(VertexId a, VertexId b) const { return cells[a * n + b]; }
};

}  // namespace detail

// Brute-force multigraph isomorphism for desk-scale graphs.
inline bool multigraph_isomorphic(const WeightedMultigraph& g1, const WeightedMultigraph& g2, bool respect_lengths) {
  if (g1.vertex_count() > kIsomorphismVertexCap || g2.vertex_count() > kIsomorphismVertexCap)
    throw CapExceeded("isomorphism test limited to " + std::to_string(kIsomorphismVertexCap) + " vertices");
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
  const std::size_t n = g1.vertex_count();
  auto degrees = [](const WeightedMultigraph& g) {
    std::vector<std::size_t> d;
    for (VertexId v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
    return d;
  };
  const auto d1 = degrees(g1);
  const auto d2 = degrees(g2);
  {
    auto s1 = d1, s2 = d2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;
  }
  const detail::PairTable t1(g1, respect_lengths);
  const detail::PairTable t2(g2, respect_lengths);

  // Assign high-degree vertices first; they constrain the most.
  std::vector<VertexId> order(n);
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return d1[a] > d1[b]; });

  std::vector<VertexId> image(n, kNoVertex);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const VertexId v = order[depth];
    for (VertexId w = 0; w < n; ++w) {
      if (used[w] || d2[w] != d1[v]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const VertexId u = order[i];
        ok = t1.at(v, u) == t2.at(w, image[u]);
      }
      if (!ok) continue;
      image[v] = w;
      used[w] = true;
      if (self(self, depth + 1)) return true;
      used[w] = false;
      image[v] = kNoVertex;
    }
    return false;
  };
  return extend(extend, 0);
}

}  // namespace sgeo
