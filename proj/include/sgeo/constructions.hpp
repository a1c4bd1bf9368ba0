#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sgeo/graph.hpp"
#include "sgeo/shortcut_tree.hpp"

namespace sgeo {

// K_(k+1) on 1..k+1 plus an apex 0 joined to all of it; l(0j) = k-1 and
// l(ij) = k. H (the K_(k+1)) is k-geodesic but not (k+1)-geodesic.
struct HierarchyInstance {
  std::size_t k = 0;
  WeightedMultigraph g;
  std::vector<EdgeId> h_edges;

  Subgraph h() const { return Subgraph(g, h_edges); }
  std::vector<VertexId> h_vertices() const {
    std::vector<VertexId> out;
    for (VertexId v = 1; v <= k + 1; ++v) out.push_back(v);
    return out;
  }
};

inline HierarchyInstance hierarchy_example(std::size_t k) {
  if (k < 2) throw std::invalid_argument("hierarchy example needs k >= 2");
  HierarchyInstance inst;
  inst.k = k;
  inst.g = WeightedMultigraph(k + 2);
  const auto kk = static_cast<Rational::int_type>(k);
  for (VertexId j = 1; j <= k + 1; ++j) inst.g.add_edge(0, j, Rational(kk - 1));
  for (VertexId i = 1; i <= k + 1; ++i)
    for (VertexId j = i + 1; j <= k + 1; ++j) inst.h_edges.push_back(inst.g.add_edge(i, j, Rational(kk)));
  return inst;
}

// Edge lengths of the K_(2,2k) construction: `low` on ax, ax', by, by', x'y'
// and `high` on ay, bx. low = k-1 except for k = 1, where k-1 = 0 is not an
// admissible length and 1/4 is used instead (any value below high/2 works).
struct BipartiteLengths {
  Rational low;
  Rational high;
};

inline BipartiteLengths bipartite_lengths(std::size_t k) {
  if (k < 1) throw std::invalid_argument("bipartite example needs k >= 1");
  const auto kk = static_cast<Rational::int_type>(k);
  return {k == 1 ? Rational(1, 4) : Rational(kk - 1), Rational(kk)};
}

// H = K_(2,2k) with sides {x, y} and A + B, |A| = |B| = k; T is the double
// star x'y' with x' joined to A and y' joined to B.
struct BipartiteSctInstance {
  std::size_t k = 0;
  BipartiteLengths lengths;
  VertexId x = kNoVertex, y = kNoVertex, x_tree = kNoVertex, y_tree = kNoVertex;
  std::vector<VertexId> a, b;
  ShortcutTree sct;
};

inline BipartiteSctInstance bipartite_sct_example(std::size_t k) {
  const BipartiteLengths len = bipartite_lengths(k);
  WeightedMultigraph g;
  const VertexId x = g.add_vertex("x");
  const VertexId y = g.add_vertex("y");
  std::vector<VertexId> a, b;
  for (std::size_t i = 0; i < k; ++i) a.push_back(g.add_vertex("a" + std::to_string(i + 1)));
  for (std::size_t i = 0; i < k; ++i) b.push_back(g.add_vertex("b" + std::to_string(i + 1)));
  const VertexId xt = g.add_vertex("x'");
  const VertexId yt = g.add_vertex("y'");
  std::vector<EdgeId> host, tree;
  for (VertexId v : a) {
    host.push_back(g.add_edge(v, x, len.low));
    host.push_back(g.add_edge(v, y, len.high));
  }
  for (VertexId v : b) {
    host.push_back(g.add_edge(v, x, len.high));
    host.push_back(g.add_edge(v, y, len.low));
  }
  for (VertexId v : a) tree.push_back(g.add_edge(v, xt, len.low));
  for (VertexId v : b) tree.push_back(g.add_edge(v, yt, len.low));
  tree.push_back(g.add_edge(xt, yt, len.low));
  std::vector<VertexId> host_vertices{x, y};
  host_vertices.insert(host_vertices.end(), a.begin(), a.end());
  host_vertices.insert(host_vertices.end(), b.begin(), b.end());
  ShortcutTree sct(std::move(g), std::move(tree), std::move(host), std::move(host_vertices));
  return BipartiteSctInstance{k, len, x, y, xt, yt, std::move(a), std::move(b), std::move(sct)};
}

struct BipartiteSd {
  Rational host;  // sd_H(A' + B')
  Rational tree;  // sd_T(A' + B')
};

// Closed forms for |A'| + |B'| >= 2, with lo = low, hi = high:
//   sd_H = lo |A' + B'| + (hi - lo) min(|A'|, |B'|)
//   sd_T = lo |A' + B'|, plus lo when both A' and B' are non-empty.
// For k >= 2 this reads (k-1)|A' + B'| + |B'| when |A'| >= |B'|.
inline BipartiteSd bipartite_sd_closed_forms(std::size_t a_count, std::size_t b_count, std::size_t k) {
  if (a_count > k || b_count > k) throw std::invalid_argument("subset larger than its side");
  if (a_count + b_count < 2) throw std::invalid_argument("closed forms need at least two terminals");
  const BipartiteLengths len = bipartite_lengths(k);
  const auto total = static_cast<Rational::int_type>(a_count + b_count);
  const auto fewer = static_cast<Rational::int_type>(std::min(a_count, b_count));
  BipartiteSd out;
  out.host = len.low * Rational(total) + (len.high - len.low) * Rational(fewer);
  out.tree = len.low * Rational(total) + (a_count > 0 && b_count > 0 ? len.low : Rational(0));
  return out;
}

}  // namespace sgeo
