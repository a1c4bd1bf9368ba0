#pragma once

#include <set>
#include <utility>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "sgeo/graph.hpp"

namespace sgeo {

// Planarity of the underlying simple graph (parallel edges never affect
// planarity). Backed by Boost's Boyer-Myrvold test.
inline bool is_planar(const WeightedMultigraph& g) {
  using Simple = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Simple simple(g.vertex_count());
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& e : g.edges()) {
    const auto key = std::minmax(e.u, e.v);
    if (seen.insert(key).second) boost::add_edge(key.first, key.second, simple);
  }
  return boost::boyer_myrvold_planarity_test(simple);
}

}  // namespace sgeo
