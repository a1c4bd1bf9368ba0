#pragma once

#include <algorithm>
#include <bit>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "sgeo/geodesic.hpp"
#include "sgeo/graph.hpp"

namespace sgeo {

inline constexpr std::size_t kCycleEnumerationEdgeCap = 16;

// Characteristic vector over GF(2), bit i = edge id i.
using EdgeVector = boost::dynamic_bitset<>;

struct Cycle {
  EdgeVector support;
  std::vector<VertexId> vertices;  // cyclic order, starting at the smallest id
  std::vector<EdgeId> edges;       // sorted
  Rational length;
};

// All cycles (2-cycles from parallel edges included), ordered by edge set.
// Exhaustive over edge subsets, hence the cap.
inline std::vector<Cycle> enumerate_cycles(const WeightedMultigraph& g) {
  const std::size_t m = g.edge_count();
  if (m > kCycleEnumerationEdgeCap)
    throw CapExceeded("cycle enumeration limited to " + std::to_string(kCycleEnumerationEdgeCap) + " edges");
  std::vector<Cycle> out;
  std::vector<std::size_t> degree(g.vertex_count());
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
    std::fill(degree.begin(), degree.end(), 0);
    bool ok = true;
    for (EdgeId e = 0; e < m && ok; ++e) {
      if (!(mask >> e & 1u)) continue;
      ok = ++degree[g.edge(e).u] <= 2 && ++degree[g.edge(e).v] <= 2;
    }
    if (!ok) continue;
    if (std::any_of(degree.begin(), degree.end(), [](std::size_t d) { return d == 1; })) continue;
    // 2-regular on its support; a single cycle iff walking from one edge uses all of them.
    const auto first = static_cast<EdgeId>(std::countr_zero(mask));
    Cycle c;
    c.support.resize(m);
    const VertexId start = g.edge(first).u;
    VertexId cur = g.edge(first).v;
    EdgeId prev = first;
    c.vertices.push_back(start);
    c.edges.push_back(first);
    while (cur != start) {
      c.vertices.push_back(cur);
      EdgeId next = prev;
      for (EdgeId e : g.incident(cur))
        if ((mask >> e & 1u) && e != prev) next = e;
      c.edges.push_back(next);
      cur = g.edge(next).other(cur);
      prev = next;
    }
    if (c.edges.size() != static_cast<std::size_t>(std::popcount(mask))) continue;
    std::sort(c.edges.begin(), c.edges.end());
    for (EdgeId e : c.edges) {
      c.support.set(e);
      c.length += g.edge(e).length;
    }
    std::rotate(c.vertices.begin(), std::min_element(c.vertices.begin(), c.vertices.end()), c.vertices.end());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Cycle& x, const Cycle& y) { return x.edges < y.edges; });
  return out;
}

// Indices of the cycles that are k-geodesic (k = 0: fully geodesic).
inline std::vector<std::size_t> geodesic_cycle_indices(const WeightedMultigraph& g, const std::vector<Cycle>& cycles,
                                                       std::size_t k = 0) {
  std::vector<VertexId> all(g.vertex_count());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  std::size_t longest = 2;
  for (const Cycle& c : cycles) longest = std::max(longest, c.vertices.size());
  const std::size_t table_k = k == 0 ? longest : std::min(k, longest);
  if (cycles.empty()) return {};
  const GeodesicChecker checker(g, all, table_k);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const Subgraph h(g, cycles[i].edges);
    const std::size_t kk = k == 0 ? cycles[i].vertices.size() : std::min(k, table_k);
    if (checker.check(h, std::max<std::size_t>(kk, 2), false).holds) out.push_back(i);
  }
  return out;
}

inline std::vector<Cycle> fully_geodesic_cycles(const WeightedMultigraph& g) {
  std::vector<Cycle> cycles = enumerate_cycles(g);
  std::vector<Cycle> out;
  for (std::size_t i : geodesic_cycle_indices(g, cycles)) out.push_back(cycles[i]);
  return out;
}

// Incremental GF(2) row echelon form.
class Gf2Basis {
 public:
  explicit Gf2Basis(std::size_t bits) : bits_{bits} {}

  EdgeVector reduce(EdgeVector v) const {
    for (const auto& [pivot, row] : rows_)
      if (v.test(pivot)) v ^= row;
    return v;
  }
  bool contains(const EdgeVector& v) const { return reduce(v).none(); }
  // Returns true when v was independent of the current rows.
  bool insert(const EdgeVector& v) {
    if (v.size() != bits_) throw std::invalid_argument("vector size mismatch");
    EdgeVector r = reduce(v);
    if (r.none()) return false;
    const std::size_t pivot = r.find_first();
    for (auto& [p, row] : rows_)
      if (row.test(pivot)) row ^= r;
    rows_.emplace_back(pivot, std::move(r));
    return true;
  }
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  std::size_t bits_;
  std::vector<std::pair<std::size_t, EdgeVector>> rows_;
};

struct SpanReport {
  std::size_t rank = 0;
  std::size_t cyclomatic = 0;  // |E| - |V| + components
  bool spans_cycle_space = false;
};

inline std::size_t cyclomatic_number(const WeightedMultigraph& g) {
  std::size_t components = 0;
  component_labels(g, &components);
  return g.edge_count() + components - g.vertex_count();
}

inline SpanReport gf2_rank_and_span(const std::vector<EdgeVector>& vectors, const WeightedMultigraph& g) {
  Gf2Basis basis(g.edge_count());
  for (const auto& v : vectors) basis.insert(v);
  SpanReport r;
  r.rank = basis.rank();
  r.cyclomatic = cyclomatic_number(g);
  r.spans_cycle_space = r.rank == r.cyclomatic;
  return r;
}

// Cycles whose vector is outside the span of all strictly shorter cycles.
inline std::vector<std::size_t> non_2sum_cycle_indices(const WeightedMultigraph& g, const std::vector<Cycle>& cycles) {
  std::vector<std::size_t> order(cycles.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return cycles[x].length < cycles[y].length; });
  Gf2Basis shorter(g.edge_count());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && cycles[order[j]].length == cycles[order[i]].length) ++j;
    for (std::size_t t = i; t < j; ++t)
      if (!shorter.contains(cycles[order[t]].support)) out.push_back(order[t]);
    for (std::size_t t = i; t < j; ++t) shorter.insert(cycles[order[t]].support);
    i = j;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Cycle> non_2sum_cycles(const WeightedMultigraph& g) {
  std::vector<Cycle> cycles = enumerate_cycles(g);
  std::vector<Cycle> out;
  for (std::size_t i : non_2sum_cycle_indices(g, cycles)) out.push_back(cycles[i]);
  return out;
}

}  // namespace sgeo
