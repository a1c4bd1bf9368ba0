#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <vector>

#include "sgeo/graph.hpp"

namespace sgeo {

inline constexpr std::size_t kDefaultTerminalCap = 12;
inline constexpr std::size_t kBruteForceEdgeCap = 16;

class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::size_t n) : n_{n}, d_(n * n, Distance::infinity()) {
    for (std::size_t v = 0; v < n; ++v) d_[v * n + v] = Rational(0);
  }
  std::size_t size() const noexcept { return n_; }
  const Distance& operator()(VertexId a, VertexId b) const { return d_[a * n_ + b]; }
  Distance& operator()(VertexId a, VertexId b) { return d_[a * n_ + b]; }

 private:
  std::size_t n_;
  std::vector<Distance> d_;
};

// All-pairs exact distances (Floyd-Warshall).
inline DistanceMatrix shortest_path_matrix(const WeightedMultigraph& g) {
  const std::size_t n = g.vertex_count();
  DistanceMatrix d(n);
  for (const auto& e : g.edges()) {
    if (e.length < d(e.u, e.v)) {
      d(e.u, e.v) = e.length;
      d(e.v, e.u) = e.length;
    }
  }
  for (VertexId k = 0; k < n; ++k)
    for (VertexId i = 0; i < n; ++i) {
      if (!d(i, k).is_finite()) continue;
      for (VertexId j = 0; j < n; ++j) {
        if (!d(k, j).is_finite()) continue;
        const Distance through = d(i, k) + d(k, j);
        if (through < d(i, j)) d(i, j) = through;
      }
    }
  return d;
}

struct PathResult {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

// Shortest a-b path with the lexicographically least vertex sequence
// (parallel edges broken by smallest edge id).
inline PathResult shortest_path(const WeightedMultigraph& g, const DistanceMatrix& d, VertexId a, VertexId b) {
  if (!d(a, b).is_finite())
    throw std::invalid_argument("no path between \"" + g.name(a) + "\" and \"" + g.name(b) + "\"");
  PathResult p;
  p.vertices.push_back(a);
  VertexId cur = a;
  while (cur != b) {
    VertexId best_w = kNoVertex;
    EdgeId best_e = 0;
    for (EdgeId f : g.incident(cur)) {
      const Edge& edge = g.edge(f);
      const VertexId w = edge.other(cur);
      if (!(Distance(edge.length) + d(w, b) == d(cur, b))) continue;
      if (w < best_w || (w == best_w && f < best_e)) {
        best_w = w;
        best_e = f;
      }
    }
    p.edges.push_back(best_e);
    p.vertices.push_back(best_w);
    cur = best_w;
  }
  return p;
}

struct SteinerResult {
  Distance distance;
  std::vector<VertexId> vertices;  // sorted
  std::vector<EdgeId> edges;       // sorted
};

// Dreyfus-Wagner table: Steiner distances of every subset of a terminal list
// (optionally only subsets up to a given size). Entry (S, v) is the minimum
// length of a tree spanning S + v; trees are reconstructed from recorded
// split masks and relaxation sources in a fixed scan order.
class SteinerTable {
 public:
  using Mask = std::uint32_t;

  SteinerTable(const WeightedMultigraph& g, std::vector<VertexId> terminals, std::size_t max_size,
               const DistanceMatrix* distances = nullptr)
      : g_{&g}, terminals_{std::move(terminals)}, n_{g.vertex_count()} {
    if (terminals_.size() > 24) throw CapExceeded("Steiner table limited to 24 terminals");
    for (VertexId t : terminals_) g.check_vertex(t);
    if (distances) {
      dist_ = *distances;
    } else {
      dist_ = shortest_path_matrix(g);
    }
    const std::size_t masks = std::size_t{1} << terminals_.size();
    dp_.assign(masks * n_, Distance::infinity());
    merged_split_.assign(masks * n_, 0);
    relax_from_.assign(masks * n_, kNoVertex);
    std::vector<Distance> merged(n_);
    for (Mask s = 1; s < masks; ++s) {
      if (static_cast<std::size_t>(std::popcount(s)) > max_size) continue;
      std::fill(merged.begin(), merged.end(), Distance::infinity());
      if (std::has_single_bit(s)) {
        merged[terminals_[std::countr_zero(s)]] = Rational(0);
      } else {
        const Mask low = s & (~s + 1);
        const Mask rest = s ^ low;
        for (VertexId v = 0; v < n_; ++v) {
          // Submasks of s that contain its lowest bit, each split counted once.
          for (Mask sub = rest;; sub = (sub - 1) & rest) {
            const Mask a = sub | low;
            if (a != s) {
              const Distance cand = at(a, v) + at(s ^ a, v);
              if (cand < merged[v]) {
                merged[v] = cand;
                merged_split_[s * n_ + v] = a;
              }
            }
            if (sub == 0) break;
          }
        }
      }
      for (VertexId v = 0; v < n_; ++v) {
        Distance best = Distance::infinity();
        VertexId from = kNoVertex;
        for (VertexId u = 0; u < n_; ++u) {
          if (!merged[u].is_finite()) continue;
          const Distance cand = merged[u] + dist_(u, v);
          if (cand < best) {
            best = cand;
            from = u;
          }
        }
        dp_[s * n_ + v] = best;
        relax_from_[s * n_ + v] = from;
      }
    }
  }

  std::span<const VertexId> terminals() const noexcept { return terminals_; }
  const DistanceMatrix& distances() const noexcept { return dist_; }

  Distance distance(Mask s) const {
    if (s == 0) return Rational(0);
    return at(s, terminals_[std::countr_zero(s)]);
  }

  SteinerResult tree(Mask s) const {
    SteinerResult r;
    r.distance = distance(s);
    if (s == 0 || !r.distance.is_finite()) return r;
    std::set<EdgeId> edges;
    std::set<VertexId> vertices;
    collect(s, terminals_[std::countr_zero(s)], edges, vertices);
    r.edges.assign(edges.begin(), edges.end());
    r.vertices.assign(vertices.begin(), vertices.end());
    return r;
  }

 private:
  const Distance& at(Mask s, VertexId v) const { return dp_[s * n_ + v]; }

  void collect(Mask s, VertexId v, std::set<EdgeId>& edges, std::set<VertexId>& vertices) const {
    const VertexId u = relax_from_[s * n_ + v];
    const PathResult p = shortest_path(*g_, dist_, u, v);
    edges.insert(p.edges.begin(), p.edges.end());
    vertices.insert(p.vertices.begin(), p.vertices.end());
    if (std::has_single_bit(s)) return;
    const Mask a = merged_split_[s * n_ + u];
    collect(a, u, edges, vertices);
    collect(s ^ a, u, edges, vertices);
  }

  const WeightedMultigraph* g_;
  std::vector<VertexId> terminals_;
  std::size_t n_;
  DistanceMatrix dist_{0};
  std::vector<Distance> dp_;
  std::vector<Mask> merged_split_;
  std::vector<VertexId> relax_from_;
};

namespace detail {

inline std::vector<VertexId> normalized_terminals(const WeightedMultigraph& g, std::span<const VertexId> a) {
  std::vector<VertexId> t(a.begin(), a.end());
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  for (VertexId v : t)
    if (v >= g.vertex_count()) throw std::invalid_argument("terminal " + std::to_string(v) + " is not a vertex");
  return t;
}

}  // namespace detail

// Steiner distance and one Steiner tree of A in G.
inline SteinerResult steiner_tree(const WeightedMultigraph& g, std::span<const VertexId> a,
                                  std::size_t cap = kDefaultTerminalCap) {
  auto t = detail::normalized_terminals(g, a);
  if (t.size() > cap) throw CapExceeded("terminal set of size " + std::to_string(t.size()) + " exceeds cap " + std::to_string(cap));
  if (t.empty()) return SteinerResult{Rational(0), {}, {}};
  const auto full = static_cast<SteinerTable::Mask>((std::size_t{1} << t.size()) - 1);
  const SteinerTable table(g, t, t.size());
  SteinerResult r = table.tree(full);
  if (t.size() == 1) r.vertices = t;
  return r;
}

// In a tree the Steiner tree of A is unique: the union of the paths between
// terminals, obtained here by pruning non-terminal leaves.
inline SteinerResult steiner_tree_in_tree(const Subgraph& tree, std::span<const VertexId> a) {
  const WeightedMultigraph& host = tree.host();
  std::vector<bool> terminal(host.vertex_count(), false);
  for (VertexId v : a) {
    if (!tree.contains_vertex(v)) throw std::invalid_argument("terminal " + std::to_string(v) + " is not in the tree");
    terminal[v] = true;
  }
  if (!structural_predicates(tree).is_tree) throw std::invalid_argument("steiner_tree_in_tree requires a tree");
  SteinerResult r;
  std::size_t terminals = 0;
  for (bool b : terminal) terminals += b;
  if (terminals <= 1) {
    r.distance = Rational(0);
    for (VertexId v = 0; v < host.vertex_count(); ++v)
      if (terminal[v]) r.vertices.push_back(v);
    return r;
  }
  std::vector<bool> alive_edge(host.edge_count(), false);
  std::vector<std::size_t> degree(host.vertex_count(), 0);
  for (EdgeId e : tree.edges()) {
    alive_edge[e] = true;
    ++degree[host.edge(e).u];
    ++degree[host.edge(e).v];
  }
  std::vector<VertexId> queue;
  for (VertexId v : tree.vertices())
    if (degree[v] == 1 && !terminal[v]) queue.push_back(v);
  while (!queue.empty()) {
    const VertexId v = queue.back();
    queue.pop_back();
    for (EdgeId e : host.incident(v)) {
      if (!alive_edge[e]) continue;
      alive_edge[e] = false;
      --degree[v];
      const VertexId w = host.edge(e).other(v);
      if (--degree[w] == 1 && !terminal[w]) queue.push_back(w);
    }
  }
  Rational length;
  std::vector<bool> in(host.vertex_count(), false);
  for (EdgeId e = 0; e < host.edge_count(); ++e) {
    if (!alive_edge[e]) continue;
    r.edges.push_back(e);
    length += host.edge(e).length;
    in[host.edge(e).u] = in[host.edge(e).v] = true;
  }
  for (VertexId v = 0; v < host.vertex_count(); ++v)
    if (in[v]) r.vertices.push_back(v);
  r.distance = length;
  return r;
}

// Exhaustive minimum over connected edge subsets containing A. Test oracle.
inline SteinerResult brute_force_steiner(const WeightedMultigraph& g, std::span<const VertexId> a) {
  if (g.edge_count() > kBruteForceEdgeCap)
    throw CapExceeded("brute-force Steiner limited to " + std::to_string(kBruteForceEdgeCap) + " edges");
  const auto t = detail::normalized_terminals(g, a);
  if (t.size() <= 1) return SteinerResult{Rational(0), t, {}};
  SteinerResult best;
  const std::size_t m = g.edge_count();
  std::vector<VertexId> parent(g.vertex_count());
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
    std::iota(parent.begin(), parent.end(), VertexId{0});
    std::vector<bool> touched(g.vertex_count(), false);
    Rational length;
    for (EdgeId e = 0; e < m; ++e) {
      if (!(mask >> e & 1u)) continue;
      const Edge& edge = g.edge(e);
      touched[edge.u] = touched[edge.v] = true;
      parent[find(edge.u)] = find(edge.v);
      length += edge.length;
    }
    if (best.distance.is_finite() && !(length < best.distance.value())) continue;
    bool ok = true;
    for (VertexId v : t) ok = ok && touched[v];
    if (!ok) continue;
    VertexId root = kNoVertex;
    for (VertexId v = 0; v < g.vertex_count() && ok; ++v) {
      if (!touched[v]) continue;
      if (root == kNoVertex) root = find(v);
      ok = find(v) == root;
    }
    if (!ok) continue;
    best.distance = length;
    best.edges.clear();
    best.vertices.clear();
    for (EdgeId e = 0; e < m; ++e)
      if (mask >> e & 1u) best.edges.push_back(e);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (touched[v]) best.vertices.push_back(v);
  }
  return best;
}

// Same oracle for every terminal set at once: entry S (a vertex mask) is
// the minimum length of a connected edge subset whose vertices cover S.
inline std::vector<Distance> brute_force_steiner_distances(const WeightedMultigraph& g) {
  if (g.edge_count() > kBruteForceEdgeCap)
    throw CapExceeded("brute-force Steiner limited to " + std::to_string(kBruteForceEdgeCap) + " edges");
  if (g.vertex_count() > 16) throw CapExceeded("brute-force Steiner table limited to 16 vertices");
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  std::vector<Distance> best(std::size_t{1} << n, Distance::infinity());
  best[0] = Rational(0);
  for (VertexId v = 0; v < n; ++v) best[std::size_t{1} << v] = Rational(0);
  std::vector<VertexId> parent(n);
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
    std::iota(parent.begin(), parent.end(), VertexId{0});
    std::size_t touched = 0;
    Rational length;
    for (EdgeId e = 0; e < m; ++e) {
      if (!(mask >> e & 1u)) continue;
      const Edge& edge = g.edge(e);
      touched |= std::size_t{1} << edge.u | std::size_t{1} << edge.v;
      parent[find(edge.u)] = find(edge.v);
      length += edge.length;
    }
    VertexId root = kNoVertex;
    bool connected = true;
    for (VertexId v = 0; v < n && connected; ++v) {
      if (!(touched >> v & 1u)) continue;
      if (root == kNoVertex) root = find(v);
      connected = find(v) == root;
    }
    if (connected && Distance(length) < best[touched]) best[touched] = length;
  }
  // Push each value down to every subset of its vertex set.
  for (std::size_t bit = 0; bit < n; ++bit)
    for (std::size_t s = 0; s < best.size(); ++s)
      if (s >> bit & 1u) best[s ^ (std::size_t{1} << bit)] = min_distance(best[s ^ (std::size_t{1} << bit)], best[s]);
  return best;
}

}  // namespace sgeo
