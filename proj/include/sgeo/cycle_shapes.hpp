#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "sgeo/graph.hpp"
#include "sgeo/isomorphism.hpp"
#include "sgeo/planarity.hpp"
#include "sgeo/shortcut_search.hpp"
#include "sgeo/shortcut_tree.hpp"
#include "sgeo/walk.hpp"

namespace sgeo {

// Cycle c0 c1 ... c(r-1); edge i joins c_i and c_(i+1). r = 2 gives two
// parallel edges.
inline WeightedMultigraph cycle_graph(std::span<const Rational> lengths) {
  if (lengths.size() < 2) throw std::invalid_argument("a cycle needs at least two edges");
  WeightedMultigraph g;
  for (std::size_t i = 0; i < lengths.size(); ++i) g.add_vertex("c" + std::to_string(i));
  for (std::size_t i = 0; i < lengths.size(); ++i)
    g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % lengths.size()), lengths[i]);
  return g;
}

// The five cubic trees with 2..6 leaves whose union with a cycle through
// their leaves can be planar and 3-regular, closed by the cycle in Eulerian
// order. Shape i (1-based) has leaf count i + 1.
inline const std::vector<WeightedMultigraph>& cycle_shape_catalogue() {
  static const std::vector<WeightedMultigraph> shapes = [] {
    auto build = [](std::size_t leaves, std::vector<std::pair<VertexId, VertexId>> edges) {
      TreeTopology t{leaves, 0, std::move(edges)};
      for (const auto& [a, b] : t.edges) t.vertex_count = std::max<std::size_t>({t.vertex_count, a + 1u, b + 1u});
      const WeightedMultigraph tree = t.to_graph();
      return tree_plus_cycle(tree, eulerian_double_cover_cycle(tree));
    };
    std::vector<WeightedMultigraph> out;
    out.push_back(build(2, {{0, 1}}));                                                  // theta
    out.push_back(build(3, {{0, 3}, {1, 3}, {2, 3}}));                                  // K4
    out.push_back(build(4, {{0, 4}, {1, 4}, {4, 5}, {2, 5}, {3, 5}}));                  // prism
    out.push_back(build(5, {{0, 5}, {1, 5}, {5, 6}, {2, 6}, {6, 7}, {3, 7}, {4, 7}}));  // caterpillar
    out.push_back(build(6, {{0, 7}, {1, 7}, {2, 8}, {3, 8}, {4, 9}, {5, 9},
                            {6, 7}, {6, 8}, {6, 9}}));                                  // three cherries
    return out;
  }();
  return shapes;
}

struct CycleShapeReport {
  std::size_t leaf_count = 0;
  WeightedMultigraph suppressed;      // T + C with degree-2 vertices suppressed
  bool three_regular = false;
  bool planar = false;
  std::optional<std::size_t> shape;   // 1..5 when matched against the catalogue
  std::vector<Rational> arc_lengths;  // C between consecutive leaves, in cycle order
  // With at least three leaves: l(e1) + l(e2) > l(e0) for consecutive arcs
  // e1, e2 and any arc e0, and every arc is shorter than l(C)/2.
  bool arcs_applicable = false;
  bool consecutive_arcs_long = true;
  bool arcs_below_half = true;

  bool consistent() const { return three_regular && planar && shape && consecutive_arcs_long && arcs_below_half; }
};

inline CycleShapeReport classify_cycle_sct(const ShortcutTree& s) {
  const Subgraph host = s.host_view();
  const Materialized hm = host.materialize();
  if (!structural_predicates(hm.graph).is_cycle) throw std::invalid_argument("host is not a cycle");
  if (!verify_sct(s).valid()) throw std::invalid_argument("not a valid shortcut tree");

  CycleShapeReport r;
  const std::vector<VertexId> leaves = s.leaves();
  r.leaf_count = leaves.size();
  {
    std::vector<EdgeId> both(s.tree_edges().begin(), s.tree_edges().end());
    both.insert(both.end(), s.host_edges().begin(), s.host_edges().end());
    r.suppressed = suppress_degree_two(Subgraph(s.joint(), both).materialize().graph);
  }
  r.three_regular = r.suppressed.vertex_count() > 0;
  for (VertexId v = 0; v < r.suppressed.vertex_count(); ++v)
    if (r.suppressed.degree(v) != 3) r.three_regular = false;
  r.planar = is_planar(r.suppressed);
  const auto& catalogue = cycle_shape_catalogue();
  for (std::size_t i = 0; i < catalogue.size(); ++i) {
    if (catalogue[i].vertex_count() != r.suppressed.vertex_count() ||
        catalogue[i].edge_count() != r.suppressed.edge_count())
      continue;
    if (multigraph_isomorphic(catalogue[i], r.suppressed, false)) {
      r.shape = i + 1;
      break;
    }
  }

  // Walk once around the cycle from the first leaf, cutting at leaves.
  std::vector<bool> is_leaf(hm.graph.vertex_count(), false);
  for (VertexId v : leaves) is_leaf[hm.from_host_vertex[v]] = true;
  const VertexId start = hm.from_host_vertex[leaves.front()];
  VertexId cur = start;
  EdgeId prev = static_cast<EdgeId>(hm.graph.edge_count());
  Rational arc;
  do {
    const auto inc = hm.graph.incident(cur);
    const EdgeId e = inc[0] != prev ? inc[0] : inc[1];
    arc += hm.graph.edge(e).length;
    cur = hm.graph.edge(e).other(cur);
    prev = e;
    if (is_leaf[cur]) {
      r.arc_lengths.push_back(arc);
      arc = Rational(0);
    }
  } while (cur != start);

  r.arcs_applicable = r.leaf_count >= 3;
  if (r.arcs_applicable) {
    Rational total;
    for (const Rational& a : r.arc_lengths) total += a;
    const std::size_t n = r.arc_lengths.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Rational pair = r.arc_lengths[i] + r.arc_lengths[(i + 1) % n];
      for (const Rational& e0 : r.arc_lengths)
        if (!(e0 < pair)) r.consecutive_arcs_long = false;
      if (!(r.arc_lengths[i] * Rational(2) < total)) r.arcs_below_half = false;
    }
  }
  return r;
}

struct CycleSurvey {
  std::vector<std::size_t> certificates;  // per leaf count: (host lengths, topology) pairs that admit one
  std::vector<std::size_t> hosts;         // per leaf count: host length vectors examined
  std::vector<WeightedMultigraph> shapes; // distinct suppressed T + C, in discovery order
  std::vector<ShortcutTree> examples;     // one certificate per entry of shapes
  std::vector<CycleShapeReport> reports;  // every certificate's classification
};

namespace detail {

// Smallest rotation/reflection of a cyclic sequence of exponents.
inline bool is_dihedral_minimum(const std::vector<unsigned>& x) {
  const std::size_t n = x.size();
  for (std::size_t r = 0; r < n; ++r) {
    for (bool mirrored : {false, true}) {
      std::vector<unsigned> y(n);
      for (std::size_t i = 0; i < n; ++i) y[i] = mirrored ? x[(r + n - i) % n] : x[(r + i) % n];
      if (y < x) return false;
    }
  }
  return true;
}

}  // namespace detail

// Every cycle C_m (m in [min_leaves, max_leaves]) whose edge lengths lie in
// {1, 2, ..., 2^max_exponent}, one representative per dihedral orbit, with
// every m-leaf topology glued on in the identity placement. Suppression
// reduces any cycle shortcut tree to this form (V(C) = L(T)), and labelled
// topologies cover every cyclic order of the leaves.
inline CycleSurvey survey_cycle_shortcut_trees(std::size_t min_leaves, std::size_t max_leaves, unsigned max_exponent) {
  if (min_leaves < 2) throw std::invalid_argument("shortcut trees have at least two leaves");
  CycleSurvey out;
  out.certificates.assign(max_leaves + 1, 0);
  out.hosts.assign(max_leaves + 1, 0);
  for (std::size_t m = min_leaves; m <= max_leaves; ++m) {
    const std::vector<TreeTopology> topologies = enumerate_topologies(m);
    std::vector<VertexId> identity(m);
    for (std::size_t i = 0; i < m; ++i) identity[i] = static_cast<VertexId>(i);
    std::vector<unsigned> exps(m, 0);
    for (;;) {
      if (detail::is_dihedral_minimum(exps)) {
        ++out.hosts[m];
        std::vector<Rational> lengths;
        for (unsigned x : exps) lengths.emplace_back(Rational::int_type{1} << x);
        const WeightedMultigraph c = cycle_graph(lengths);
        const SteinerTable table(c, identity, m);
        for (const TreeTopology& t : topologies) {
          auto found = lp_feasible_lengths(t, [&](std::uint32_t b) { return table.distance(b); });
          if (!found) continue;
          ++out.certificates[m];
          ShortcutTree tree = install_topology(c, t, identity, found->lengths);
          CycleShapeReport rep = classify_cycle_sct(tree);
          const bool seen = std::any_of(out.shapes.begin(), out.shapes.end(), [&](const WeightedMultigraph& g) {
            return g.vertex_count() == rep.suppressed.vertex_count() &&
                   g.edge_count() == rep.suppressed.edge_count() && multigraph_isomorphic(g, rep.suppressed, false);
          });
          if (!seen) {
            out.shapes.push_back(rep.suppressed);
            out.examples.push_back(tree);
          }
          out.reports.push_back(std::move(rep));
        }
      }
      std::size_t i = 0;
      while (i < m && exps[i] == max_exponent) exps[i++] = 0;
      if (i == m) break;
      ++exps[i];
    }
  }
  return out;
}

}  // namespace sgeo
