#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgeo/constructions.hpp"
#include "sgeo/cycle_shapes.hpp"
#include "sgeo/cyclespace.hpp"
#include "sgeo/geodesic.hpp"
#include "sgeo/graph_json.hpp"
#include "sgeo/random_graphs.hpp"
#include "sgeo/shortcut_search.hpp"
#include "sgeo/steiner.hpp"
#include "sgeo/walk.hpp"

namespace sgeo {

struct Check {
  std::string name;
  bool passed = false;
  nlohmann::json detail;
};

// Outcome of one suite. Every geodecity failure met along the way has its
// extracted shortcut tree re-verified; those tallies are kept separately.
struct SuiteReport {
  explicit SuiteReport(std::string name = {}) : suite{std::move(name)} {}

  std::string suite;
  std::vector<Check> checks;
  std::size_t extractions = 0;
  std::size_t extraction_failures = 0;
  nlohmann::json extraction_failure;  // first offending instance, if any

  void add(std::string name, bool passed, nlohmann::json detail = nlohmann::json::object()) {
    checks.push_back(Check{std::move(name), passed, std::move(detail)});
  }
  bool passed() const {
    return extraction_failures == 0 &&
           std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
  nlohmann::json to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["passed"] = passed();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["extractions"] = {{"checked", extractions}, {"failed", extraction_failures}};
    if (!extraction_failure.is_null()) j["extractions"]["first_failure"] = extraction_failure;
    return j;
  }
};

inline nlohmann::json vertex_list_json(const WeightedMultigraph& g, std::span<const VertexId> vs) {
  nlohmann::json out = nlohmann::json::array();
  for (VertexId v : vs) out.push_back(g.name(v));
  return out;
}

// Extraction soundness: a failed verdict must carry a shortcut tree that
// passes every condition and has at most |witness| leaves.
inline void record_extraction(SuiteReport& r, const WeightedMultigraph& g, const GeodesicVerdict& v) {
  if (v.holds) return;
  ++r.extractions;
  bool ok = v.extracted.has_value() && v.witness.has_value();
  if (ok) {
    const SctReport rep = verify_sct(*v.extracted);
    ok = rep.valid() && v.extracted->leaves().size() <= v.witness->size();
  }
  if (!ok) {
    if (r.extraction_failures == 0) {
      r.extraction_failure = {{"graph", graph_to_json(g)}};
      if (v.witness) r.extraction_failure["witness"] = vertex_list_json(g, *v.witness);
    }
    ++r.extraction_failures;
  }
}

// A host graph G with a distinguished edge set H.
struct GeodesicInstance {
  WeightedMultigraph g;
  std::vector<EdgeId> h_edges;

  Subgraph h() const { return Subgraph(g, h_edges); }
};

namespace detail {

// Extra structure around a subgraph whose first `core` vertices carry the
// distances d. Chords and Steiner points are mostly at least as long as the
// distances they bypass (so 2-geodecity often survives) and occasionally
// shorter (so it often fails).
inline void decorate(Rng& rng, WeightedMultigraph& g, std::size_t core, const DistanceMatrix& d) {
  const std::size_t chords = core >= 2 ? uniform(rng, 0, 3) : 0;
  for (std::size_t i = 0; i < chords; ++i) {
    const auto u = static_cast<VertexId>(uniform(rng, 0, core - 1));
    auto v = static_cast<VertexId>(uniform(rng, 0, core - 2));
    if (v >= u) ++v;
    const Rational base = d(u, v).value();
    const std::size_t mode = uniform(rng, 0, 9);
    Rational len = base;
    if (mode < 5) len = base + Rational(static_cast<Rational::int_type>(uniform(rng, 1, 2)));
    if (mode >= 8) len = base / Rational(2);
    g.add_edge(u, v, len);
  }
  for (VertexId p = static_cast<VertexId>(core); p < g.vertex_count(); ++p) {
    std::vector<VertexId> pool(core);
    std::iota(pool.begin(), pool.end(), VertexId{0});
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(uniform(rng, std::min<std::size_t>(2, core), std::min<std::size_t>(core, 5)));
    for (VertexId v : pool) {
      Rational radius;
      for (VertexId w : pool) radius = std::max(radius, d(v, w).value() / Rational(2));
      if (radius == Rational(0)) radius = Rational(1);
      const std::size_t mode = uniform(rng, 0, 9);
      Rational len = radius + Rational(static_cast<Rational::int_type>(uniform(rng, 0, 2)), 2);
      if (mode >= 8) len = radius / Rational(2);
      g.add_edge(p, v, len);
    }
    for (VertexId q = static_cast<VertexId>(core); q < p; ++q)
      if (uniform(rng, 0, 2) == 0) g.add_edge(p, q, random_length(rng, 3));
  }
}

}  // namespace detail

// Random tree T (2..8 vertices) inside a graph on at most `max_vertices`.
inline GeodesicInstance random_tree_instance(Rng& rng, std::size_t max_vertices = 10) {
  const std::size_t t = uniform(rng, 2, std::min<std::size_t>(8, max_vertices));
  const std::size_t s = uniform(rng, 0, std::min<std::size_t>(3, max_vertices - t));
  GeodesicInstance inst;
  inst.g = WeightedMultigraph(t + s);
  for (const auto& [u, v] : random_tree_edges(rng, t)) inst.h_edges.push_back(inst.g.add_edge(u, v, random_length(rng, 4)));
  const DistanceMatrix d = shortest_path_matrix(inst.g);
  detail::decorate(rng, inst.g, t, d);
  return inst;
}

// Random cycle C (3..8 vertices) inside a graph on at most `max_vertices`.
inline GeodesicInstance random_cycle_instance(Rng& rng, std::size_t max_vertices = 10) {
  const std::size_t r = uniform(rng, 3, std::min<std::size_t>(8, max_vertices));
  const std::size_t s = uniform(rng, 0, std::min<std::size_t>(3, max_vertices - r));
  GeodesicInstance inst;
  inst.g = WeightedMultigraph(r + s);
  for (VertexId i = 0; i < r; ++i)
    inst.h_edges.push_back(inst.g.add_edge(i, static_cast<VertexId>((i + 1) % r), random_length(rng, 4)));
  const DistanceMatrix d = shortest_path_matrix(inst.g);
  detail::decorate(rng, inst.g, r, d);
  return inst;
}

// ---------------------------------------------------------------- suites

inline SuiteReport steiner_suite(std::uint64_t seed, std::size_t instances = 500) {
  SuiteReport r{"steiner"};
  Rng rng(seed);
  std::size_t compared = 0, mismatches = 0, bad_trees = 0;
  nlohmann::json first;
  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t n = uniform(rng, 2, 7);
    const std::size_t extra = uniform(rng, 0, std::min<std::size_t>(kBruteForceEdgeCap - (n - 1), 7));
    const WeightedMultigraph g = random_connected_graph(rng, n, extra, 5);
    const std::vector<Distance> oracle = brute_force_steiner_distances(g);
    std::vector<VertexId> all(n);
    std::iota(all.begin(), all.end(), VertexId{0});
    const SteinerTable table(g, all, std::min<std::size_t>(4, n));
    for (SteinerTable::Mask s = 1; s < (SteinerTable::Mask{1} << n); ++s) {
      if (std::popcount(s) > 4) continue;
      ++compared;
      if (table.distance(s) != oracle[s]) {
        if (mismatches++ == 0) first = {{"graph", graph_to_json(g)}, {"mask", s}};
        continue;
      }
      // The reconstructed tree is a tree of that length whose leaves are terminals.
      const SteinerResult t = table.tree(s);
      Rational len;
      for (EdgeId e : t.edges) len += g.edge(e).length;
      bool ok = Distance(len) == t.distance;
      if (!t.edges.empty()) {
        const StructureReport sr = structural_predicates(Subgraph(g, t.edges));
        ok = ok && sr.is_tree;
        for (VertexId leaf : sr.leaves) ok = ok && (s >> leaf & 1u);
      }
      if (!ok) ++bad_trees;
    }
  }
  r.add("dp equals brute force", mismatches == 0 && compared > 0,
        {{"instances", instances}, {"terminal_sets", compared}, {"mismatches", mismatches}, {"first", first}});
  r.add("reconstructed trees are Steiner trees", bad_trees == 0, {{"bad", bad_trees}});
  return r;
}

inline SuiteReport toolbox_suite(std::uint64_t seed, std::size_t max_vertices = 8) {
  SuiteReport r{"toolbox"};
  Rng rng(seed);
  std::size_t trees = 0, cycles = 0, superset_cycles = 0;
  std::size_t bad_parity = 0, bad_crossing = 0, bad_bound = 0, bad_euler = 0, bad_planar = 0;
  std::size_t planar_instances = 0;
  nlohmann::json first;
  auto flag = [&](std::size_t& counter, const char* what, const WeightedMultigraph& t, std::span<const VertexId> c) {
    if (counter++ == 0 && first.is_null()) first = {{"property", what}, {"tree", graph_to_json(t)}, {"cycle", vertex_list_json(t, c)}};
  };

  // One traced cycle: parity, crossing count and the doubling bound.
  auto examine = [&](const WeightedMultigraph& t, const DistanceMatrix& d, std::span<const VertexId> c) {
    const Walk w = trace_walk(t, d, c, c.front());
    const auto mult = walk_multiplicities(w);
    bool parity = mult.size() == t.edge_count();
    for (const auto& [e, count] : mult) parity = parity && count > 0 && count % 2 == 0;
    if (!parity) flag(bad_parity, "multiplicities positive and even", t, c);
    const Subgraph whole = Subgraph::whole(t);
    bool crossing = true;
    for (const auto& e : t.edges()) {
      const EdgeBipartition split = edge_bipartition(whole, e.id, c);
      std::vector<bool> side(t.vertex_count(), false);
      for (VertexId v : split.first) side[v] = true;
      std::size_t crossings = 0;
      for (std::size_t i = 0; i < c.size(); ++i) crossings += side[c[i]] != side[c[(i + 1) % c.size()]];
      const auto it = mult.find(e.id);
      if ((it == mult.end() ? 0 : it->second) != crossings) crossing = false;
    }
    if (!crossing) flag(bad_crossing, "multiplicity equals crossing count", t, c);
    if (cycle_distance_sum(d, c) < t.total_length() * Rational(2) || w.length(t) != cycle_distance_sum(d, c))
      flag(bad_bound, "2 l(T) <= sum of distances", t, c);
  };

  for (std::size_t n = 2; n <= max_vertices; ++n) {
    for (const auto& edges : all_unlabelled_trees(n)) {
      ++trees;
      WeightedMultigraph t(n);
      for (const auto& [u, v] : edges) t.add_edge(u, v, random_length(rng, 5));
      const DistanceMatrix d = shortest_path_matrix(t);
      const std::vector<VertexId> leaves = structural_predicates(t).leaves;

      const std::vector<VertexId> euler = eulerian_double_cover_cycle(t);
      if (cycle_distance_sum(d, euler) != t.total_length() * Rational(2)) flag(bad_euler, "eulerian order attains 2 l(T)", t, euler);

      // Cyclic orders of a vertex set: first vertex fixed, reflections skipped.
      auto each_cycle = [&](std::vector<VertexId> vs, const std::function<void(std::span<const VertexId>)>& fn) {
        std::sort(vs.begin() + 1, vs.end());
        do {
          if (vs.size() >= 3 && vs[1] > vs.back()) continue;
          fn(vs);
        } while (std::next_permutation(vs.begin() + 1, vs.end()));
      };
      each_cycle(leaves, [&](std::span<const VertexId> c) {
        ++cycles;
        examine(t, d, c);
        ++planar_instances;
        if (!planar_equivalence_report(t, c).consistent()) flag(bad_planar, "planar equivalence", t, c);
      });
      // Cycles through extra internal vertices, L(T) ⊆ V(C) ⊆ V(T), on small trees.
      if (n <= 6) {
        std::vector<VertexId> internal;
        for (VertexId v = 0; v < n; ++v)
          if (!std::binary_search(leaves.begin(), leaves.end(), v)) internal.push_back(v);
        for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << internal.size()); ++pick) {
          std::vector<VertexId> vs = leaves;
          for (std::size_t i = 0; i < internal.size(); ++i)
            if (pick >> i & 1u) vs.push_back(internal[i]);
          std::sort(vs.begin(), vs.end());
          each_cycle(vs, [&](std::span<const VertexId> c) {
            ++superset_cycles;
            examine(t, d, c);
          });
        }
      }
    }
  }
  const nlohmann::json counts = {{"trees", trees}, {"leaf_cycles", cycles}, {"superset_cycles", superset_cycles}};
  r.add("multiplicities positive and even", bad_parity == 0, {{"violations", bad_parity}, {"counts", counts}});
  r.add("multiplicity equals crossing count", bad_crossing == 0, {{"violations", bad_crossing}});
  r.add("2 l(T) <= sum of consecutive distances", bad_bound == 0, {{"violations", bad_bound}});
  r.add("eulerian order attains 2 l(T)", bad_euler == 0, {{"violations", bad_euler}});
  r.add("planar, arcs connected and doubly traversed agree", bad_planar == 0,
        {{"violations", bad_planar}, {"instances", planar_instances}});
  if (!first.is_null()) r.add("first violation", false, first);
  return r;
}

inline SuiteReport trees_suite(std::uint64_t seed, std::size_t instances = 300, std::size_t host_samples = 3,
                               std::size_t max_host_vertices = 7) {
  SuiteReport r{"trees"};
  Rng rng(seed);
  std::size_t two_geodesic = 0, counterexamples = 0, failing = 0;
  nlohmann::json first;
  for (std::size_t i = 0; i < instances; ++i) {
    const GeodesicInstance inst = random_tree_instance(rng);
    const Subgraph h = inst.h();
    const GeodesicVerdict two = is_k_geodesic(inst.g, h, 2);
    const GeodesicVerdict full = is_fully_geodesic(inst.g, h);
    record_extraction(r, inst.g, two);
    record_extraction(r, inst.g, full);
    if (!full.holds) ++failing;
    if (!two.holds) continue;
    ++two_geodesic;
    if (!full.holds && counterexamples++ == 0)
      first = {{"graph", graph_to_json(inst.g)}, {"witness", vertex_list_json(inst.g, *full.witness)}};
  }
  r.add("2-geodesic trees are fully geodesic", counterexamples == 0,
        {{"instances", instances}, {"two_geodesic", two_geodesic}, {"not_fully_geodesic", failing},
         {"counterexamples", counterexamples}, {"first", first}});

  // No tree host admits a shortcut tree with three or more leaves.
  std::size_t hosts = 0, hits = 0;
  nlohmann::json hit;
  for (std::size_t n = 3; n <= max_host_vertices; ++n) {
    for (const auto& edges : all_unlabelled_trees(n)) {
      WeightedMultigraph t(n);
      for (const auto& [u, v] : edges) t.add_edge(u, v, Rational(1));
      SearchOptions opt;
      opt.min_leaves = 3;
      opt.max_leaves = 6;
      opt.samples = host_samples;
      opt.free_lengths = true;
      opt.seed = seed + hosts;
      opt.hit_cap = 1;
      ++hosts;
      const auto found = search_shortcut_trees(t, opt);
      if (!found.empty() && hits++ == 0) hit = {{"graph", graph_to_json(found.front().tree.joint())}};
    }
  }
  r.add("no shortcut tree with 3..6 leaves for tree hosts", hits == 0,
        {{"tree_hosts", hosts}, {"samples_per_host", host_samples}, {"hosts_with_hits", hits}, {"first", hit}});
  return r;
}

struct CyclesOptions {
  std::size_t samples = 100;   // host-length samples per leaf cap
  std::size_t max_leaves = 7;
  unsigned max_exponent = 3;   // host lengths in {1, 2, ..., 2^max_exponent}
  std::size_t instances = 300; // random cycle instances for the 6-geodesic harness
};

inline SuiteReport cycles_suite(std::uint64_t seed, const CyclesOptions& opt = {}) {
  SuiteReport r{"cycles"};
  const auto& catalogue = cycle_shape_catalogue();

  // Exhaustive pass over the length grid, leaf counts 2..6.
  const CycleSurvey survey = survey_cycle_shortcut_trees(2, 6, opt.max_exponent);
  std::vector<std::size_t> matched;
  bool all_consistent = true;
  for (const auto& rep : survey.reports) all_consistent = all_consistent && rep.consistent();
  for (const auto& shape : survey.shapes) {
    for (std::size_t i = 0; i < catalogue.size(); ++i)
      if (catalogue[i].vertex_count() == shape.vertex_count() && multigraph_isomorphic(catalogue[i], shape, false))
        matched.push_back(i + 1);
  }
  std::sort(matched.begin(), matched.end());
  const bool five = survey.shapes.size() == 5 && matched == std::vector<std::size_t>{1, 2, 3, 4, 5};
  nlohmann::json per_count = nlohmann::json::object();
  for (std::size_t m = 2; m < survey.certificates.size(); ++m)
    per_count[std::to_string(m)] = {{"hosts", survey.hosts[m]}, {"certificates", survey.certificates[m]}};
  r.add("grid survey yields exactly the five catalogued shapes", five,
        {{"distinct_shapes", survey.shapes.size()}, {"matched", matched}, {"per_leaf_count", per_count}});
  r.add("every grid certificate is planar, 3-regular, catalogued, with long arcs", all_consistent,
        {{"certificates", survey.reports.size()}});

  // One-sided optimality of 6: a 6-leaf certificate, and C is 5- but not 6-geodesic in T + C.
  const ShortcutTree* six = nullptr;
  for (const auto& ex : survey.examples)
    if (ex.leaves().size() == 6) six = &ex;
  bool optimal = false;
  nlohmann::json six_json;
  if (six) {
    const Subgraph c = six->host_view();
    const GeodesicVerdict at5 = is_k_geodesic(six->joint(), c, 5);
    const GeodesicVerdict at6 = is_k_geodesic(six->joint(), c, 6);
    record_extraction(r, six->joint(), at6);
    optimal = at5.holds && !at6.holds;
    six_json = {{"graph", graph_to_json(six->joint())}, {"five_geodesic", at5.holds}, {"six_geodesic", at6.holds}};
  }
  r.add("a 6-leaf certificate exists (C is 5-geodesic, not 6-geodesic)", optimal, six_json);

  // Sampled LP search, leaf caps 2..max_leaves on the cycle C_cap.
  std::size_t max_found = 0, seven = 0, bad = 0, total = 0;
  nlohmann::json caps = nlohmann::json::object();
  for (std::size_t cap = 2; cap <= opt.max_leaves; ++cap) {
    SearchOptions so;
    so.min_leaves = 2;
    so.max_leaves = cap;
    so.samples = opt.samples;
    so.free_lengths = true;
    so.seed = seed + cap;
    so.max_exponent = opt.max_exponent;
    so.hit_cap = std::numeric_limits<std::size_t>::max();
    const std::vector<Rational> ones(cap, Rational(1));
    const auto hits = search_shortcut_trees(cycle_graph(ones), so);
    std::vector<std::size_t> by_leaves(cap + 1, 0);
    for (const auto& hit : hits) {
      ++total;
      ++by_leaves[hit.leaf_count];
      max_found = std::max(max_found, hit.leaf_count);
      if (hit.leaf_count >= 7) ++seven;
      if (!classify_cycle_sct(hit.tree).consistent()) ++bad;
    }
    caps[std::to_string(cap)] = {{"samples", opt.samples}, {"certificates_by_leaf_count", by_leaves}};
  }
  r.add("sampled certificates have at most 6 leaves", max_found <= 6, {{"largest", max_found}, {"per_cap", caps}});
  r.add("sampled certificates are planar, 3-regular, catalogued, with long arcs", bad == 0,
        {{"certificates", total}, {"inconsistent", bad}});
  r.add("no 7-leaf certificate found (one-sided)", seven == 0, {{"seven_leaf", seven}});

  // Random hosts: 6-geodesic cycles are fully geodesic.
  Rng rng(seed);
  std::size_t six_geodesic = 0, long_six = 0, counterexamples = 0;
  nlohmann::json first;
  for (std::size_t i = 0; i < opt.instances; ++i) {
    const GeodesicInstance inst = random_cycle_instance(rng);
    const Subgraph h = inst.h();
    const GeodesicVerdict at6 = is_k_geodesic(inst.g, h, 6);
    const GeodesicVerdict full = is_fully_geodesic(inst.g, h);
    record_extraction(r, inst.g, at6);
    record_extraction(r, inst.g, full);
    if (!at6.holds) continue;
    ++six_geodesic;
    if (h.vertex_count() > 6) ++long_six;
    if (!full.holds && counterexamples++ == 0)
      first = {{"graph", graph_to_json(inst.g)}, {"witness", vertex_list_json(inst.g, *full.witness)}};
  }
  r.add("6-geodesic cycles are fully geodesic", counterexamples == 0,
        {{"instances", opt.instances}, {"six_geodesic", six_geodesic}, {"six_geodesic_longer_than_6", long_six},
         {"counterexamples", counterexamples}, {"first", first}});
  return r;
}

inline SuiteReport hierarchy_suite(std::size_t k_lo = 2, std::size_t k_hi = 5) {
  SuiteReport r{"hierarchy"};
  for (std::size_t k = k_lo; k <= k_hi; ++k) {
    const HierarchyInstance inst = hierarchy_example(k);
    const Subgraph h = inst.h();
    const GeodesicVerdict at_k = is_k_geodesic(inst.g, h, k);
    const GeodesicVerdict above = is_k_geodesic(inst.g, h, k + 1);
    record_extraction(r, inst.g, above);
    const auto kk = static_cast<Rational::int_type>(k);
    const Distance want_g = Rational((kk + 1) * (kk - 1));
    const Distance want_h = Rational(kk * kk);
    const bool gap = !above.holds && above.gap->first == want_g && above.gap->second == want_h &&
                     *above.witness == inst.h_vertices();
    bool star = false;
    if (above.extracted) {
      const auto leaves = above.extracted->leaves();
      const auto tv = above.extracted->tree_view();
      star = leaves == inst.h_vertices() && tv.vertex_count() == k + 2 && tv.contains_vertex(0);
    }
    nlohmann::json detail = {{"k", k}, {"k_geodesic", at_k.holds}, {"k_plus_1_geodesic", above.holds}};
    if (above.gap) detail["gap"] = {above.gap->first.str(), above.gap->second.str()};
    r.add("k=" + std::to_string(k) + ": k-geodesic, not (k+1)-geodesic, gap ((k+1)(k-1), k^2)",
          at_k.holds && gap, detail);
    r.add("k=" + std::to_string(k) + ": extracted tree is the star at 0", star);
  }
  return r;
}

inline SuiteReport k22k_suite(std::size_t k_lo = 1, std::size_t k_hi = 4, std::size_t closed_form_max = 3) {
  SuiteReport r{"k22k"};
  for (std::size_t k = k_lo; k <= k_hi; ++k) {
    const BipartiteSctInstance inst = bipartite_sct_example(k);
    const SctReport rep = verify_sct(inst.sct);
    r.add("k=" + std::to_string(k) + ": shortcut tree with 2k leaves",
          rep.valid() && inst.sct.leaves().size() == 2 * k,
          {{"k", k}, {"tree_length", rep.tree_length.str()}, {"sd_H(L)", rep.host_steiner_distance.str()},
           {"margin", rep.margin.str()}});

    // The joint graph realises the gap: H is (2k-1)-geodesic but not 2k-geodesic.
    const Subgraph h = inst.sct.host_view();
    const GeodesicVerdict below = is_k_geodesic(inst.sct.joint(), h, std::max<std::size_t>(2 * k - 1, 2));
    const GeodesicVerdict at = is_k_geodesic(inst.sct.joint(), h, 2 * k);
    record_extraction(r, inst.sct.joint(), at);
    std::vector<VertexId> ab = inst.a;
    ab.insert(ab.end(), inst.b.begin(), inst.b.end());
    std::sort(ab.begin(), ab.end());
    const bool double_star = at.extracted && at.extracted->leaves() == ab;
    r.add("k=" + std::to_string(k) + ": H is (2k-1)-geodesic, not 2k-geodesic, in T + H",
          (k == 1 || below.holds) && !at.holds && double_star);

    if (k > closed_form_max) continue;
    const Materialized hm = h.materialize();
    const Materialized tm = inst.sct.tree_view().materialize();
    std::size_t compared = 0, mismatches = 0, strict = 0, strict_full_only = 0;
    for (std::uint32_t pa = 0; pa < (1u << k); ++pa) {
      for (std::uint32_t pb = 0; pb < (1u << k); ++pb) {
        const auto na = static_cast<std::size_t>(std::popcount(pa));
        const auto nb = static_cast<std::size_t>(std::popcount(pb));
        if (na + nb < 2) continue;
        std::vector<VertexId> in_h, in_t;
        for (std::size_t i = 0; i < k; ++i) {
          if (pa >> i & 1u) {
            in_h.push_back(hm.from_host_vertex[inst.a[i]]);
            in_t.push_back(tm.from_host_vertex[inst.a[i]]);
          }
          if (pb >> i & 1u) {
            in_h.push_back(hm.from_host_vertex[inst.b[i]]);
            in_t.push_back(tm.from_host_vertex[inst.b[i]]);
          }
        }
        const BipartiteSd want = bipartite_sd_closed_forms(na, nb, k);
        const Distance got_h = steiner_tree(hm.graph, in_h, 2 * k).distance;
        const Distance got_t = steiner_tree(tm.graph, in_t, 2 * k).distance;
        ++compared;
        if (got_h != Distance(want.host) || got_t != Distance(want.tree)) ++mismatches;
        if (got_t < got_h) {
          ++strict;
          if (na == k && nb == k) ++strict_full_only;
        }
      }
    }
    r.add("k=" + std::to_string(k) + ": closed forms match the Steiner DP", mismatches == 0,
          {{"subsets", compared}, {"mismatches", mismatches}});
    r.add("k=" + std::to_string(k) + ": sd_T < sd_H exactly at the full leaf set", strict == 1 && strict_full_only == 1,
          {{"strict", strict}});
  }
  return r;
}

inline SuiteReport cyclespace_suite(std::uint64_t seed, std::size_t instances = 200) {
  SuiteReport r{"cyclespace"};
  Rng rng(seed);
  std::size_t not_spanning = 0, d_outside = 0, d_not_spanning = 0, two_not_spanning = 0, bad_sums = 0;
  std::size_t total_cycles = 0;
  nlohmann::json first;
  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t n = uniform(rng, 2, 8);
    const std::size_t extra = uniform(rng, 1, std::min<std::size_t>(12 - (n - 1), 6));
    const WeightedMultigraph g = random_connected_graph(rng, n, extra, 4);
    const std::vector<Cycle> cycles = enumerate_cycles(g);
    total_cycles += cycles.size();
    const std::vector<std::size_t> full = geodesic_cycle_indices(g, cycles);
    const std::vector<std::size_t> two = geodesic_cycle_indices(g, cycles, 2);
    const std::vector<std::size_t> d = non_2sum_cycle_indices(g, cycles);
    auto vectors = [&](const std::vector<std::size_t>& idx) {
      std::vector<EdgeVector> out;
      for (std::size_t j : idx) out.push_back(cycles[j].support);
      return out;
    };
    const bool spans = gf2_rank_and_span(vectors(full), g).spans_cycle_space;
    if (!spans && not_spanning++ == 0) first = {{"graph", graph_to_json(g)}};
    if (!std::includes(full.begin(), full.end(), d.begin(), d.end())) ++d_outside;
    if (!gf2_rank_and_span(vectors(d), g).spans_cycle_space) ++d_not_spanning;
    if (!gf2_rank_and_span(vectors(two), g).spans_cycle_space) ++two_not_spanning;

    // Non-fully-geodesic cycles: extraction soundness.
    std::size_t next = 0;
    for (std::size_t j = 0; j < cycles.size(); ++j) {
      if (next < full.size() && full[next] == j) {
        ++next;
        continue;
      }
      record_extraction(r, g, is_fully_geodesic(g, Subgraph(g, cycles[j].edges)));
    }
    // Sums of two cycles have even degree everywhere.
    for (std::size_t a = 0; a < cycles.size() && a < 12; ++a) {
      for (std::size_t b = a + 1; b < cycles.size() && b < 12; ++b) {
        const EdgeVector sum = cycles[a].support ^ cycles[b].support;
        std::vector<std::size_t> deg(n, 0);
        for (std::size_t e = sum.find_first(); e != EdgeVector::npos; e = sum.find_next(e)) {
          ++deg[g.edge(static_cast<EdgeId>(e)).u];
          ++deg[g.edge(static_cast<EdgeId>(e)).v];
        }
        if (std::any_of(deg.begin(), deg.end(), [](std::size_t x) { return x % 2 != 0; })) ++bad_sums;
      }
    }
  }
  r.add("fully geodesic cycles span the cycle space", not_spanning == 0,
        {{"instances", instances}, {"cycles", total_cycles}, {"failures", not_spanning}, {"first", first}});
  r.add("every cycle that is not a 2-sum of shorter cycles is fully geodesic", d_outside == 0,
        {{"failures", d_outside}});
  r.add("cycles that are not 2-sums of shorter cycles span the cycle space", d_not_spanning == 0,
        {{"failures", d_not_spanning}});
  r.add("2-geodesic cycles span the cycle space", two_not_spanning == 0, {{"failures", two_not_spanning}});
  r.add("sums of two cycles are edge-disjoint unions of cycles", bad_sums == 0, {{"failures", bad_sums}});
  return r;
}

}  // namespace sgeo
