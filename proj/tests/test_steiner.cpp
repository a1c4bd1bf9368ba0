#include <gtest/gtest.h>

#include "sgeo/random_graphs.hpp"
#include "sgeo/steiner.hpp"

using namespace sgeo;

namespace {

// K5 on 0..4 with l(0j) = 2 and l(ij) = 3.
WeightedMultigraph k5_instance() {
  WeightedMultigraph g(5);
  for (VertexId j = 1; j <= 4; ++j) g.add_edge(0, j, 2);
  for (VertexId i = 1; i <= 4; ++i)
    for (VertexId j = i + 1; j <= 4; ++j) g.add_edge(i, j, 3);
  return g;
}

WeightedMultigraph triangle(Rational a, Rational b, Rational c) {
  WeightedMultigraph g(3);
  g.add_edge(0, 1, a);
  g.add_edge(1, 2, b);
  g.add_edge(2, 0, c);
  return g;
}

}  // namespace

TEST(ShortestPaths, Examples) {
  WeightedMultigraph e(2);
  e.add_edge(0, 1, 5);
  EXPECT_EQ(shortest_path_matrix(e)(0, 1), Distance(Rational(5)));

  const auto d = shortest_path_matrix(triangle(1, 1, 3));
  EXPECT_EQ(d(2, 0), Distance(Rational(2)));

  WeightedMultigraph apart(2);
  EXPECT_FALSE(shortest_path_matrix(apart)(0, 1).is_finite());
}

TEST(Steiner, Examples) {
  WeightedMultigraph path(3);
  path.add_edge(0, 1, 1);
  path.add_edge(1, 2, 1);
  EXPECT_EQ(steiner_tree(path, std::vector<VertexId>{0, 2}).distance, Distance(Rational(2)));

  const WeightedMultigraph g = k5_instance();
  const SteinerResult four = steiner_tree(g, std::vector<VertexId>{1, 2, 3, 4});
  EXPECT_EQ(four.distance, Distance(Rational(8)));
  EXPECT_EQ(four.edges, (std::vector<EdgeId>{0, 1, 2, 3}));  // the star at 0
  EXPECT_EQ(steiner_tree(g, std::vector<VertexId>{1, 2, 3}).distance, Distance(Rational(6)));
}

TEST(Steiner, Errors) {
  const WeightedMultigraph g = k5_instance();
  EXPECT_THROW(steiner_tree(g, std::vector<VertexId>{1, 9}), std::invalid_argument);
  EXPECT_THROW(steiner_tree(g, std::vector<VertexId>{0, 1, 2, 3, 4}, 3), CapExceeded);
  WeightedMultigraph apart(2);
  EXPECT_FALSE(steiner_tree(apart, std::vector<VertexId>{0, 1}).distance.is_finite());
}

TEST(Steiner, InTree) {
  WeightedMultigraph t;
  for (const char* n : {"a", "b", "c", "d", "u", "v"}) t.add_vertex(n);
  t.add_edge(4, 0, 1);
  t.add_edge(4, 1, 1);
  t.add_edge(4, 5, 1);
  t.add_edge(5, 2, 1);
  t.add_edge(5, 3, 1);
  const Subgraph whole = Subgraph::whole(t);
  const SteinerResult ab = steiner_tree_in_tree(whole, std::vector<VertexId>{0, 1});
  EXPECT_EQ(ab.distance, Distance(Rational(2)));
  EXPECT_EQ(ab.vertices, (std::vector<VertexId>{0, 1, 4}));
  EXPECT_EQ(steiner_tree_in_tree(whole, std::vector<VertexId>{0}).distance, Distance(Rational(0)));
  EXPECT_EQ(steiner_tree_in_tree(whole, std::vector<VertexId>{0, 1, 2, 3}).distance, Distance(Rational(5)));

  WeightedMultigraph extra = t;
  const VertexId z = extra.add_vertex("z");
  const Subgraph partial(extra, std::vector<EdgeId>{0, 1, 2, 3, 4});
  EXPECT_THROW(steiner_tree_in_tree(partial, std::vector<VertexId>{0, z}), std::invalid_argument);
}

TEST(BruteForce, Examples) {
  WeightedMultigraph k4(4);
  for (VertexId i = 0; i < 4; ++i)
    for (VertexId j = i + 1; j < 4; ++j) k4.add_edge(i, j, 1);
  EXPECT_EQ(brute_force_steiner(k4, std::vector<VertexId>{0, 1, 2, 3}).distance, Distance(Rational(3)));
  EXPECT_EQ(brute_force_steiner(triangle(2, 2, 2), std::vector<VertexId>{0, 1, 2}).distance, Distance(Rational(4)));
}

// Property checks on random graphs: DP = brute force, monotonicity, leaves in A,
// and |A| = 2 is the ordinary distance.
TEST(Steiner, RandomProperties) {
  Rng rng(7);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = uniform(rng, 2, 6);
    const WeightedMultigraph g = random_connected_graph(rng, n, uniform(rng, 0, 4), 5);
    const auto d = shortest_path_matrix(g);
    const auto all = brute_force_steiner_distances(g);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<VertexId> a;
      for (VertexId v = 0; v < n; ++v)
        if (mask >> v & 1u) a.push_back(v);
      if (a.size() > 4) continue;
      const SteinerResult r = steiner_tree(g, a);
      ASSERT_EQ(r.distance, brute_force_steiner(g, a).distance);
      ASSERT_EQ(r.distance, all[mask]);
      if (a.size() == 2) ASSERT_EQ(r.distance, d(a[0], a[1]));
      for (VertexId v = 0; v < n; ++v)
        if (!(mask >> v & 1u)) ASSERT_LE(r.distance, steiner_tree(g, [&] {
                                            auto b = a;
                                            b.push_back(v);
                                            return b;
                                          }()).distance);
      // Leaves of the returned tree are terminals.
      std::vector<int> degree(n, 0);
      Rational length;
      for (EdgeId e : r.edges) {
        ++degree[g.edge(e).u];
        ++degree[g.edge(e).v];
        length += g.edge(e).length;
      }
      ASSERT_EQ(Distance(length), r.distance);
      for (VertexId v = 0; v < n; ++v)
        if (degree[v] == 1) ASSERT_TRUE(mask >> v & 1u);
      // Subgraph monotonicity: dropping the last edge never shortens.
      if (g.edge_count() > 1) {
        std::vector<EdgeId> keep(g.edge_count() - 1);
        for (EdgeId e = 0; e + 1 < g.edge_count(); ++e) keep[e] = e;
        const Materialized h = Subgraph(g, keep, a).materialize();
        std::vector<VertexId> local;
        for (VertexId v : a) local.push_back(h.from_host_vertex[v]);
        ASSERT_GE(steiner_tree(h.graph, local).distance, r.distance);
      }
    }
  }
}
