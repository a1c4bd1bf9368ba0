#include <gtest/gtest.h>

#include "sgeo/constructions.hpp"
#include "sgeo/geodesic.hpp"
#include "sgeo/random_graphs.hpp"

using namespace sgeo;

namespace {

// Triangle 0,1,2 with lengths 2 (edges 0..2) plus a unit star at 3 (edges 3..5).
WeightedMultigraph c3_with_star() {
  WeightedMultigraph g(4);
  g.add_edge(0, 1, 2);
  g.add_edge(1, 2, 2);
  g.add_edge(2, 0, 2);
  for (VertexId v = 0; v < 3; ++v) g.add_edge(3, v, 1);
  return g;
}

const std::vector<EdgeId> kTriangle{0, 1, 2};

}  // namespace

TEST(Geodesic, HierarchyK3) {
  const HierarchyInstance inst = hierarchy_example(3);
  EXPECT_TRUE(is_k_geodesic(inst.g, inst.h(), 3).holds);
  const GeodesicVerdict v = is_k_geodesic(inst.g, inst.h(), 4);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(*v.witness, (std::vector<VertexId>{1, 2, 3, 4}));
  EXPECT_EQ(v.gap->first, Distance(Rational(8)));
  EXPECT_EQ(v.gap->second, Distance(Rational(9)));
  // The extracted tree is the star at 0.
  ASSERT_TRUE(v.extracted);
  const ShortcutTree& s = *v.extracted;
  EXPECT_EQ(s.leaves(), (std::vector<VertexId>{1, 2, 3, 4}));
  for (EdgeId e : s.tree_edges()) EXPECT_TRUE(s.joint().edge(e).u == 0 || s.joint().edge(e).v == 0);
  EXPECT_TRUE(verify_sct(s).valid());
}

TEST(Geodesic, WholeGraphAlwaysHolds) {
  const HierarchyInstance inst = hierarchy_example(3);
  for (std::size_t k = 2; k <= 5; ++k) EXPECT_TRUE(is_k_geodesic(inst.g, Subgraph::whole(inst.g), k).holds);
}

TEST(Geodesic, TriangleWithStar) {
  const WeightedMultigraph g = c3_with_star();
  const Subgraph h(g, kTriangle);
  EXPECT_TRUE(is_k_geodesic(g, h, 2).holds);
  const GeodesicVerdict v = is_fully_geodesic(g, h);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(*v.witness, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(v.gap->first, Distance(Rational(3)));
  EXPECT_EQ(v.gap->second, Distance(Rational(4)));
  const ShortcutTree s = extract_shortcut_tree(g, h, 3);
  EXPECT_EQ(std::vector<EdgeId>(s.tree_edges().begin(), s.tree_edges().end()), (std::vector<EdgeId>{3, 4, 5}));
  const SctReport r = verify_sct(s);
  EXPECT_TRUE(r.valid());
  EXPECT_EQ(r.margin, Distance(Rational(1)));
}

TEST(Geodesic, BipartiteExtraction) {
  const BipartiteSctInstance inst = bipartite_sct_example(2);
  const WeightedMultigraph& g = inst.sct.joint();
  const Subgraph h = inst.sct.host_view();
  EXPECT_TRUE(is_k_geodesic(g, h, 3).holds);
  const ShortcutTree s = extract_shortcut_tree(g, h, 4);
  EXPECT_EQ(s.leaves().size(), 4u);
  EXPECT_EQ(std::vector<EdgeId>(s.tree_edges().begin(), s.tree_edges().end()),
            std::vector<EdgeId>(inst.sct.tree_edges().begin(), inst.sct.tree_edges().end()));
  EXPECT_TRUE(verify_sct(s).valid());
}

TEST(Geodesic, Errors) {
  const WeightedMultigraph g = c3_with_star();
  const WeightedMultigraph other = c3_with_star();
  EXPECT_THROW(is_k_geodesic(g, Subgraph(other, kTriangle), 2), std::invalid_argument);
  EXPECT_THROW(is_k_geodesic(g, Subgraph(g, kTriangle), 1), std::invalid_argument);
  EXPECT_THROW(is_k_geodesic(g, Subgraph(g, kTriangle), 3, 2), CapExceeded);
  EXPECT_THROW(extract_shortcut_tree(g, Subgraph(g, kTriangle), 2), std::logic_error);
}

TEST(Geodesic, LargeSubgraphPath) {
  // 18-vertex path inside a graph with one shortcut: exercises the per-subset branch.
  WeightedMultigraph g(18);
  std::vector<EdgeId> path;
  for (VertexId v = 0; v + 1 < 18; ++v) path.push_back(g.add_edge(v, v + 1, 1));
  g.add_edge(0, 17, 1);
  const GeodesicVerdict v = is_k_geodesic(g, Subgraph(g, path), 2);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(*v.witness, (std::vector<VertexId>{0, 17}));
  EXPECT_TRUE(verify_sct(*v.extracted).valid());
}

// Monotone in k, and every failure carries a valid shortcut tree with at most k leaves.
TEST(Geodesic, RandomMonotonicityAndExtraction) {
  Rng rng(11);
  for (int round = 0; round < 80; ++round) {
    const std::size_t n = uniform(rng, 3, 7);
    const WeightedMultigraph g = random_connected_graph(rng, n, uniform(rng, 1, 5), 6);
    std::vector<EdgeId> h;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (uniform(rng, 0, 1)) h.push_back(e);
    if (h.empty()) continue;
    const Subgraph sub(g, h);
    bool failed = false;
    for (std::size_t k = 2; k <= sub.vertex_count(); ++k) {
      const GeodesicVerdict v = is_k_geodesic(g, sub, k);
      if (failed) ASSERT_FALSE(v.holds);
      if (!v.holds) {
        failed = true;
        ASSERT_LE(v.witness->size(), k);
        ASSERT_LT(v.gap->first, v.gap->second);
        ASSERT_TRUE(verify_sct(*v.extracted).valid());
        ASSERT_LE(v.extracted->leaves().size(), k);
      }
    }
  }
}
