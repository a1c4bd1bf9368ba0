#include <gtest/gtest.h>

#include "sgeo/constructions.hpp"
#include "sgeo/geodesic.hpp"
#include "sgeo/steiner.hpp"

using namespace sgeo;

TEST(Hierarchy, KGeodesicButNotNext) {
  for (std::size_t k = 2; k <= 5; ++k) {
    const HierarchyInstance inst = hierarchy_example(k);
    EXPECT_TRUE(is_k_geodesic(inst.g, inst.h(), k).holds) << k;
    const GeodesicVerdict v = is_k_geodesic(inst.g, inst.h(), k + 1);
    ASSERT_FALSE(v.holds) << k;
    EXPECT_EQ(*v.witness, inst.h_vertices());
    const auto kk = static_cast<Rational::int_type>(k);
    EXPECT_EQ(v.gap->first, Distance(Rational((kk + 1) * (kk - 1))));
    EXPECT_EQ(v.gap->second, Distance(Rational(kk * kk)));
  }
}

TEST(Hierarchy, SmallCases) {
  const HierarchyInstance two = hierarchy_example(2);
  const GeodesicVerdict v = is_k_geodesic(two.g, two.h(), 3);
  EXPECT_EQ(v.gap->first, Distance(Rational(3)));
  EXPECT_EQ(v.gap->second, Distance(Rational(4)));
  EXPECT_THROW(hierarchy_example(1), std::invalid_argument);
}

TEST(Bipartite, ValidWithTwoKLeaves) {
  for (std::size_t k = 1; k <= 4; ++k) {
    const BipartiteSctInstance inst = bipartite_sct_example(k);
    const SctReport r = verify_sct(inst.sct);
    EXPECT_TRUE(r.valid()) << k;
    EXPECT_EQ(inst.sct.leaves().size(), 2 * k);
    EXPECT_TRUE(r.margin.is_finite() && r.margin.value().is_positive());
  }
  EXPECT_THROW(bipartite_sct_example(0), std::invalid_argument);
}

TEST(Bipartite, K1IsK22WithTwoLeafTree) {
  const BipartiteSctInstance inst = bipartite_sct_example(1);
  const Materialized h = inst.sct.host_view().materialize();
  EXPECT_EQ(h.graph.vertex_count(), 4u);
  EXPECT_EQ(h.graph.edge_count(), 4u);
  EXPECT_TRUE(structural_predicates(h.graph).is_cycle);
  EXPECT_EQ(inst.lengths.low, Rational(1, 4));
}

TEST(Bipartite, ClosedFormExamples) {
  auto sd = bipartite_sd_closed_forms(2, 2, 2);
  EXPECT_EQ(sd.host, Rational(6));
  EXPECT_EQ(sd.tree, Rational(5));
  sd = bipartite_sd_closed_forms(2, 0, 2);
  EXPECT_EQ(sd.host, Rational(2));
  EXPECT_EQ(sd.tree, Rational(2));
  sd = bipartite_sd_closed_forms(1, 1, 3);
  EXPECT_EQ(sd.host, Rational(5));
  EXPECT_EQ(sd.tree, Rational(6));
  EXPECT_THROW(bipartite_sd_closed_forms(3, 0, 2), std::invalid_argument);
  EXPECT_THROW(bipartite_sd_closed_forms(1, 0, 2), std::invalid_argument);
}

TEST(Bipartite, ClosedFormsMatchSteinerDp) {
  for (std::size_t k = 1; k <= 3; ++k) {
    const BipartiteSctInstance inst = bipartite_sct_example(k);
    const Materialized h = inst.sct.host_view().materialize();
    const Materialized t = inst.sct.tree_view().materialize();
    for (std::uint32_t am = 0; am < (1u << k); ++am) {
      for (std::uint32_t bm = 0; bm < (1u << k); ++bm) {
        std::vector<VertexId> terms;
        for (std::size_t i = 0; i < k; ++i) {
          if (am >> i & 1u) terms.push_back(inst.a[i]);
          if (bm >> i & 1u) terms.push_back(inst.b[i]);
        }
        if (terms.size() < 2) continue;
        std::vector<VertexId> in_h, in_t;
        for (VertexId v : terms) {
          in_h.push_back(h.from_host_vertex[v]);
          in_t.push_back(t.from_host_vertex[v]);
        }
        const auto sd = bipartite_sd_closed_forms(std::popcount(am), std::popcount(bm), k);
        EXPECT_EQ(steiner_tree(h.graph, in_h).distance, Distance(sd.host));
        EXPECT_EQ(steiner_tree(t.graph, in_t).distance, Distance(sd.tree));
        // The tree is strictly shorter exactly at the full leaf set.
        const bool full = terms.size() == 2 * k;
        EXPECT_EQ(sd.tree < sd.host, full) << k << " " << am << " " << bm;
      }
    }
  }
}

TEST(Bipartite, GeodecityGapAtTwoK) {
  for (std::size_t k = 2; k <= 3; ++k) {
    const BipartiteSctInstance inst = bipartite_sct_example(k);
    const Subgraph h = inst.sct.host_view();
    EXPECT_TRUE(is_k_geodesic(inst.sct.joint(), h, 2 * k - 1).holds);
    EXPECT_FALSE(is_k_geodesic(inst.sct.joint(), h, 2 * k).holds);
  }
}
