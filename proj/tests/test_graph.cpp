#include <gtest/gtest.h>

#include "sgeo/graph.hpp"
#include "sgeo/graph_json.hpp"
#include "sgeo/isomorphism.hpp"
#include "sgeo/planarity.hpp"

using namespace sgeo;

namespace {

// Fig. 1 tree: ua, ub, uv, vc, vd with unit lengths.
WeightedMultigraph fig1_tree() {
  WeightedMultigraph t;
  for (const char* n : {"a", "b", "c", "d", "u", "v"}) t.add_vertex(n);
  t.add_edge(4, 0, 1);
  t.add_edge(4, 1, 1);
  t.add_edge(4, 5, 1);
  t.add_edge(5, 2, 1);
  t.add_edge(5, 3, 1);
  return t;
}

WeightedMultigraph complete(std::size_t n) {
  WeightedMultigraph g(n);
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) g.add_edge(i, j, 1);
  return g;
}

}  // namespace

TEST(Graph, RejectsLoopsAndNonPositiveLengths) {
  WeightedMultigraph g(2);
  EXPECT_THROW(g.add_edge(0, 0, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 1, 0), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 1, Rational(-1, 2)), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 2, 1), std::out_of_range);
  EXPECT_THROW(g.add_vertex("0"), std::invalid_argument);
}

TEST(Graph, SubgraphLength) {
  WeightedMultigraph g(3);
  g.add_edge(0, 1, 2);
  g.add_edge(1, 2, 2);
  g.add_edge(2, 0, 2);
  EXPECT_EQ(subgraph_length(Subgraph::whole(g)), Rational(6));
  EXPECT_EQ(subgraph_length(Subgraph(g, std::vector<EdgeId>{})), Rational(0));

  WeightedMultigraph p(2);
  p.add_edge(0, 1, Rational(1, 2));
  p.add_edge(0, 1, Rational(3, 2));
  EXPECT_EQ(subgraph_length(Subgraph::whole(p)), Rational(2));
}

TEST(Graph, StructuralPredicates) {
  WeightedMultigraph e(2);
  e.add_edge(0, 1, 1);
  auto r = structural_predicates(e);
  EXPECT_TRUE(r.is_tree);
  EXPECT_EQ(r.leaves, (std::vector<VertexId>{0, 1}));

  e.add_edge(0, 1, 1);
  r = structural_predicates(e);
  EXPECT_TRUE(r.is_cycle);
  EXPECT_FALSE(r.is_tree);

  WeightedMultigraph path(3);
  path.add_edge(0, 1, 1);
  path.add_edge(1, 2, 1);
  EXPECT_EQ(structural_predicates(path).leaves, (std::vector<VertexId>{0, 2}));
}

TEST(Graph, EdgeBipartition) {
  WeightedMultigraph star;
  for (const char* n : {"c", "a", "b", "d"}) star.add_vertex(n);
  const EdgeId ca = star.add_edge(0, 1, 1);
  star.add_edge(0, 2, 1);
  star.add_edge(0, 3, 1);
  const std::vector<VertexId> x{1, 2, 3};
  auto split = edge_bipartition(Subgraph::whole(star), ca, x);
  // u endpoint of ca is the centre, so the centre's side comes first.
  EXPECT_EQ(split.first, (std::vector<VertexId>{2, 3}));
  EXPECT_EQ(split.second, (std::vector<VertexId>{1}));
  EXPECT_TRUE(split.non_trivial);

  WeightedMultigraph path(3);
  const EdgeId ab = path.add_edge(0, 1, 1);
  path.add_edge(1, 2, 1);
  split = edge_bipartition(Subgraph::whole(path), ab, std::vector<VertexId>{0});
  EXPECT_EQ(split.first, (std::vector<VertexId>{0}));
  EXPECT_TRUE(split.second.empty());
  EXPECT_FALSE(split.non_trivial);

  const WeightedMultigraph t = fig1_tree();
  split = edge_bipartition(Subgraph::whole(t), 2, std::vector<VertexId>{0, 1, 2, 3});
  EXPECT_EQ(split.first, (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(split.second, (std::vector<VertexId>{2, 3}));

  EXPECT_THROW(edge_bipartition(Subgraph(path, std::vector<EdgeId>{ab}), 1, std::vector<VertexId>{}),
               std::invalid_argument);
}

TEST(Graph, SuppressDegreeTwo) {
  WeightedMultigraph path(3);
  path.add_edge(0, 1, 1);
  path.add_edge(1, 2, 2);
  const WeightedMultigraph s = suppress_degree_two(path);
  ASSERT_EQ(s.vertex_count(), 2u);
  ASSERT_EQ(s.edge_count(), 1u);
  EXPECT_EQ(s.edge(0).length, Rational(3));

  const WeightedMultigraph k4 = complete(4);
  EXPECT_TRUE(multigraph_isomorphic(suppress_degree_two(k4), k4, true));

  // Theta with one subdivided arc: 0 and 1 joined by 1, 2, and 3 + 4 via vertex 2.
  WeightedMultigraph theta(3);
  theta.add_edge(0, 1, 1);
  theta.add_edge(0, 1, 2);
  theta.add_edge(0, 2, 3);
  theta.add_edge(2, 1, 4);
  WeightedMultigraph expected(2);
  expected.add_edge(0, 1, 1);
  expected.add_edge(0, 1, 2);
  expected.add_edge(0, 1, 7);
  const WeightedMultigraph st = suppress_degree_two(theta);
  EXPECT_TRUE(multigraph_isomorphic(st, expected, true));
  EXPECT_EQ(st.total_length(), theta.total_length());
  EXPECT_TRUE(multigraph_isomorphic(suppress_degree_two(st), st, true));

  WeightedMultigraph triangle = complete(3);
  EXPECT_THROW(suppress_degree_two(triangle), std::invalid_argument);
}

TEST(Graph, Isomorphism) {
  const WeightedMultigraph k4 = complete(4);
  WeightedMultigraph relabelled(4);
  for (auto [u, v] : {std::pair{3, 1}, {2, 0}, {1, 0}, {3, 2}, {0, 3}, {2, 1}})
    relabelled.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v), 1);
  EXPECT_TRUE(multigraph_isomorphic(k4, relabelled, true));

  // K_{3,3} against K4 plus two pendant vertices joined by three edges: 6 vertices, 9 edges each.
  WeightedMultigraph k33(6);
  for (VertexId i = 0; i < 3; ++i)
    for (VertexId j = 3; j < 6; ++j) k33.add_edge(i, j, 1);
  WeightedMultigraph other = complete(4);
  other.add_vertex("4");
  other.add_vertex("5");
  other.add_edge(4, 5, 1);
  other.add_edge(0, 4, 1);
  other.add_edge(1, 5, 1);
  EXPECT_FALSE(multigraph_isomorphic(k33, other, false));

  WeightedMultigraph single(2), doubled(2);
  single.add_edge(0, 1, 1);
  doubled.add_edge(0, 1, 1);
  doubled.add_edge(0, 1, 1);
  EXPECT_FALSE(multigraph_isomorphic(single, doubled, false));

  WeightedMultigraph longer(4);
  for (const auto& e : k4.edges()) longer.add_edge(e.u, e.v, e.id == 0 ? 2 : 1);
  EXPECT_TRUE(multigraph_isomorphic(k4, longer, false));
  EXPECT_FALSE(multigraph_isomorphic(k4, longer, true));
}

TEST(Graph, Planarity) {
  EXPECT_TRUE(is_planar(complete(4)));
  EXPECT_FALSE(is_planar(complete(5)));
  WeightedMultigraph k33(6);
  for (VertexId i = 0; i < 3; ++i)
    for (VertexId j = 3; j < 6; ++j) k33.add_edge(i, j, 1);
  EXPECT_FALSE(is_planar(k33));
}

TEST(GraphJson, RoundTrip) {
  const WeightedMultigraph t = fig1_tree();
  const WeightedMultigraph back = graph_from_json(graph_to_json(t));
  EXPECT_EQ(graph_to_json(back), graph_to_json(t));
}

TEST(GraphJson, RejectsMalformedInput) {
  using nlohmann::json;
  const json loop = json::parse(R"({"vertices":["a"],"edges":[{"id":0,"u":"a","v":"a","len":"1"}]})");
  EXPECT_THROW(graph_from_json(loop), InputError);
  const json zero = json::parse(R"({"vertices":["a","b"],"edges":[{"id":0,"u":"a","v":"b","len":"0"}]})");
  EXPECT_THROW(graph_from_json(zero), InputError);
  const json negative = json::parse(R"({"vertices":["a","b"],"edges":[{"id":0,"u":"a","v":"b","len":"-1/2"}]})");
  EXPECT_THROW(graph_from_json(negative), InputError);
  const json unknown = json::parse(R"({"vertices":["a","b"],"edges":[{"id":0,"u":"a","v":"z","len":"1"}]})");
  EXPECT_THROW(graph_from_json(unknown), InputError);
  const json gap = json::parse(R"({"vertices":["a","b"],"edges":[{"id":1,"u":"a","v":"b","len":"1"}]})");
  EXPECT_THROW(graph_from_json(gap), InputError);
  const json dup = json::parse(R"({"vertices":["a","a"],"edges":[]})");
  EXPECT_THROW(graph_from_json(dup), InputError);
  EXPECT_THROW(graph_from_json(json::array()), InputError);
}
