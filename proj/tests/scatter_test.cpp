#include "gcn/scatter.hpp"

#include <gtest/gtest.h>

#include "gcn/generators.hpp"

namespace gcn {
namespace {

VertexSet all_vertices(const Graph& g) {
  VertexSet a(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) a[v] = v;
  return a;
}

int feasible_m(const Graph& g, const LinearOrder& L, int r, int a_size) {
  int c = 0;
  for (const auto& set : all_wreach(g, L, r))
    c = std::max(c, static_cast<int>(set.size()));
  int m = -1;
  while (static_cast<long long>(c + 1) << (m + 1) <= a_size) ++m;
  return m;
}

TEST(IntersectionGraph, RadiusZeroIsEdgeless) {
  Graph g = complete_graph(5);
  Graph h = wreach_intersection_graph(g, LinearOrder::identity(5), 0);
  EXPECT_EQ(h.edge_count(), 0);
}

TEST(IntersectionGraph, StarCentreFirstStaysStar) {
  // Leaves reach only the centre; the path to another leaf bottoms out at the
  // centre, which is smaller. So H keeps exactly the star edges.
  Graph g = star_graph(6);
  Graph h = wreach_intersection_graph(g, LinearOrder::identity(7), 2);
  EXPECT_EQ(h.edge_count(), 6);
  for (int leaf = 1; leaf <= 6; ++leaf) EXPECT_TRUE(h.has_edge(0, leaf));
}

TEST(IntersectionGraph, CompleteGraphStaysComplete) {
  Graph g = complete_graph(4);
  Graph h = wreach_intersection_graph(g, LinearOrder::identity(4), 1);
  EXPECT_EQ(h.edge_count(), 6);
}

TEST(GreedyIndependent, EdgelessKeepsEverything) {
  Graph h = Graph::from_edges(6, {});
  VertexSet a{0, 2, 3, 5};
  EXPECT_EQ(greedy_independent(h, LinearOrder::identity(6), a, 4), a);
}

TEST(GreedyIndependent, CompleteGraphKeepsOrderMinimum) {
  Graph h = complete_graph(5);
  LinearOrder L = LinearOrder::from_sequence({3, 1, 0, 2, 4});
  EXPECT_EQ(greedy_independent(h, L, all_vertices(h), 1), (VertexSet{3}));
  EXPECT_THROW(greedy_independent(h, L, all_vertices(h), 2), std::runtime_error);
}

TEST(GreedyIndependent, StarKeepsAllLeaves) {
  Graph h = star_graph(5);
  VertexSet kept = greedy_independent(h, LinearOrder::identity(6), all_vertices(h), 5);
  EXPECT_EQ(kept, (VertexSet{1, 2, 3, 4, 5}));
}

TEST(GreedyIndependent, ResultIsIndependent) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    Graph h = gnp(12, 0.3, 1100 + trial);
    VertexSet kept =
        greedy_independent(h, random_order(12, rng), all_vertices(h), 1);
    for (size_t i = 0; i < kept.size(); ++i)
      for (size_t j = i + 1; j < kept.size(); ++j)
        EXPECT_FALSE(h.has_edge(kept[i], kept[j]));
  }
}

TEST(Scatter, EdgelessGraphTakesOrderMaxima) {
  // With no edges every iteration is a trivial case 1: the pivot is the only
  // reachable vertex, so B collects the order-maxima of I_0 and S stays empty.
  Graph g = Graph::from_edges(12, {});
  LinearOrder L = LinearOrder::identity(12);
  ScatterResult res = scatter_extract(g, L, 1, all_vertices(g), 2);
  EXPECT_EQ(res.c, 1);
  EXPECT_EQ(res.initial_independent, (VertexSet{0, 1, 2, 3}));
  EXPECT_TRUE(res.s.empty());
  EXPECT_EQ(res.b, (VertexSet{3, 2}));
  EXPECT_EQ(res.case2_count, 0);
  ScatterAudit audit = audit_scatter(g, L, res);
  EXPECT_TRUE(audit.ok) << audit.violation;
}

TEST(Scatter, StarSixteenLeavesFullTrace) {
  // Radius 2 on K_{1,16}, centre first. The first pivot reaches all of I
  // through the centre (case 2, deleting the centre); afterwards the leaves
  // are mutually unreachable and case 1 trims one pivot per step.
  Graph g = star_graph(16);
  LinearOrder L = LinearOrder::identity(17);
  VertexSet leaves;
  for (int v = 1; v <= 16; ++v) leaves.push_back(v);
  ScatterResult res = scatter_extract(g, L, 2, leaves, 2);

  EXPECT_EQ(res.c, 2);
  EXPECT_EQ(res.initial_independent, (VertexSet{1, 2, 3, 4}));
  ASSERT_EQ(res.iterations.size(), 2u);
  EXPECT_EQ(res.iterations[0].pivot, 4);
  EXPECT_FALSE(res.iterations[0].halved);
  EXPECT_EQ(res.iterations[0].reached, (VertexSet{1, 2, 3, 4}));
  EXPECT_EQ(res.iterations[0].s_added, 1);
  EXPECT_EQ(res.iterations[0].i_size_after, 3);
  EXPECT_EQ(res.iterations[1].pivot, 3);
  EXPECT_TRUE(res.iterations[1].halved);
  EXPECT_EQ(res.iterations[1].i_size_after, 2);
  EXPECT_EQ(res.s, (VertexSet{0}));
  EXPECT_EQ(res.b, (VertexSet{4, 3}));
  EXPECT_EQ(res.case2_count, 1);

  ScatterAudit audit = audit_scatter(g, L, res);
  EXPECT_TRUE(audit.ok) << audit.violation;
  EXPECT_TRUE(audit.pairwise_gt_2r);
  EXPECT_EQ(audit.min_pairwise_distance, -1);  // centre gone, leaves split apart
}

TEST(Scatter, PreconditionEnforced) {
  Graph g = complete_graph(6);
  LinearOrder L = LinearOrder::identity(6);
  // c = 6 on K_6 at r = 1, so even m = 0 needs 7 vertices.
  EXPECT_THROW(scatter_extract(g, L, 1, all_vertices(g), 0), std::invalid_argument);
  EXPECT_THROW(scatter_extract(g, L, 1, all_vertices(g), -1), std::invalid_argument);
  EXPECT_THROW(scatter_extract(g, L, 1, all_vertices(g), 31), std::invalid_argument);
}

TEST(Scatter, AuditPassesOnStructuredFamilies) {
  std::vector<Graph> graphs{grid_graph(4, 4), random_tree(40, 2), random_planar(30, 5),
                            path_graph(25)};
  for (const Graph& g : graphs)
    for (int r : {1, 2}) {
      LinearOrder L = greedy_order(g, r);
      VertexSet a = all_vertices(g);
      int m = feasible_m(g, L, r, g.vertex_count());
      if (m < 0) continue;
      ScatterResult res = scatter_extract(g, L, r, a, m);
      EXPECT_EQ(static_cast<int>(res.b.size()), m);
      ScatterAudit audit = audit_scatter(g, L, res);
      EXPECT_TRUE(audit.ok) << "n=" << g.vertex_count() << " r=" << r << ": "
                            << audit.violation;
    }
}

TEST(Scatter, SeparatorStaysSmall) {
  Graph g = random_tree(60, 9);
  for (int r : {1, 2}) {
    LinearOrder L = greedy_order(g, r);
    int m = feasible_m(g, L, r, g.vertex_count());
    if (m < 0) continue;
    ScatterResult res = scatter_extract(g, L, r, all_vertices(g), m);
    EXPECT_LE(static_cast<int>(res.s.size()),
              static_cast<long long>(res.c) * (res.c - 1));
    EXPECT_LE(res.case2_count, res.c);
  }
}

TEST(Scatter, AuditCatchesTampering) {
  Graph g = star_graph(16);
  LinearOrder L = LinearOrder::identity(17);
  VertexSet leaves;
  for (int v = 1; v <= 16; ++v) leaves.push_back(v);
  ScatterResult res = scatter_extract(g, L, 2, leaves, 2);
  // Re-add the centre: B is then connected within distance r again.
  ScatterResult bad = res;
  bad.s.clear();
  ScatterAudit audit = audit_scatter(g, L, bad);
  EXPECT_FALSE(audit.ok);
}

}  // namespace
}  // namespace gcn
