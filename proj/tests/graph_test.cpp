#include "gcn/graph.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "gcn/generators.hpp"

namespace gcn {
namespace {

TEST(Parse, PathWithHeader) {
  ParsedGraph p = parse_graph("p 3 2\n0 1\n1 2\n");
  EXPECT_EQ(p.graph.vertex_count(), 3);
  EXPECT_EQ(p.graph.edge_count(), 2);
  EXPECT_TRUE(p.graph.has_edge(0, 1));
  EXPECT_TRUE(p.graph.has_edge(1, 2));
  EXPECT_FALSE(p.graph.has_edge(0, 2));
  EXPECT_FALSE(p.remapped);
  EXPECT_TRUE(p.warnings.empty());
}

TEST(Parse, SingletonHeaderOnly) {
  ParsedGraph p = parse_graph("p 1 0\n");
  EXPECT_EQ(p.graph.vertex_count(), 1);
  EXPECT_EQ(p.graph.edge_count(), 0);
}

TEST(Parse, DuplicateEdgesCollapseWithWarning) {
  ParsedGraph p = parse_graph("0 1\n1 0\n0 1\n");
  EXPECT_EQ(p.graph.edge_count(), 1);
  EXPECT_FALSE(p.warnings.empty());
}

TEST(Parse, SelfLoopRejected) {
  EXPECT_THROW(parse_graph("0 1\n1 1\n"), std::runtime_error);
}

TEST(Parse, HeaderEdgeCountMismatchWarns) {
  ParsedGraph p = parse_graph("p 3 5\n0 1\n1 2\n");
  EXPECT_EQ(p.graph.edge_count(), 2);
  EXPECT_FALSE(p.warnings.empty());
}

TEST(Parse, NonContiguousIdsRemapped) {
  ParsedGraph p = parse_graph("10 20\n20 30\n");
  EXPECT_TRUE(p.remapped);
  EXPECT_EQ(p.graph.vertex_count(), 3);
  EXPECT_EQ(p.graph.edge_count(), 2);
  ASSERT_EQ(p.original_ids.size(), 3u);
  EXPECT_EQ(p.original_ids[0], 10);
  EXPECT_EQ(p.original_ids[1], 20);
  EXPECT_EQ(p.original_ids[2], 30);
}

TEST(Parse, CommentsAndBlankLinesIgnored) {
  ParsedGraph p = parse_graph("# a comment\n\n0 1\n# another\n1 2\n");
  EXPECT_EQ(p.graph.vertex_count(), 3);
  EXPECT_EQ(p.graph.edge_count(), 2);
}

TEST(Serialise, CanonicalFormRoundTrips) {
  Graph g = Graph::from_edges(4, {{2, 3}, {1, 0}, {0, 2}});
  std::string text = serialise_graph(g);
  EXPECT_EQ(text, "p 4 3\n0 1\n0 2\n2 3\n");
  ParsedGraph back = parse_graph(text);
  EXPECT_EQ(serialise_graph(back.graph), text);
}

TEST(Order, RoundTripAndQueries) {
  LinearOrder L = LinearOrder::from_sequence({2, 0, 1});
  EXPECT_EQ(L.size(), 3);
  EXPECT_EQ(L.at(0), 2);
  EXPECT_EQ(L.position(2), 0);
  EXPECT_EQ(L.position(1), 2);
  EXPECT_TRUE(L.before(2, 1));
  EXPECT_FALSE(L.before(1, 0));
  std::string text = serialise_order(L);
  LinearOrder back = parse_order(text, 3);
  EXPECT_EQ(back.sequence(), L.sequence());
}

TEST(Order, RejectsNonPermutation) {
  EXPECT_THROW(parse_order("0\n0\n2\n", 3), std::invalid_argument);
  EXPECT_THROW(parse_order("0\n1\n", 3), std::runtime_error);
}

TEST(Ball, RadiusZeroIsSelf) {
  Graph g = path_graph(5);
  EXPECT_EQ(r_ball(g, 2, 0), (VertexSet{2}));
}

TEST(Ball, PathRadiusOne) {
  Graph g = path_graph(5);
  EXPECT_EQ(r_ball(g, 2, 1), (VertexSet{1, 2, 3}));
}

TEST(Ball, CycleRadiusTwo) {
  Graph g = cycle_graph(6);
  EXPECT_EQ(r_ball(g, 0, 2), (VertexSet{0, 1, 2, 4, 5}));
}

TEST(Ball, RespectsAliveMask) {
  Graph g = path_graph(5);
  std::vector<char> alive(5, 1);
  alive[1] = 0;  // cut the path at vertex 1
  EXPECT_EQ(r_ball(g, 0, 4, &alive), (VertexSet{0}));
}

TEST(Distance, SelfZeroUnreachableMinusOne) {
  Graph g = disjoint_union(path_graph(2), path_graph(2));
  EXPECT_EQ(distance(g, 0, 0), 0);
  EXPECT_EQ(distance(g, 0, 1), 1);
  EXPECT_EQ(distance(g, 0, 2), -1);
}

TEST(Distance, GridCorners) {
  Graph g = grid_graph(3, 3);
  EXPECT_EQ(distance(g, 0, 8), 4);
}

TEST(Components, OrderedBySmallestMember) {
  Graph g = disjoint_union(path_graph(2), complete_graph(3));
  auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], (VertexSet{0, 1}));
  EXPECT_EQ(comps[1], (VertexSet{2, 3, 4}));
}

TEST(Induced, KeepsEdgesAndMapsBack) {
  Graph g = cycle_graph(5);
  InducedSubgraph sub = induced_subgraph(g, {1, 2, 4});
  EXPECT_EQ(sub.graph.vertex_count(), 3);
  EXPECT_EQ(sub.graph.edge_count(), 1);  // only 1-2 survives
  EXPECT_EQ(sub.to_original[0], 1);
  EXPECT_EQ(sub.to_original[2], 4);
}

TEST(Graph, WithEdgesAdded) {
  Graph g = path_graph(3);
  Graph h = g.with_edges_added({{0, 2}});
  EXPECT_EQ(h.edge_count(), 3);
  EXPECT_TRUE(h.has_edge(0, 2));
  EXPECT_EQ(g.edge_count(), 2);  // original untouched
}

TEST(Bfs, DistancesWithMask) {
  Graph g = cycle_graph(6);
  std::vector<char> alive(6, 1);
  alive[1] = 0;
  auto dist = bfs_distances(g, 0, &alive);
  EXPECT_EQ(dist[1], -1);
  EXPECT_EQ(dist[2], 4);  // forced the long way round
  EXPECT_EQ(dist[3], 3);
}

}  // namespace
}  // namespace gcn
