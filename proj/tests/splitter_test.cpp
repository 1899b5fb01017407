#include "gcn/splitter.hpp"

#include <gtest/gtest.h>

#include "gcn/exact.hpp"
#include "gcn/generators.hpp"

namespace gcn {
namespace {

TEST(Strategy, WcolSplitterDeletesOrderMinimumOfBall) {
  // Path a-b-c ordered b < a < c: when the connector plays a at radius 1 the
  // ball is the whole path and the splitter removes b.
  Graph g = path_graph(3);
  LinearOrder L = LinearOrder::from_sequence({1, 0, 2});
  SplitterStrategy s = wcol_splitter(L);
  EXPECT_EQ(s(g, {0, 1, 2}, 0, {0, 1, 2}), 1);

  Graph c6 = cycle_graph(6);
  SplitterStrategy s6 = wcol_splitter(LinearOrder::identity(6));
  EXPECT_EQ(s6(c6, {0, 1, 2, 3, 4, 5}, 3, {1, 2, 3, 4, 5}), 1);
}

TEST(Strategy, MaxBallConnectorPrefersCentre) {
  Graph g = star_graph(5);
  VertexSet arena{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(max_ball_connector(1)(g, arena), 0);
}

TEST(Strategy, FirstConnectorPlaysSmallest) {
  Graph g = path_graph(4);
  EXPECT_EQ(first_connector()(g, {1, 2, 3}), 1);
}

TEST(Strategy, RandomConnectorDeterministicPerSeed) {
  Graph g = path_graph(9);
  VertexSet arena{0, 1, 2, 3, 4, 5, 6, 7, 8};
  ConnectorStrategy a = random_connector(77);
  ConnectorStrategy b = random_connector(77);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a(g, arena), b(g, arena));
}

TEST(Game, SingletonEndsInOneRound) {
  Graph g = Graph::from_edges(1, {});
  GameTranscript t =
      play_game(g, 1, wcol_splitter(LinearOrder::identity(1)), first_connector());
  EXPECT_TRUE(t.splitter_won);
  EXPECT_EQ(t.rounds_used, 1);
  EXPECT_TRUE(replay_game(g, t));
}

TEST(Game, CompleteGraphTakesExactlyNRounds) {
  // Every ball is the whole arena, so each round deletes exactly one vertex.
  for (int n : {2, 4, 6}) {
    Graph g = complete_graph(n);
    GameTranscript t =
        play_game(g, 1, wcol_splitter(LinearOrder::identity(n)), max_ball_connector(1));
    EXPECT_TRUE(t.splitter_won);
    EXPECT_EQ(t.rounds_used, n);
    EXPECT_TRUE(replay_game(g, t));
  }
}

TEST(Game, PathRoundsBoundedByWcolTwoR) {
  // The splitter that deletes order-minima wins within wcol_{2r} rounds when
  // the order is optimal for radius 2r.
  Graph g = path_graph(5);
  int r = 1;
  ExactResult best = exact_optimum(g, 2 * r, Metric::wcol);
  const LinearOrder& L = best.witness;
  for (const ConnectorStrategy& connector :
       {max_ball_connector(r), first_connector(), random_connector(3)}) {
    GameTranscript t = play_game(g, r, wcol_splitter(L), connector);
    EXPECT_TRUE(t.splitter_won);
    EXPECT_LE(t.rounds_used, best.value);
    std::string why;
    EXPECT_TRUE(replay_game(g, t, &why)) << why;
  }
}

TEST(Game, RoundCapStopsPlay) {
  Graph g = path_graph(6);
  GameTranscript t = play_game(g, 1, wcol_splitter(LinearOrder::identity(6)),
                               first_connector(), 1);
  EXPECT_FALSE(t.splitter_won);
  EXPECT_EQ(t.rounds_used, 1);
  EXPECT_TRUE(replay_game(g, t));
}

TEST(Game, CheatingConnectorIsRejected) {
  Graph g = path_graph(3);
  ConnectorStrategy cheat = [](const Graph&, const VertexSet&) { return 99; };
  EXPECT_THROW(play_game(g, 1, wcol_splitter(LinearOrder::identity(3)), cheat),
               std::runtime_error);
}

TEST(Replay, CatchesTamperedTranscripts) {
  Graph g = cycle_graph(6);
  GameTranscript t = play_game(g, 1, wcol_splitter(LinearOrder::identity(6)),
                               max_ball_connector(1));
  ASSERT_TRUE(t.splitter_won);
  ASSERT_TRUE(replay_game(g, t));

  GameTranscript bad = t;
  bad.rounds[0].arena_size_after += 1;
  EXPECT_FALSE(replay_game(g, bad));

  bad = t;
  bad.splitter_won = !bad.splitter_won;
  EXPECT_FALSE(replay_game(g, bad));

  bad = t;
  bad.rounds[0].splitter_move = 99;  // outside any ball
  std::string why;
  EXPECT_FALSE(replay_game(g, bad, &why));
  EXPECT_FALSE(why.empty());

  bad = t;
  bad.rounds_used += 1;
  EXPECT_FALSE(replay_game(g, bad));
}

TEST(Game, ArenaShrinksToBallEachRound) {
  // Arena evolution is nested in balls: replay validates sizes, here we check
  // the recorded sizes are non-increasing once the game is underway.
  Graph g = grid_graph(3, 4);
  GameTranscript t = play_game(g, 2, wcol_splitter(greedy_order(g, 4)),
                               max_ball_connector(2));
  EXPECT_TRUE(t.splitter_won);
  EXPECT_TRUE(replay_game(g, t));
  EXPECT_EQ(t.rounds.back().arena_size_after, 0);
}

}  // namespace
}  // namespace gcn
