#pragma once

#include <functional>
#include <memory>
#include <string>

#include "gcn/reach.hpp"

namespace gcn {

struct GameRound {
  int connector_move = -1;
  int splitter_move = -1;
  int arena_size_after = 0;
};

struct GameTranscript {
  int r = 0;
  int round_cap = 0;
  std::vector<GameRound> rounds;
  bool splitter_won = false;
  int rounds_used = 0;
};

// Strategies see only the current arena (plus the host graph for adjacency).
using ConnectorStrategy = std::function<int(const Graph&, const VertexSet& arena)>;
using SplitterStrategy = std::function<int(const Graph&, const VertexSet& arena,
                                           int connector_move, const VertexSet& ball)>;

// Order-driven strategy: delete the L-minimum of the chosen ball.
inline SplitterStrategy wcol_splitter(const LinearOrder& L) {
  return [L](const Graph&, const VertexSet&, int, const VertexSet& ball) {
    int best = ball[0];
    for (int w : ball)
      if (L.position(w) < L.position(best)) best = w;
    return best;
  };
}

// Connector heuristics. max_ball plays the vertex whose r-ball inside the
// arena is largest (ties: smallest id); random draws uniformly from the
// arena; first always plays the smallest id.
inline ConnectorStrategy max_ball_connector(int r) {
  return [r](const Graph& g, const VertexSet& arena) {
    std::vector<char> alive(g.vertex_count(), 0);
    for (int v : arena) alive[v] = 1;
    int best = arena[0], best_size = -1;
    for (int v : arena) {
      int size = static_cast<int>(r_ball(g, v, r, &alive).size());
      if (size > best_size) {
        best = v;
        best_size = size;
      }
    }
    return best;
  };
}

inline ConnectorStrategy random_connector(uint32_t seed) {
  auto rng = std::make_shared<std::mt19937>(seed);
  return [rng](const Graph&, const VertexSet& arena) {
    return arena[rng_below(*rng, static_cast<uint32_t>(arena.size()))];
  };
}

inline ConnectorStrategy first_connector() {
  return [](const Graph&, const VertexSet& arena) { return arena[0]; };
}

// One full game. Arena_{i+1} = B_r(arena_i, v) \ {w} where v is the
// connector's pick and w the splitter's deletion inside that ball. The
// splitter wins when the arena empties within the round cap (default |V|).
inline GameTranscript play_game(const Graph& g, int r, const SplitterStrategy& splitter,
                                const ConnectorStrategy& connector, int round_cap = -1) {
  GameTranscript t;
  t.r = r;
  t.round_cap = round_cap < 0 ? g.vertex_count() : round_cap;
  VertexSet arena(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) arena[v] = v;

  while (!arena.empty() && static_cast<int>(t.rounds.size()) < t.round_cap) {
    int v = connector(g, arena);
    if (!set_contains(arena, v))
      throw std::runtime_error("connector played " + std::to_string(v) +
                               ", not in the arena");
    std::vector<char> alive(g.vertex_count(), 0);
    for (int u : arena) alive[u] = 1;
    VertexSet ball = r_ball(g, v, r, &alive);
    int w = splitter(g, arena, v, ball);
    if (!set_contains(ball, w))
      throw std::runtime_error("splitter played " + std::to_string(w) +
                               ", not in the chosen ball");
    VertexSet next;
    for (int u : ball)
      if (u != w) next.push_back(u);
    arena = std::move(next);
    t.rounds.push_back({v, w, static_cast<int>(arena.size())});
  }
  t.splitter_won = arena.empty();
  t.rounds_used = static_cast<int>(t.rounds.size());
  return t;
}

// Replays a transcript move by move against the rules; the game engine is not
// trusted here, only the graph and the recorded moves.
inline bool replay_game(const Graph& g, const GameTranscript& t,
                        std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (static_cast<int>(t.rounds.size()) > t.round_cap)
    return fail("more rounds than the cap allows");
  VertexSet arena(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) arena[v] = v;
  for (size_t i = 0; i < t.rounds.size(); ++i) {
    const GameRound& round = t.rounds[i];
    if (arena.empty()) return fail("round played on an empty arena");
    if (!set_contains(arena, round.connector_move))
      return fail("round " + std::to_string(i + 1) + ": connector move outside arena");
    std::vector<char> alive(g.vertex_count(), 0);
    for (int u : arena) alive[u] = 1;
    VertexSet ball = r_ball(g, round.connector_move, t.r, &alive);
    if (!set_contains(ball, round.splitter_move))
      return fail("round " + std::to_string(i + 1) + ": splitter move outside ball");
    VertexSet next;
    for (int u : ball)
      if (u != round.splitter_move) next.push_back(u);
    arena = std::move(next);
    if (static_cast<int>(arena.size()) != round.arena_size_after)
      return fail("round " + std::to_string(i + 1) + ": arena size mismatch");
  }
  if (t.splitter_won != arena.empty())
    return fail("winner flag inconsistent with final arena");
  if (t.rounds_used != static_cast<int>(t.rounds.size()))
    return fail("rounds_used inconsistent");
  return true;
}

}  // namespace gcn
