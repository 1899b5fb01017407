#pragma once

#include <cstdint>
#include <random>
#include <unordered_map>

#include "gcn/flow.hpp"
#include "gcn/graph.hpp"
#include "gcn/rng.hpp"

namespace gcn {

// ---------------------------------------------------------------------------
// Weak and strong reachability.
//
// WReach_r[G, L, v] = vertices u for which some path from v to u of length
// <= r has u as its L-minimum (the trivial path puts v itself in the set).
// SReach_r[G, L, v] = vertices u <=_L v joined to v by a path of length <= r
// whose internal vertices are all >_L v (again including v).
// ---------------------------------------------------------------------------

// WReach sets for every vertex at once: one bounded BFS per source u inside
// G[{w : w >=_L u}] touches exactly the vertices whose WReach contains u.
inline std::vector<VertexSet> all_wreach(const Graph& g, const LinearOrder& L, int r) {
  int n = g.vertex_count();
  std::vector<VertexSet> wr(n);
  std::vector<int> dist(n);
  std::vector<int> queue;
  for (int u = 0; u < n; ++u) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.assign(1, u);
    dist[u] = 0;
    wr[u].push_back(u);
    for (size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      if (dist[x] == r) continue;
      for (int w : g.neighbors(x)) {
        if (dist[w] != -1 || L.position(w) < L.position(u)) continue;
        dist[w] = dist[x] + 1;
        queue.push_back(w);
        wr[w].push_back(u);
      }
    }
  }
  return wr;  // entries appended in ascending u, so each set is sorted
}

inline VertexSet wreach_set(const Graph& g, const LinearOrder& L, int v, int r) {
  return all_wreach(g, L, r)[v];
}

inline VertexSet sreach_set(const Graph& g, const LinearOrder& L, int v, int r) {
  int n = g.vertex_count();
  std::vector<int> dist(n, -1);
  std::vector<int> queue{v};
  dist[v] = 0;
  VertexSet out{v};
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    if (dist[x] == r) continue;
    for (int w : g.neighbors(x)) {
      if (dist[w] != -1) continue;
      dist[w] = dist[x] + 1;
      if (L.position(w) < L.position(v)) {
        out.push_back(w);  // absorbed: an endpoint, never an interior
      } else {
        queue.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Bounded path packings.
//
// A(v) = maximum number of paths of length <= r from v to distinct endpoints
// in `smaller`, with all internal vertices outside `smaller` (and != v),
// pairwise sharing only v. The admissibility of v is 1 + A(v): the trivial
// path joins the family. Interiors may be assumed outside `smaller` without
// loss of generality: truncating a path at its first `smaller` vertex keeps
// the family disjoint.
// ---------------------------------------------------------------------------

// Exact for r <= 2 (a length-<=2 path has at most one interior, so the
// depth-expanded network is isomorphic to the true instance); an upper bound
// for r >= 3, where one vertex may appear at several depths.
inline int bounded_paths_layered_flow(const Graph& g, const std::vector<char>& smaller,
                                      int v, int r) {
  if (r <= 0) return 0;
  int n = g.vertex_count();
  int layers = r - 1;
  // node ids: 0 source, 1 sink, interior (w, d) split into in/out, then targets
  auto interior_in = [&](int w, int d) { return 2 + 2 * ((d - 1) * n + w); };
  auto interior_out = [&](int w, int d) { return interior_in(w, d) + 1; };
  int target_base = 2 + 2 * layers * n;
  FlowNetwork net(target_base + n);
  int target_count = 0;
  std::vector<char> is_target(n, 0);
  for (int u = 0; u < n; ++u)
    if (smaller[u] && u != v) {
      is_target[u] = 1;
      net.add_edge(target_base + u, 1, 1);
      ++target_count;
    }
  for (int d = 1; d <= layers; ++d)
    for (int w = 0; w < n; ++w)
      if (!smaller[w] && w != v) net.add_edge(interior_in(w, d), interior_out(w, d), 1);
  for (int u : g.neighbors(v)) {
    if (is_target[u])
      net.add_edge(0, target_base + u, 1);
    else if (u != v && layers >= 1)
      net.add_edge(0, interior_in(u, 1), 1);
  }
  for (int d = 1; d <= layers; ++d)
    for (int w = 0; w < n; ++w) {
      if (smaller[w] || w == v) continue;
      for (int x : g.neighbors(w)) {
        if (is_target[x])
          net.add_edge(interior_out(w, d), target_base + x, 1);
        else if (x != v && d + 1 <= layers)
          net.add_edge(interior_out(w, d), interior_in(x, d + 1), 1);
      }
    }
  return net.max_flow(0, 1, target_count);
}

// Drops the length bound (paths stay inside the r-ball): an upper bound on
// A(v) that is exact once r exceeds every path length, i.e. r >= n - 1.
inline int bounded_paths_flow_unbounded(const Graph& g, const std::vector<char>& smaller,
                                        int v, int r) {
  if (r <= 0) return 0;
  int n = g.vertex_count();
  VertexSet ball = r_ball(g, v, r);
  std::vector<char> in_ball(n, 0);
  for (int w : ball) in_ball[w] = 1;
  auto node_in = [&](int w) { return 2 + 2 * w; };
  auto node_out = [&](int w) { return 3 + 2 * w; };
  FlowNetwork net(2 + 2 * n);
  int target_count = 0;
  for (int w : ball) {
    if (w == v) continue;
    net.add_edge(node_in(w), node_out(w), 1);
    if (smaller[w]) {
      net.add_edge(node_out(w), 1, 1);
      ++target_count;
    }
  }
  for (int u : g.neighbors(v))
    if (in_ball[u]) net.add_edge(0, node_in(u), 1);
  for (int w : ball) {
    if (w == v || smaller[w]) continue;  // `smaller` vertices only absorb
    for (int x : g.neighbors(w))
      if (x != v && in_ball[x]) net.add_edge(node_out(w), node_in(x), 1);
  }
  return net.max_flow(0, 1, target_count);
}

// Shortest-path-first packing: a feasible family, hence a lower bound. Each
// round takes the closest still-reachable endpoint (ties: smallest id) and
// blocks the path's vertices.
inline int bounded_paths_greedy(const Graph& g, const std::vector<char>& smaller,
                                int v, int r) {
  if (r <= 0) return 0;
  int n = g.vertex_count();
  std::vector<char> used(n, 0);
  std::vector<int> dist(n), parent(n);
  int count = 0;
  for (;;) {
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<int> queue{v};
    dist[v] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      if (dist[x] == r) continue;
      for (int w : g.neighbors(x)) {
        if (dist[w] != -1 || used[w] || w == v) continue;
        dist[w] = dist[x] + 1;
        parent[w] = x;
        if (!smaller[w]) queue.push_back(w);  // endpoints absorb, interiors expand
      }
    }
    int target = -1;
    for (int w = 0; w < n; ++w) {
      if (!smaller[w] || used[w] || dist[w] == -1 || w == v) continue;
      if (target == -1 || dist[w] < dist[target]) target = w;
    }
    if (target == -1) return count;
    for (int x = target; x != v; x = parent[x]) used[x] = 1;
    ++count;
  }
}

// Exact value by exhaustive packing with memoisation on the set of still
// available vertices. Exponential in principle; guarded for small graphs.
inline int bounded_paths_exhaustive(const Graph& g, const std::vector<char>& smaller,
                                    int v, int r) {
  int n = g.vertex_count();
  if (n > 60) throw std::invalid_argument("exhaustive packing limited to n <= 60");
  if (r <= 0) return 0;

  std::unordered_map<uint64_t, int> memo;
  // enumerate truncated paths inside `avail` as vertex masks (v excluded)
  std::vector<uint64_t> paths;
  auto enumerate = [&](uint64_t avail) {
    paths.clear();
    std::vector<std::pair<int, std::pair<int, uint64_t>>> stack;  // (vertex, (depth, mask))
    stack.push_back({v, {0, 0}});
    while (!stack.empty()) {
      auto [cur, state] = stack.back();
      auto [d, mask] = state;
      stack.pop_back();
      if (d >= r) continue;
      for (int w : g.neighbors(cur)) {
        uint64_t bit = uint64_t{1} << w;
        if (w == v || (mask & bit) || !(avail & bit)) continue;
        if (smaller[w])
          paths.push_back(mask | bit);
        else if (d + 1 < r)
          stack.push_back({w, {d + 1, mask | bit}});
      }
    }
    std::sort(paths.begin(), paths.end());
    paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  };

  uint64_t all = 0;
  for (int w = 0; w < n; ++w)
    if (w != v) all |= uint64_t{1} << w;

  auto solve = [&](auto&& self, uint64_t avail) -> int {
    auto it = memo.find(avail);
    if (it != memo.end()) return it->second;
    enumerate(avail);
    std::vector<uint64_t> options = paths;
    int best = 0;
    for (uint64_t p : options) {
      int cand = 1 + self(self, avail & ~p);
      if (cand > best) best = cand;
    }
    memo[avail] = best;
    return best;
  };
  return solve(solve, all);
}

struct AdmBounds {
  int lower = 1;
  int upper = 1;
  bool exact = true;
};

// Admissibility of v under the smaller/larger split given by a mask: exact for
// r <= 2, a two-sided interval for r >= 3.
inline AdmBounds admissibility_partition(const Graph& g, const std::vector<char>& smaller,
                                         int v, int r) {
  AdmBounds b;
  if (r <= 0) return b;
  if (r <= 2) {
    int a = bounded_paths_layered_flow(g, smaller, v, r);
    b.lower = b.upper = 1 + a;
    return b;
  }
  int lo = bounded_paths_greedy(g, smaller, v, r);
  int up = bounded_paths_layered_flow(g, smaller, v, r);
  up = std::min(up, bounded_paths_flow_unbounded(g, smaller, v, r));
  b.lower = 1 + lo;
  b.upper = 1 + up;
  b.exact = (lo == up);
  return b;
}

inline std::vector<char> smaller_mask(const LinearOrder& L, int v) {
  std::vector<char> mask(L.size(), 0);
  for (int u = 0; u < L.size(); ++u)
    if (L.position(u) < L.position(v)) mask[u] = 1;
  return mask;
}

inline AdmBounds vertex_admissibility(const Graph& g, const LinearOrder& L, int v, int r) {
  auto mask = smaller_mask(L, v);
  AdmBounds b = admissibility_partition(g, mask, v, r);
  // endpoints of the packed paths are distinct members of SReach_r \ {v}
  int sreach_cap = static_cast<int>(sreach_set(g, L, v, r).size());
  if (b.upper > sreach_cap) {
    b.upper = sreach_cap;
    b.exact = (b.lower == b.upper);
  }
  return b;
}

// Exact admissibility for small graphs (exhaustive packing fallback).
inline int vertex_admissibility_exact_small(const Graph& g, const LinearOrder& L,
                                            int v, int r) {
  AdmBounds b = vertex_admissibility(g, L, v, r);
  if (b.exact) return b.lower;
  return 1 + bounded_paths_exhaustive(g, smaller_mask(L, v), v, r);
}

// ---------------------------------------------------------------------------
// Per-order profile: all three metrics under one fixed order.
// ---------------------------------------------------------------------------

struct MetricProfile {
  int r = 0;
  std::vector<int> wreach_size;
  std::vector<int> sreach_size;
  std::vector<AdmBounds> adm;
  int wcol = 0;
  int col = 0;
  int adm_lower = 0;
  int adm_upper = 0;
  bool adm_exact = true;
};

inline MetricProfile metric_profile(const Graph& g, const LinearOrder& L, int r) {
  MetricProfile p;
  p.r = r;
  int n = g.vertex_count();
  auto wr = all_wreach(g, L, r);
  p.wreach_size.resize(n);
  p.sreach_size.resize(n);
  p.adm.resize(n);
  for (int v = 0; v < n; ++v) {
    p.wreach_size[v] = static_cast<int>(wr[v].size());
    p.sreach_size[v] = static_cast<int>(sreach_set(g, L, v, r).size());
    p.adm[v] = vertex_admissibility(g, L, v, r);
    p.wcol = std::max(p.wcol, p.wreach_size[v]);
    p.col = std::max(p.col, p.sreach_size[v]);
    p.adm_lower = std::max(p.adm_lower, p.adm[v].lower);
    p.adm_upper = std::max(p.adm_upper, p.adm[v].upper);
    p.adm_exact = p.adm_exact && p.adm[v].exact;
  }
  if (n == 0) p.wcol = p.col = p.adm_lower = p.adm_upper = 0;
  return p;
}

// ---------------------------------------------------------------------------
// Orders: classic degeneracy (independent route used to cross-check wcol_1),
// the distance-r greedy order, and seeded random orders.
// ---------------------------------------------------------------------------

inline int degeneracy(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  std::vector<int> deg(n);
  int maxdeg = 0;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    maxdeg = std::max(maxdeg, deg[v]);
  }
  std::vector<std::vector<int>> bucket(maxdeg + 1);
  for (int v = 0; v < n; ++v) bucket[deg[v]].push_back(v);
  std::vector<char> removed(n, 0);
  int result = 0, cursor = 0, taken = 0;
  while (taken < n) {
    while (cursor <= maxdeg && bucket[cursor].empty()) ++cursor;
    // deg values only decrease, so re-scan from 0 when the bucket emptied below
    if (cursor > maxdeg) break;
    int v = bucket[cursor].back();
    bucket[cursor].pop_back();
    if (removed[v] || deg[v] != cursor) continue;  // stale entry
    removed[v] = 1;
    ++taken;
    result = std::max(result, cursor);
    for (int w : g.neighbors(v)) {
      if (removed[w]) continue;
      bucket[--deg[w]].push_back(w);
      if (deg[w] < cursor) cursor = deg[w];
    }
  }
  return result;
}

// Distance-r degeneracy order: repeatedly send to the back the vertex whose
// closed r-ball in the residual graph is smallest (ties: smallest id). r = 1
// is the classic degeneracy order.
inline LinearOrder greedy_order(const Graph& g, int r) {
  int n = g.vertex_count();
  std::vector<int> seq(n);
  std::vector<char> alive(n, 1);
  std::vector<int> size(n);
  std::vector<uint64_t> stamp(n, 0);
  struct Entry {
    int size;
    int v;
    uint64_t stamp;
    bool operator>(const Entry& o) const {
      return size != o.size ? size > o.size : v > o.v;
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  auto push_current = [&](int v) {
    size[v] = static_cast<int>(r_ball(g, v, r, &alive).size());
    heap.push({size[v], v, ++stamp[v], });
  };
  for (int v = 0; v < n; ++v) push_current(v);
  for (int k = n - 1; k >= 0; --k) {
    int v = -1;
    while (!heap.empty()) {
      Entry e = heap.top();
      heap.pop();
      if (alive[e.v] && e.stamp == stamp[e.v]) {
        v = e.v;
        break;
      }
    }
    seq[k] = v;
    VertexSet touched = r_ball(g, v, r, &alive);
    alive[v] = 0;
    for (int w : touched)
      if (w != v) push_current(w);
  }
  return LinearOrder::from_sequence(std::move(seq));
}

inline LinearOrder random_order(int n, std::mt19937& rng) {
  std::vector<int> seq(n);
  for (int v = 0; v < n; ++v) seq[v] = v;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng_below(rng, static_cast<uint32_t>(i + 1)));
    std::swap(seq[i], seq[j]);
  }
  return LinearOrder::from_sequence(std::move(seq));
}

}  // namespace gcn
