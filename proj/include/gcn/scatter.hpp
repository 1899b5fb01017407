#pragma once

#include <string>

#include "gcn/reach.hpp"

namespace gcn {

// Intersection graph of weak reachability: u ~ v iff one weakly r-reaches the
// other. Under L every vertex has back-degree at most c - 1, so H is
// c-degenerate (c = max |WReach_r|).
inline Graph wreach_intersection_graph(const Graph& g, const LinearOrder& L, int r) {
  auto wr = all_wreach(g, L, r);
  std::vector<std::pair<int, int>> es;
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int u : wr[v])
      if (u != v) es.emplace_back(u, v);
  return Graph::from_edges(g.vertex_count(), es);
}

// Greedy independent set in H[A]: repeatedly keep a minimum-degree vertex of
// the live subgraph (ties broken towards the L-smaller vertex) and discard its
// neighbours. A c-degenerate H guarantees |I| >= |A| / (c + 1). Throws if the
// request k cannot be met.
inline VertexSet greedy_independent(const Graph& h, const LinearOrder& L,
                                    const VertexSet& a, int k) {
  int n = h.vertex_count();
  std::vector<char> live(n, 0);
  std::vector<int> deg(n, 0);
  for (int v : a) live[v] = 1;
  for (int v : a)
    for (int w : h.neighbors(v))
      if (live[w]) ++deg[v];

  struct Entry {
    int deg;
    int pos;
    int v;
    bool operator>(const Entry& o) const {
      if (deg != o.deg) return deg > o.deg;
      return pos > o.pos;
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  for (int v : a) heap.push({deg[v], L.position(v), v});

  VertexSet kept;
  int remaining = static_cast<int>(a.size());
  while (remaining > 0) {
    Entry e = heap.top();
    heap.pop();
    if (!live[e.v] || deg[e.v] != e.deg) continue;  // stale
    kept.push_back(e.v);
    // delete the closed neighbourhood
    std::vector<int> gone{e.v};
    live[e.v] = 0;
    for (int w : h.neighbors(e.v))
      if (live[w]) {
        live[w] = 0;
        gone.push_back(w);
      }
    remaining -= static_cast<int>(gone.size());
    for (int x : gone)
      for (int w : h.neighbors(x))
        if (live[w]) {
          --deg[w];
          heap.push({deg[w], L.position(w), w});
        }
  }
  if (static_cast<int>(kept.size()) < k)
    throw std::runtime_error("greedy independent set has " +
                             std::to_string(kept.size()) + " vertices, need " +
                             std::to_string(k));
  std::sort(kept.begin(), kept.end());
  return kept;
}

struct ScatterIteration {
  int pivot = -1;
  bool halved = false;  // true: case 1 (drop reachable half), false: case 2
  VertexSet reached;    // R = members of I within distance r of the pivot in G - S
  int i_size_after = 0;
  int s_added = 0;
};

struct ScatterResult {
  int r = 0;
  int m = 0;
  int c = 0;  // measured max |WReach_r| under L
  VertexSet a;
  VertexSet initial_independent;  // I_0, size exactly 2^m
  VertexSet s;
  VertexSet b;  // pivots, in selection order
  std::vector<ScatterIteration> iterations;
  int case2_count = 0;
  int h_max_back_degree = 0;  // diagnostics for the degeneracy of H under L
  int h_degeneracy = 0;
};

inline ScatterResult scatter_extract(const Graph& g, const LinearOrder& L, int r,
                                     const VertexSet& a, int m) {
  if (m < 0 || m > 30) throw std::invalid_argument("m out of range");
  ScatterResult res;
  res.r = r;
  res.m = m;
  res.a = a;

  auto wr = all_wreach(g, L, r);
  for (const auto& set : wr) res.c = std::max(res.c, static_cast<int>(set.size()));
  long long need = static_cast<long long>(res.c + 1) << m;
  if (static_cast<long long>(a.size()) < need)
    throw std::invalid_argument("|A| = " + std::to_string(a.size()) +
                                " below the required (c+1)*2^m = " + std::to_string(need));

  Graph h = wreach_intersection_graph(g, L, r);
  res.h_degeneracy = degeneracy(h);
  for (int v : a) {
    int back = 0;
    for (int u : wr[v])
      if (u != v) ++back;
    res.h_max_back_degree = std::max(res.h_max_back_degree, back);
  }

  VertexSet kept = greedy_independent(h, L, a, 1 << m);
  // I_0: the 2^m L-smallest kept vertices
  std::sort(kept.begin(), kept.end(),
            [&](int x, int y) { return L.position(x) < L.position(y); });
  kept.resize(1 << m);
  std::sort(kept.begin(), kept.end());
  res.initial_independent = kept;

  std::vector<char> in_s(g.vertex_count(), 0);
  VertexSet i_set = kept;
  std::vector<char> alive(g.vertex_count(), 1);
  for (int step = 0; step < m; ++step) {
    int pivot = i_set[0];
    for (int u : i_set)
      if (L.position(u) > L.position(pivot)) pivot = u;

    ScatterIteration it;
    it.pivot = pivot;
    auto dist = bfs_distances(g, pivot, &alive);
    for (int u : i_set)
      if (dist[u] != -1 && dist[u] <= r) it.reached.push_back(u);

    VertexSet next;
    if (2 * static_cast<long long>(it.reached.size()) <=
        static_cast<long long>(i_set.size())) {
      it.halved = true;
      std::set_difference(i_set.begin(), i_set.end(), it.reached.begin(),
                          it.reached.end(), std::back_inserter(next));
    } else {
      ++res.case2_count;
      for (int u : wr[pivot])
        if (u != pivot && !in_s[u]) {
          in_s[u] = 1;
          alive[u] = 0;
          res.s.push_back(u);
          ++it.s_added;
        }
      for (int u : it.reached)
        if (u != pivot) next.push_back(u);
    }
    res.b.push_back(pivot);
    i_set = std::move(next);
    it.i_size_after = static_cast<int>(i_set.size());
    res.iterations.push_back(std::move(it));
  }
  std::sort(res.s.begin(), res.s.end());
  return res;
}

struct ScatterAudit {
  bool ok = true;
  std::string violation;
  bool pairwise_gt_2r = true;  // measured, not required
  int min_pairwise_distance = -1;  // -1: infinite / no pair
};

inline void scatter_check(ScatterAudit& audit, bool cond, const std::string& what) {
  if (audit.ok && !cond) {
    audit.ok = false;
    audit.violation = what;
  }
}

// Independent audit of a finished extraction against the extraction contract.
inline ScatterAudit audit_scatter(const Graph& g, const LinearOrder& L,
                                  const ScatterResult& res) {
  ScatterAudit audit;
  scatter_check(audit, static_cast<int>(res.b.size()) == res.m,
                "|B| != m");
  for (int v : res.b)
    scatter_check(audit, set_contains(res.a, v), "B not a subset of A");
  VertexSet b_sorted = make_vertex_set(res.b);
  for (int v : b_sorted)
    scatter_check(audit, !set_contains(res.s, v), "S and B intersect");
  scatter_check(audit,
                static_cast<long long>(res.s.size()) <=
                    static_cast<long long>(res.c) * (res.c - 1),
                "|S| exceeds c(c-1)");
  scatter_check(audit, res.case2_count <= res.c, "case 2 fired more than c times");

  // halving invariant per iteration
  long long size = static_cast<long long>(res.initial_independent.size());
  for (const auto& it : res.iterations) {
    scatter_check(audit, it.i_size_after >= size / 2, "iteration lost more than half of I");
    size = it.i_size_after;
  }

  std::vector<char> alive(g.vertex_count(), 1);
  for (int v : res.s) alive[v] = 0;
  for (size_t i = 0; i < res.b.size(); ++i) {
    auto dist = bfs_distances(g, res.b[i], &alive);
    for (size_t j = i + 1; j < res.b.size(); ++j) {
      int d = dist[res.b[j]];
      scatter_check(audit, d == -1 || d > res.r, "pair of B within distance r in G-S");
      if (d != -1 && d <= 2 * res.r) audit.pairwise_gt_2r = false;
      if (d != -1 &&
          (audit.min_pairwise_distance == -1 || d < audit.min_pairwise_distance))
        audit.min_pairwise_distance = d;
    }
  }
  (void)L;
  return audit;
}

}  // namespace gcn
