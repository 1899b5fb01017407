#pragma once

#include <numeric>
#include <set>

#include "gcn/graph.hpp"

namespace gcn {

// ---------------------------------------------------------------------------
// Brute-force reference implementations used to cross-validate the library.
// Everything here favours transparency over speed: explicit simple-path
// enumeration, full permutation scans, Floyd–Warshall, exhaustive packing.
// Intended for small instances only (reachability n <= ~32, orders n <= 8).
// ---------------------------------------------------------------------------

// All vertices u that close some simple path from v (length <= r edges) on
// which u is the order-minimum; v itself always qualifies via the trivial path.
inline VertexSet oracle_wreach(const Graph& g, const LinearOrder& L, int v, int r) {
  std::set<int> out{v};
  std::vector<int> path{v};
  std::vector<char> on_path(g.vertex_count(), 0);
  on_path[v] = 1;
  auto dfs = [&](auto&& self) -> void {
    int u = path.back();
    bool u_is_min = true;
    for (int x : path)
      if (L.position(x) < L.position(u)) u_is_min = false;
    if (u_is_min) out.insert(u);
    if (static_cast<int>(path.size()) - 1 == r) return;
    for (int w : g.neighbors(u)) {
      if (on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      self(self);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  dfs(dfs);
  return VertexSet(out.begin(), out.end());
}

// All u <= v (in L) that close some simple path from v of length <= r whose
// interior lies strictly above v in L; v itself always qualifies.
inline VertexSet oracle_sreach(const Graph& g, const LinearOrder& L, int v, int r) {
  std::set<int> out{v};
  std::vector<int> path{v};
  std::vector<char> on_path(g.vertex_count(), 0);
  on_path[v] = 1;
  auto dfs = [&](auto&& self) -> void {
    int u = path.back();
    if (static_cast<int>(path.size()) - 1 == r) return;
    for (int w : g.neighbors(u)) {
      if (on_path[w]) continue;
      if (L.position(w) < L.position(v)) {
        out.insert(w);  // endpoint below v: path closes here
        continue;
      }
      if (w == v) continue;
      on_path[w] = 1;  // interior vertex, strictly above v
      path.push_back(w);
      self(self);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  dfs(dfs);
  return VertexSet(out.begin(), out.end());
}

namespace detail {

// Truncated candidate paths for admissibility: interior strictly above v,
// endpoint strictly below v, length <= r. Stored without the shared start v.
inline std::vector<std::vector<int>> oracle_adm_paths(const Graph& g, const LinearOrder& L,
                                                      int v, int r) {
  std::vector<std::vector<int>> paths;
  std::vector<int> tail;
  std::vector<char> on_path(g.vertex_count(), 0);
  on_path[v] = 1;
  auto dfs = [&](auto&& self, int u) -> void {
    if (static_cast<int>(tail.size()) == r) return;
    for (int w : g.neighbors(u)) {
      if (on_path[w]) continue;
      if (L.position(w) < L.position(v)) {
        tail.push_back(w);
        paths.push_back(tail);
        tail.pop_back();
        continue;
      }
      if (w == v) continue;
      on_path[w] = 1;
      tail.push_back(w);
      self(self, w);
      tail.pop_back();
      on_path[w] = 0;
    }
  };
  dfs(dfs, v);
  return paths;
}

inline int oracle_max_packing(const std::vector<std::vector<int>>& paths) {
  std::vector<uint64_t> masks;
  masks.reserve(paths.size());
  for (const auto& p : paths) {
    uint64_t m = 0;
    for (int x : p) m |= uint64_t{1} << x;
    masks.push_back(m);
  }
  int best = 0;
  auto dfs = [&](auto&& self, size_t i, uint64_t used, int count) -> void {
    best = std::max(best, count);
    for (size_t j = i; j < masks.size(); ++j)
      if ((masks[j] & used) == 0) self(self, j + 1, used | masks[j], count + 1);
  };
  dfs(dfs, 0, 0, 0);
  return best;
}

}  // namespace detail

// Admissibility by exhaustive packing of enumerated candidate paths: 1 (for
// the trivial path) plus the largest family of pairwise vertex-disjoint
// candidates.
inline int oracle_adm(const Graph& g, const LinearOrder& L, int v, int r) {
  if (g.vertex_count() > 64) throw std::invalid_argument("oracle_adm: graph too large");
  auto paths = detail::oracle_adm_paths(g, L, v, r);
  return 1 + detail::oracle_max_packing(paths);
}

inline int oracle_wcol(const Graph& g, const LinearOrder& L, int r) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    best = std::max(best, static_cast<int>(oracle_wreach(g, L, v, r).size()));
  return best;
}

inline int oracle_col(const Graph& g, const LinearOrder& L, int r) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    best = std::max(best, static_cast<int>(oracle_sreach(g, L, v, r).size()));
  return best;
}

inline int oracle_adm_value(const Graph& g, const LinearOrder& L, int r) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, oracle_adm(g, L, v, r));
  return best;
}

// Exact optimum over every permutation; no pruning, no shared code with the
// library's search. n <= 8 only.
inline int oracle_exact_optimum(const Graph& g, int r, const std::string& metric) {
  int n = g.vertex_count();
  if (n > 8) throw std::invalid_argument("oracle_exact_optimum: n > 8");
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  int best = -1;
  do {
    auto L = LinearOrder::from_sequence(seq);
    int value;
    if (metric == "wcol")
      value = oracle_wcol(g, L, r);
    else if (metric == "col")
      value = oracle_col(g, L, r);
    else if (metric == "adm")
      value = oracle_adm_value(g, L, r);
    else
      throw std::invalid_argument("oracle_exact_optimum: unknown metric " + metric);
    if (best == -1 || value < best) best = value;
  } while (std::next_permutation(seq.begin(), seq.end()));
  return best;
}

// All-pairs distances by Floyd-Warshall; -1 encodes unreachable.
inline std::vector<std::vector<int>> oracle_all_distances(const Graph& g) {
  int n = g.vertex_count();
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (int u : g.neighbors(v)) d[v][u] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[i][j] >= inf) d[i][j] = -1;
  return d;
}

// Maximum independent set size by exhaustive search (n <= 25).
inline int oracle_max_independent_set(const Graph& g) {
  int n = g.vertex_count();
  if (n > 25) throw std::invalid_argument("oracle_max_independent_set: n > 25");
  std::vector<uint32_t> nbr(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) nbr[v] |= uint32_t{1} << u;
  int best = 0;
  auto dfs = [&](auto&& self, int v, uint32_t chosen, int count) -> void {
    if (v == n) {
      best = std::max(best, count);
      return;
    }
    self(self, v + 1, chosen, count);
    if ((nbr[v] & chosen) == 0) self(self, v + 1, chosen | (uint32_t{1} << v), count + 1);
  };
  dfs(dfs, 0, 0, 0);
  return best;
}

inline bool oracle_is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return connected_components(g).size() == 1;
}

inline bool oracle_is_tree(const Graph& g) {
  return g.edge_count() == g.vertex_count() - 1 && oracle_is_connected(g);
}

// Stacked 3-tree check: repeatedly peel a degree-3 vertex whose neighbourhood
// is a triangle until a single triangle remains. Certifies planarity for the
// triangulation generator's output family, together with the Euler count
// m = 3n - 6.
inline bool oracle_stacked_planar(const Graph& g) {
  int n = g.vertex_count();
  if (n < 3) return g.edge_count() == (n == 2 ? 1 : 0);
  if (g.edge_count() != 3 * static_cast<long long>(n) - 6) return false;
  std::vector<std::set<int>> adj(n);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) adj[v].insert(u);
  std::vector<char> alive(n, 1);
  int remaining = n;
  while (remaining > 3) {
    int pick = -1;
    for (int v = 0; v < n && pick == -1; ++v) {
      if (!alive[v] || adj[v].size() != 3) continue;
      auto it = adj[v].begin();
      int a = *it++, b = *it++, c = *it;
      if (adj[a].count(b) && adj[a].count(c) && adj[b].count(c)) pick = v;
    }
    if (pick == -1) return false;
    for (int u : adj[pick]) adj[u].erase(pick);
    adj[pick].clear();
    alive[pick] = 0;
    --remaining;
  }
  int edges_left = 0;
  for (int v = 0; v < n; ++v)
    if (alive[v]) edges_left += static_cast<int>(adj[v].size());
  return edges_left == 6;  // triangle counted from both ends
}

}  // namespace gcn
