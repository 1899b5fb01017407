#pragma once

#include <string>

#include "gcn/reach.hpp"

namespace gcn {

enum class Metric { wcol, col, adm };

inline const char* metric_name(Metric m) {
  switch (m) {
    case Metric::wcol:
      return "wcol";
    case Metric::col:
      return "col";
    default:
      return "adm";
  }
}

inline Metric metric_from_name(const std::string& s) {
  if (s == "wcol") return Metric::wcol;
  if (s == "col") return Metric::col;
  if (s == "adm") return Metric::adm;
  throw std::invalid_argument("unknown metric: " + s);
}

// Exact value of one metric under one fixed order (admissibility through the
// exhaustive fallback when the flow bounds leave a gap).
inline int order_value_exact(const Graph& g, const LinearOrder& L, int r, Metric metric) {
  int n = g.vertex_count();
  int best = 0;
  switch (metric) {
    case Metric::wcol: {
      for (const auto& set : all_wreach(g, L, r))
        best = std::max(best, static_cast<int>(set.size()));
      break;
    }
    case Metric::col: {
      for (int v = 0; v < n; ++v)
        best = std::max(best, static_cast<int>(sreach_set(g, L, v, r).size()));
      break;
    }
    case Metric::adm: {
      for (int v = 0; v < n; ++v)
        best = std::max(best, vertex_admissibility_exact_small(g, L, v, r));
      break;
    }
  }
  return best;
}

struct ExactResult {
  int value = 0;
  LinearOrder witness;
};

// Minimum over all vertex orders, by DFS over order prefixes with
// branch-and-bound. A vertex's contribution is final the moment it is placed
// (col, adm) or grows monotonically (wcol counts), so a running maximum that
// already matches the incumbent prunes the branch.
inline ExactResult exact_optimum(const Graph& g, int r, Metric metric, int cap = 8) {
  if (cap > 9) throw std::invalid_argument("enumeration cap must be <= 9");
  int n = g.vertex_count();
  if (n > cap)
    throw std::invalid_argument("graph has " + std::to_string(n) +
                                " vertices, enumeration cap is " + std::to_string(cap));
  if (n == 0) return {0, LinearOrder::identity(0)};

  LinearOrder incumbent = greedy_order(g, std::max(r, 1));
  int best = order_value_exact(g, incumbent, r, metric);
  std::vector<int> best_seq = incumbent.sequence();

  std::vector<int> seq;
  seq.reserve(n);
  std::vector<char> placed(n, 0);
  std::vector<int> cnt(n, 0);  // wcol: |WReach| accumulated so far
  std::vector<int> dist(n);

  // vertices whose WReach gains v when v is placed next: v plus every
  // currently-unplaced vertex within r of v through unplaced interiors
  auto weak_targets = [&](int v) {
    std::vector<int> out{v};
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<int> queue{v};
    dist[v] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      if (dist[x] == r) continue;
      for (int w : g.neighbors(x)) {
        if (dist[w] != -1 || placed[w]) continue;
        dist[w] = dist[x] + 1;
        out.push_back(w);
        queue.push_back(w);
      }
    }
    return out;
  };

  // |SReach| of v if placed next: placed vertices absorbed within r through
  // unplaced interiors, plus v itself
  auto strong_value = [&](int v) {
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<int> queue{v};
    dist[v] = 0;
    int absorbed = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      if (dist[x] == r) continue;
      for (int w : g.neighbors(x)) {
        if (dist[w] != -1) continue;
        dist[w] = dist[x] + 1;
        if (placed[w])
          ++absorbed;
        else
          queue.push_back(w);
      }
    }
    return 1 + absorbed;
  };

  auto adm_value = [&](int v) {
    AdmBounds b = admissibility_partition(g, placed, v, r);
    if (b.exact) return b.lower;
    return 1 + bounded_paths_exhaustive(g, placed, v, r);
  };

  auto dfs = [&](auto&& self, int depth, int cur_max) -> void {
    if (depth == n) {
      if (cur_max < best) {
        best = cur_max;
        best_seq = seq;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      int new_max = cur_max;
      std::vector<int> touched;
      switch (metric) {
        case Metric::wcol:
          touched = weak_targets(v);
          for (int w : touched) new_max = std::max(new_max, cnt[w] + 1);
          break;
        case Metric::col:
          new_max = std::max(new_max, strong_value(v));
          break;
        case Metric::adm:
          new_max = std::max(new_max, adm_value(v));
          break;
      }
      if (new_max >= best) continue;
      placed[v] = 1;
      seq.push_back(v);
      for (int w : touched) ++cnt[w];
      self(self, depth + 1, new_max);
      for (int w : touched) --cnt[w];
      placed[v] = 0;
      seq.pop_back();
    }
  };
  dfs(dfs, 0, 0);
  return {best, LinearOrder::from_sequence(std::move(best_seq))};
}

}  // namespace gcn
