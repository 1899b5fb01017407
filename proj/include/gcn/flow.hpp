#pragma once

#include <climits>
#include <vector>

namespace gcn {

// Small Dinic max-flow. Every network in this project is a unit-capacity
// vertex-split construction with a handful of augmenting paths, so the simple
// O(V^2 E) bound is far more than enough.
class FlowNetwork {
 public:
  explicit FlowNetwork(int node_count) : head_(node_count, -1) {}

  int add_node() {
    head_.push_back(-1);
    return static_cast<int>(head_.size()) - 1;
  }

  int node_count() const { return static_cast<int>(head_.size()); }

  void add_edge(int from, int to, int cap) {
    edges_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(edges_.size()) - 1;
  }

  // Max flow from s to t, stopping early once `limit` is reached.
  int max_flow(int s, int t, int limit = INT_MAX) {
    int flow = 0;
    while (flow < limit && build_levels(s, t)) {
      iter_ = head_;
      while (flow < limit) {
        int pushed = augment(s, t, limit - flow);
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

 private:
  struct Edge {
    int to;
    int next;
    int cap;
  };

  bool build_levels(int s, int t) {
    level_.assign(head_.size(), -1);
    std::vector<int> queue{s};
    level_[s] = 0;
    for (size_t i = 0; i < queue.size(); ++i) {
      int u = queue[i];
      for (int e = head_[u]; e != -1; e = edges_[e].next) {
        if (edges_[e].cap > 0 && level_[edges_[e].to] == -1) {
          level_[edges_[e].to] = level_[u] + 1;
          queue.push_back(edges_[e].to);
        }
      }
    }
    return level_[t] != -1;
  }

  int augment(int u, int t, int limit) {
    if (u == t) return limit;
    for (int& e = iter_[u]; e != -1; e = edges_[e].next) {
      Edge& ed = edges_[e];
      if (ed.cap > 0 && level_[ed.to] == level_[u] + 1) {
        int pushed = augment(ed.to, t, std::min(limit, ed.cap));
        if (pushed > 0) {
          ed.cap -= pushed;
          edges_[e ^ 1].cap += pushed;
          return pushed;
        }
      }
    }
    level_[u] = -1;
    return 0;
  }

  std::vector<int> head_;
  std::vector<Edge> edges_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace gcn
