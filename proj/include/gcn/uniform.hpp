#pragma once

#include <string>
#include <unordered_map>

#include "gcn/flow.hpp"
#include "gcn/graph.hpp"

namespace gcn {

// ---------------------------------------------------------------------------
// Uniform-order construction: carve the graph into connected fragments
// H_1, ..., H_l, each a subtree of a BFS tree of the component it came from.
// The order lists fragments in construction sequence; it does not depend on
// any radius. The successor variant additionally forces each fragment's entry
// vertex (the designated neighbour of the last connected fragment) to the
// front of the fragment.
// ---------------------------------------------------------------------------

enum class OrderVariant { plain, successor };

struct Fragment {
  int index = 0;                                 // construction index, 0-based
  std::vector<int> vertices;                     // internal order
  std::vector<std::pair<int, int>> tree_edges;   // (parent, child) pairs
  int root = -1;
  int entry = -1;   // w: first vertex of the fragment (successor variant)
  int anchor = -1;  // w': entry's neighbour in the last connected fragment
};

struct BuildStep {
  VertexSet component;         // the component C the fragment was carved from
  std::vector<int> connected;  // indices of fragments connected to C, ascending
  int root = -1;
  int root_m = 0;  // m(root): max disjoint-path connections to distinct fragments
};

struct ConstructionTrace {
  OrderVariant variant = OrderVariant::plain;
  std::vector<Fragment> fragments;
  std::vector<BuildStep> steps;
};

struct UniformOrderResult {
  LinearOrder order;
  ConstructionTrace trace;
};

// Fragment indices with an edge into the component, ascending.
inline std::vector<int> connected_fragments(const Graph& g,
                                            const std::vector<Fragment>& fragments,
                                            const VertexSet& component) {
  std::vector<char> in_c(g.vertex_count(), 0);
  for (int v : component) in_c[v] = 1;
  std::vector<int> conn;
  for (const Fragment& f : fragments) {
    bool touches = false;
    for (int x : f.vertices) {
      for (int u : g.neighbors(x))
        if (in_c[u]) {
          touches = true;
          break;
        }
      if (touches) break;
    }
    if (touches) conn.push_back(f.index);
  }
  return conn;
}

namespace detail {

// m(v): maximum number of paths from v to distinct connected fragments whose
// internal vertices stay in the residual graph (equivalently in C), pairwise
// sharing only v. Unit-capacity flow with split vertices and one capacity-1
// node per fragment.
inline int connection_flow(const Graph& g, const std::vector<int>& frag_of,
                           const std::vector<int>& conn, const std::vector<char>& in_c,
                           const VertexSet& component, int v) {
  if (conn.empty()) return 0;
  int k = static_cast<int>(component.size());
  std::vector<int> local(g.vertex_count(), -1);
  for (int i = 0; i < k; ++i) local[component[i]] = i;
  auto frag_slot = [&](int fragment_index) {
    auto it = std::lower_bound(conn.begin(), conn.end(), fragment_index);
    if (it == conn.end() || *it != fragment_index) return -1;
    return static_cast<int>(it - conn.begin());
  };
  // nodes: 0 source, 1 sink, split component vertices, then fragment nodes
  auto node_in = [&](int w) { return 2 + 2 * local[w]; };
  auto node_out = [&](int w) { return 3 + 2 * local[w]; };
  int frag_base = 2 + 2 * k;
  FlowNetwork net(frag_base + static_cast<int>(conn.size()));
  for (int t = 0; t < static_cast<int>(conn.size()); ++t)
    net.add_edge(frag_base + t, 1, 1);
  for (int w : component)
    if (w != v) net.add_edge(node_in(w), node_out(w), 1);
  for (int u : g.neighbors(v)) {
    if (in_c[u] && u != v) net.add_edge(0, node_in(u), 1);
    if (frag_of[u] != -1) {
      int t = frag_slot(frag_of[u]);
      if (t != -1) net.add_edge(0, frag_base + t, 1);
    }
  }
  for (int w : component) {
    if (w == v) continue;
    for (int x : g.neighbors(w)) {
      if (in_c[x]) {
        if (x != v) net.add_edge(node_out(w), node_in(x), 1);
      } else if (frag_of[x] != -1) {
        int t = frag_slot(frag_of[x]);
        if (t != -1) net.add_edge(node_out(w), frag_base + t, 1);
      }
    }
  }
  return net.max_flow(0, 1, static_cast<int>(conn.size()));
}

}  // namespace detail

// m(v) against the fragments of a (prefix of a) trace.
inline int compute_m(const Graph& g, const ConstructionTrace& trace,
                     const VertexSet& component, int v) {
  std::vector<int> frag_of(g.vertex_count(), -1);
  for (const Fragment& f : trace.fragments)
    for (int x : f.vertices) frag_of[x] = f.index;
  std::vector<char> in_c(g.vertex_count(), 0);
  for (int u : component) in_c[u] = 1;
  auto conn = connected_fragments(g, trace.fragments, component);
  return detail::connection_flow(g, frag_of, conn, in_c, component, v);
}

inline UniformOrderResult build_uniform_order(const Graph& g, OrderVariant variant) {
  int n = g.vertex_count();
  if (variant == OrderVariant::successor && connected_components(g).size() > 1)
    throw std::invalid_argument(
        "successor variant requires a connected graph; "
        "build_augmented handles disconnected inputs per component");
  ConstructionTrace trace;
  trace.variant = variant;
  std::vector<int> frag_of(n, -1);
  std::vector<int> pos(n, -1);
  std::vector<char> unassigned(n, 1);
  std::vector<int> seq;
  seq.reserve(n);

  while (static_cast<int>(seq.size()) < n) {
    auto comps = connected_components(g, &unassigned);
    const VertexSet& component = comps[0];  // holds the smallest unassigned id
    std::vector<char> in_c(n, 0);
    for (int u : component) in_c[u] = 1;

    std::vector<int> conn;
    {
      std::vector<char> seen(trace.fragments.size(), 0);
      for (int w : component)
        for (int x : g.neighbors(w))
          if (frag_of[x] != -1 && !seen[frag_of[x]]) {
            seen[frag_of[x]] = 1;
            conn.push_back(frag_of[x]);
          }
      std::sort(conn.begin(), conn.end());
    }

    int root, root_m;
    if (conn.empty()) {
      root = component[0];
      root_m = 0;
    } else {
      root = -1;
      root_m = -1;
      for (int v : component) {
        // a cheap upper bound lets most candidates skip the flow; ties keep
        // the earlier (smaller) id because only strict improvements replace
        int ub = std::min(g.degree(v), static_cast<int>(conn.size()));
        if (ub <= root_m) continue;
        int mv = detail::connection_flow(g, frag_of, conn, in_c, component, v);
        if (mv > root_m) {
          root_m = mv;
          root = v;
        }
      }
    }

    // BFS tree of G[C] rooted at the chosen vertex
    std::vector<int> parent(n, -1), depth(n, -1), discovery;
    depth[root] = 0;
    discovery.push_back(root);
    for (size_t head = 0; head < discovery.size(); ++head) {
      int u = discovery[head];
      for (int w : g.neighbors(u)) {
        if (!in_c[w] || depth[w] != -1) continue;
        depth[w] = depth[u] + 1;
        parent[w] = u;
        discovery.push_back(w);
      }
    }

    int entry = -1, anchor = -1, skip_j = -1;
    std::vector<int> targets;
    if (variant == OrderVariant::successor && !conn.empty()) {
      skip_j = conn.back();
      for (int x : trace.fragments[skip_j].vertices) {
        bool adj = false;
        for (int u : g.neighbors(x))
          if (in_c[u]) {
            adj = true;
            break;
          }
        if (adj && (anchor == -1 || pos[x] > pos[anchor])) anchor = x;
      }
      for (int u : g.neighbors(anchor))
        if (in_c[u]) {
          entry = u;  // neighbours are sorted: smallest id
          break;
        }
      targets.push_back(entry);
    }
    for (int j : conn) {
      if (j == skip_j) continue;
      int best = -1;
      for (int x : trace.fragments[j].vertices)
        for (int u : g.neighbors(x)) {
          if (!in_c[u]) continue;
          if (best == -1 || depth[u] < depth[best] ||
              (depth[u] == depth[best] && u < best))
            best = u;
        }
      targets.push_back(best);
    }

    // minimal subtree: union of tree paths from the root to each target
    std::vector<char> in_frag(n, 0);
    in_frag[root] = 1;
    std::vector<std::pair<int, int>> tree_edges;
    for (int t : targets)
      for (int x = t; !in_frag[x]; x = parent[x]) {
        in_frag[x] = 1;
        tree_edges.emplace_back(parent[x], x);
      }

    Fragment f;
    f.index = static_cast<int>(trace.fragments.size());
    f.root = root;
    f.entry = entry;
    f.anchor = anchor;
    if (entry != -1) f.vertices.push_back(entry);
    for (int u : discovery)
      if (in_frag[u] && u != entry) f.vertices.push_back(u);
    // tree edges in root-to-leaf discovery order for reproducibility
    std::sort(tree_edges.begin(), tree_edges.end(),
              [&](const auto& a, const auto& b) { return depth[a.second] != depth[b.second]
                                                      ? depth[a.second] < depth[b.second]
                                                      : a.second < b.second; });
    f.tree_edges = std::move(tree_edges);

    for (int u : f.vertices) {
      pos[u] = static_cast<int>(seq.size());
      seq.push_back(u);
      frag_of[u] = f.index;
      unassigned[u] = 0;
    }
    trace.steps.push_back({component, conn, root, root_m});
    trace.fragments.push_back(std::move(f));
  }
  return {LinearOrder::from_sequence(std::move(seq)), trace};
}

// ---------------------------------------------------------------------------
// Invariant verification: partition, per-fragment trees, step-by-step
// component/connection agreement, the K_s clique-minor invariant (connected
// fragments of a common component are pairwise adjacent), and BFS isometry of
// fragment trees. Reports the first violation.
// ---------------------------------------------------------------------------

struct InvariantReport {
  bool ok = true;
  std::string violation;
  bool partition_ok = true;
  bool trees_ok = true;
  bool steps_ok = true;
  bool minor_ok = true;
  bool isometry_ok = true;
  int max_clique_model = 0;  // largest witnessed K_s model (conn plus the new fragment)
};

namespace detail {

inline bool fragments_adjacent(const Graph& g, const Fragment& a, const Fragment& b) {
  std::vector<char> in_b(g.vertex_count(), 0);
  for (int v : b.vertices) in_b[v] = 1;
  for (int v : a.vertices)
    for (int u : g.neighbors(v))
      if (in_b[u]) return true;
  return false;
}

}  // namespace detail

inline InvariantReport verify_invariant(const Graph& g, const ConstructionTrace& trace) {
  InvariantReport rep;
  int n = g.vertex_count();
  auto fail = [&](bool& flag, const std::string& msg) {
    flag = false;
    if (rep.ok) {
      rep.ok = false;
      rep.violation = msg;
    }
  };

  // partition
  std::vector<int> frag_of(n, -1);
  for (const Fragment& f : trace.fragments)
    for (int v : f.vertices) {
      if (v < 0 || v >= n || frag_of[v] != -1) {
        fail(rep.partition_ok, "fragment " + std::to_string(f.index) +
                                   " overlaps another fragment or leaves range");
        continue;
      }
      frag_of[v] = f.index;
    }
  for (int v = 0; v < n; ++v)
    if (frag_of[v] == -1) {
      fail(rep.partition_ok, "vertex " + std::to_string(v) + " not covered");
      break;
    }

  // per-fragment trees
  for (const Fragment& f : trace.fragments) {
    std::vector<char> in_f(n, 0);
    for (int v : f.vertices) in_f[v] = 1;
    if (f.vertices.empty() || !in_f[f.root]) {
      fail(rep.trees_ok, "fragment " + std::to_string(f.index) + " root outside fragment");
      continue;
    }
    if (f.tree_edges.size() + 1 != f.vertices.size()) {
      fail(rep.trees_ok, "fragment " + std::to_string(f.index) + " edge count is not size-1");
      continue;
    }
    bool edges_ok = true;
    for (auto [p, c] : f.tree_edges)
      if (!in_f[p] || !in_f[c] || !g.has_edge(p, c)) edges_ok = false;
    if (!edges_ok) {
      fail(rep.trees_ok, "fragment " + std::to_string(f.index) + " has a non-edge in its tree");
      continue;
    }
    // connectivity via parent reachability from the root
    std::vector<std::vector<int>> adj(n);
    for (auto [p, c] : f.tree_edges) {
      adj[p].push_back(c);
      adj[c].push_back(p);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> queue{f.root};
    seen[f.root] = 1;
    size_t reached = 1;
    for (size_t head = 0; head < queue.size(); ++head)
      for (int w : adj[queue[head]])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          queue.push_back(w);
        }
    if (reached != f.vertices.size())
      fail(rep.trees_ok, "fragment " + std::to_string(f.index) + " tree is disconnected");
    if (trace.variant == OrderVariant::successor && f.entry != -1 &&
        f.vertices.front() != f.entry)
      fail(rep.trees_ok, "fragment " + std::to_string(f.index) + " entry is not first");
  }

  if (trace.steps.size() != trace.fragments.size())
    fail(rep.steps_ok, "trace has " + std::to_string(trace.steps.size()) + " steps for " +
                           std::to_string(trace.fragments.size()) + " fragments");

  // step-by-step replay
  std::vector<char> unassigned(n, 1);
  std::vector<int> pos(n, -1);
  int next_pos = 0;
  for (size_t i = 0; i < trace.steps.size() && rep.ok; ++i) {
    const BuildStep& step = trace.steps[i];
    const Fragment& f = trace.fragments[i];
    auto comps = connected_components(g, &unassigned);
    if (comps.empty() || comps[0] != step.component) {
      fail(rep.steps_ok, "step " + std::to_string(i) + " component mismatch");
      break;
    }
    std::vector<Fragment> prefix(trace.fragments.begin(), trace.fragments.begin() + i);
    auto conn = connected_fragments(g, prefix, step.component);
    if (conn != step.connected) {
      fail(rep.steps_ok, "step " + std::to_string(i) + " connected-fragment list mismatch");
      break;
    }
    std::vector<char> in_c(n, 0);
    for (int v : step.component) in_c[v] = 1;
    bool inside = in_c[f.root];
    for (int v : f.vertices) inside = inside && in_c[v];
    if (!inside) {
      fail(rep.steps_ok, "step " + std::to_string(i) + " fragment leaves its component");
      break;
    }
    {
      ConstructionTrace pre;
      pre.fragments = prefix;
      if (compute_m(g, pre, step.component, step.root) != step.root_m) {
        fail(rep.steps_ok, "step " + std::to_string(i) + " recorded m(root) disagrees");
        break;
      }
    }

    // clique-minor invariant: connected fragments pairwise adjacent, and the
    // new fragment adjacent to each of them
    for (size_t a = 0; a < conn.size() && rep.minor_ok; ++a) {
      for (size_t b = a + 1; b < conn.size(); ++b)
        if (!detail::fragments_adjacent(g, trace.fragments[conn[a]], trace.fragments[conn[b]]))
          fail(rep.minor_ok, "step " + std::to_string(i) + ": fragments " +
                                 std::to_string(conn[a]) + " and " + std::to_string(conn[b]) +
                                 " not adjacent");
      if (!detail::fragments_adjacent(g, trace.fragments[conn[a]], f))
        fail(rep.minor_ok, "step " + std::to_string(i) + ": new fragment not adjacent to " +
                               std::to_string(conn[a]));
    }
    rep.max_clique_model = std::max(rep.max_clique_model, static_cast<int>(conn.size()) + 1);

    // successor bookkeeping
    if (trace.variant == OrderVariant::successor && !conn.empty()) {
      int js = conn.back();
      int want_anchor = -1;
      for (int x : trace.fragments[js].vertices) {
        bool adj = false;
        for (int u : g.neighbors(x))
          if (in_c[u]) {
            adj = true;
            break;
          }
        if (adj && (want_anchor == -1 || pos[x] > pos[want_anchor])) want_anchor = x;
      }
      int want_entry = -1;
      if (want_anchor != -1)
        for (int u : g.neighbors(want_anchor))
          if (in_c[u]) {
            want_entry = u;
            break;
          }
      if (f.anchor != want_anchor || f.entry != want_entry) {
        fail(rep.steps_ok, "step " + std::to_string(i) + " entry/anchor mismatch");
        break;
      }
    }

    // BFS isometry: tree depth equals distance from the root inside G[C]
    auto dist = bfs_distances(g, f.root, &in_c);
    std::vector<std::vector<int>> tree_adj(n);
    for (auto [p, c] : f.tree_edges) {
      tree_adj[p].push_back(c);
      tree_adj[c].push_back(p);
    }
    std::vector<int> tree_depth(n, -1);
    tree_depth[f.root] = 0;
    std::vector<int> frontier{f.root};
    for (size_t head = 0; head < frontier.size(); ++head)
      for (int w : tree_adj[frontier[head]])
        if (tree_depth[w] == -1) {
          tree_depth[w] = tree_depth[frontier[head]] + 1;
          frontier.push_back(w);
        }
    for (int v : f.vertices)
      if (tree_depth[v] != dist[v]) {
        fail(rep.isometry_ok, "step " + std::to_string(i) + ": vertex " + std::to_string(v) +
                                  " tree depth " + std::to_string(tree_depth[v]) +
                                  " vs distance " + std::to_string(dist[v]));
        break;
      }

    for (int v : f.vertices) {
      unassigned[v] = 0;
      pos[v] = next_pos++;
    }
  }
  return rep;
}

struct TraceStats {
  int fragment_count = 0;
  int max_root_m = 0;
  int max_tree_degree = 0;
  int max_fragment_size = 0;
  int max_connected = 0;
};

inline TraceStats trace_stats(const ConstructionTrace& trace) {
  TraceStats s;
  s.fragment_count = static_cast<int>(trace.fragments.size());
  for (const BuildStep& step : trace.steps) {
    s.max_root_m = std::max(s.max_root_m, step.root_m);
    s.max_connected = std::max(s.max_connected, static_cast<int>(step.connected.size()));
  }
  for (const Fragment& f : trace.fragments) {
    s.max_fragment_size = std::max(s.max_fragment_size, static_cast<int>(f.vertices.size()));
    std::unordered_map<int, int> deg;
    for (auto [p, c] : f.tree_edges) {
      ++deg[p];
      ++deg[c];
    }
    for (auto& [v, d] : deg) s.max_tree_degree = std::max(s.max_tree_degree, d);
  }
  return s;
}

}  // namespace gcn
