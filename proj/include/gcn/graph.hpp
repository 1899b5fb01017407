#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcn {

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

inline VertexSet make_vertex_set(std::vector<int> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

inline bool set_contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

// Immutable simple undirected graph in CSR form. Vertex ids are dense 0..n-1,
// adjacency lists are sorted.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    std::vector<std::pair<int, int>> es;
    es.reserve(edges.size());
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("self-loops are not allowed");
      es.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());

    Graph g;
    g.n_ = n;
    g.m_ = static_cast<int>(es.size());
    std::vector<int> deg(n, 0);
    for (auto [u, v] : es) {
      deg[u]++;
      deg[v]++;
    }
    g.offsets_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.nbrs_.resize(2 * es.size());
    std::vector<int> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : es) {
      g.nbrs_[cursor[u]++] = v;
      g.nbrs_[cursor[v]++] = u;
    }
    for (int v = 0; v < n; ++v)
      std::sort(g.nbrs_.begin() + g.offsets_[v], g.nbrs_.begin() + g.offsets_[v + 1]);
    return g;
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  std::span<const int> neighbors(int v) const {
    return {nbrs_.data() + offsets_[v], nbrs_.data() + offsets_[v + 1]};
  }

  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  // All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(m_);
    for (int u = 0; u < n_; ++u)
      for (int v : neighbors(u))
        if (u < v) es.emplace_back(u, v);
    return es;
  }

  Graph with_edges_added(const std::vector<std::pair<int, int>>& extra) const {
    auto es = edges();
    es.insert(es.end(), extra.begin(), extra.end());
    return from_edges(n_, es);
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<int> offsets_{0};
  std::vector<int> nbrs_;
};

// A linear order on the vertices: position(v) is v's rank, at(k) the vertex of
// rank k. Smaller position == smaller in the order.
class LinearOrder {
 public:
  LinearOrder() = default;

  static LinearOrder from_sequence(std::vector<int> seq) {
    LinearOrder ord;
    int n = static_cast<int>(seq.size());
    ord.pos_.assign(n, -1);
    for (int k = 0; k < n; ++k) {
      int v = seq[k];
      if (v < 0 || v >= n) throw std::invalid_argument("order entry out of range");
      if (ord.pos_[v] != -1) throw std::invalid_argument("order repeats a vertex");
      ord.pos_[v] = k;
    }
    ord.seq_ = std::move(seq);
    return ord;
  }

  static LinearOrder identity(int n) {
    std::vector<int> seq(n);
    for (int v = 0; v < n; ++v) seq[v] = v;
    return from_sequence(std::move(seq));
  }

  int size() const { return static_cast<int>(seq_.size()); }
  int position(int v) const { return pos_[v]; }
  int at(int rank) const { return seq_[rank]; }
  bool before(int u, int v) const { return pos_[u] < pos_[v]; }
  const std::vector<int>& sequence() const { return seq_; }

 private:
  std::vector<int> seq_;
  std::vector<int> pos_;
};

// ---------------------------------------------------------------------------
// Breadth-first search utilities. `alive` masks restrict the search to an
// induced subgraph without materialising it; the source must be alive.
// ---------------------------------------------------------------------------

inline std::vector<int> bfs_distances(const Graph& g, int source,
                                      const std::vector<char>* alive = nullptr) {
  std::vector<int> dist(g.vertex_count(), -1);
  if (alive && !(*alive)[source]) return dist;
  std::vector<int> queue;
  queue.reserve(g.vertex_count());
  dist[source] = 0;
  queue.push_back(source);
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int w : g.neighbors(u)) {
      if (dist[w] != -1) continue;
      if (alive && !(*alive)[w]) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

// Distance between u and v (in G, or in G restricted to `alive`); -1 if
// unreachable.
inline int distance(const Graph& g, int u, int v,
                    const std::vector<char>* alive = nullptr) {
  return bfs_distances(g, u, alive)[v];
}

// Closed ball of radius r around v: all vertices at distance <= r.
inline VertexSet r_ball(const Graph& g, int v, int r,
                        const std::vector<char>* alive = nullptr) {
  std::vector<int> dist(g.vertex_count(), -1);
  VertexSet ball;
  if (alive && !(*alive)[v]) return ball;
  if (r < 0) return ball;
  std::vector<int> queue{v};
  dist[v] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    if (dist[u] == r) continue;
    for (int w : g.neighbors(u)) {
      if (dist[w] != -1) continue;
      if (alive && !(*alive)[w]) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  for (int u = 0; u < g.vertex_count(); ++u)
    if (dist[u] != -1) ball.push_back(u);
  return ball;
}

// Connected components, ordered by their smallest vertex id; each component is
// sorted.
inline std::vector<VertexSet> connected_components(
    const Graph& g, const std::vector<char>* alive = nullptr) {
  std::vector<VertexSet> comps;
  std::vector<char> seen(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (seen[v]) continue;
    if (alive && !(*alive)[v]) continue;
    VertexSet comp;
    std::vector<int> queue{v};
    seen[v] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      comp.push_back(u);
      for (int w : g.neighbors(u)) {
        if (seen[w]) continue;
        if (alive && !(*alive)[w]) continue;
        seen[w] = 1;
        queue.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_original;  // new id -> old id (sorted ascending)
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedSubgraph sub;
  sub.to_original = keep;
  std::vector<int> to_new(g.vertex_count(), -1);
  for (size_t i = 0; i < keep.size(); ++i) to_new[keep[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> es;
  for (int u : keep)
    for (int w : g.neighbors(u))
      if (u < w && to_new[w] != -1) es.emplace_back(to_new[u], to_new[w]);
  sub.graph = Graph::from_edges(static_cast<int>(keep.size()), es);
  return sub;
}

// ---------------------------------------------------------------------------
// Edge-list file format.
//
//   # comment lines and blank lines are skipped
//   p <n> <m>        optional header, at most once, before any edge
//   <u> <v>          one edge per line, whitespace separated
//
// With a header, ids must be dense (0 <= id < n). Without one, arbitrary
// non-negative ids are accepted and remapped to 0..k-1 in ascending order;
// the mapping is returned alongside the graph. Self-loops are rejected,
// duplicate edges collapse, and a declared edge count that disagrees with the
// de-duplicated count produces a warning rather than an error.
// ---------------------------------------------------------------------------

struct ParsedGraph {
  Graph graph;
  std::vector<long long> original_ids;  // dense id -> id as written in the file
  bool remapped = false;
  std::vector<std::string> warnings;
};

namespace detail {

inline bool parse_ll(const std::string& tok, long long& out) {
  if (tok.empty()) return false;
  for (char c : tok)
    if (c < '0' || c > '9') return false;
  if (tok.size() > 18) return false;
  out = 0;
  for (char c : tok) out = out * 10 + (c - '0');
  return true;
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream iss(line);
  std::string t;
  while (iss >> t) toks.push_back(t);
  return toks;
}

}  // namespace detail

inline ParsedGraph parse_graph(std::istream& in) {
  ParsedGraph result;
  bool have_header = false;
  long long declared_n = 0, declared_m = 0;
  std::vector<std::pair<long long, long long>> raw_edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks[0] == "p") {
      if (have_header)
        throw std::runtime_error("line " + std::to_string(line_no) + ": duplicate header");
      if (!raw_edges.empty())
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": header must precede edges");
      if (toks.size() != 3 || !detail::parse_ll(toks[1], declared_n) ||
          !detail::parse_ll(toks[2], declared_m))
        throw std::runtime_error("line " + std::to_string(line_no) + ": malformed header");
      have_header = true;
      continue;
    }
    long long u, v;
    if (toks.size() != 2 || !detail::parse_ll(toks[0], u) || !detail::parse_ll(toks[1], v))
      throw std::runtime_error("line " + std::to_string(line_no) + ": malformed edge line");
    if (u == v)
      throw std::runtime_error("line " + std::to_string(line_no) + ": self-loop rejected");
    if (have_header && (u >= declared_n || v >= declared_n))
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": vertex id >= declared vertex count");
    raw_edges.emplace_back(u, v);
  }

  int n;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(raw_edges.size());
  if (have_header) {
    n = static_cast<int>(declared_n);
    result.original_ids.resize(n);
    for (int v = 0; v < n; ++v) result.original_ids[v] = v;
    for (auto [u, v] : raw_edges)
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  } else {
    std::vector<long long> ids;
    for (auto [u, v] : raw_edges) {
      ids.push_back(u);
      ids.push_back(v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    n = static_cast<int>(ids.size());
    result.original_ids = ids;
    for (int v = 0; v < n; ++v)
      if (ids[v] != v) result.remapped = true;
    auto dense = [&](long long id) {
      return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
    };
    for (auto [u, v] : raw_edges) edges.emplace_back(dense(u), dense(v));
  }

  result.graph = Graph::from_edges(n, edges);
  if (result.graph.edge_count() < static_cast<int>(edges.size()))
    result.warnings.push_back("duplicate edges collapsed: " +
                              std::to_string(edges.size()) + " lines, " +
                              std::to_string(result.graph.edge_count()) + " distinct edges");
  if (have_header && declared_m != result.graph.edge_count())
    result.warnings.push_back("header declares " + std::to_string(declared_m) +
                              " edges but file holds " +
                              std::to_string(result.graph.edge_count()));
  return result;
}

inline ParsedGraph parse_graph(const std::string& text) {
  std::istringstream iss(text);
  return parse_graph(iss);
}

// Canonical form: header line, then edges with u < v in lexicographic order.
inline std::string serialise_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

// Order files: one vertex id per line, smallest-in-order first.
inline LinearOrder parse_order(std::istream& in, int n) {
  std::vector<int> seq;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    long long v;
    if (toks.size() != 1 || !detail::parse_ll(toks[0], v))
      throw std::runtime_error("line " + std::to_string(line_no) + ": malformed order line");
    seq.push_back(static_cast<int>(v));
  }
  if (static_cast<int>(seq.size()) != n)
    throw std::runtime_error("order lists " + std::to_string(seq.size()) +
                             " vertices, graph has " + std::to_string(n));
  return LinearOrder::from_sequence(std::move(seq));
}

inline LinearOrder parse_order(const std::string& text, int n) {
  std::istringstream iss(text);
  return parse_order(iss, n);
}

inline std::string serialise_order(const LinearOrder& ord) {
  std::ostringstream out;
  for (int k = 0; k < ord.size(); ++k) out << ord.at(k) << "\n";
  return out.str();
}

}  // namespace gcn
