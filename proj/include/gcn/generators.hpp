#pragma once

#include <array>
#include <cstdint>

#include "gcn/graph.hpp"
#include "gcn/rng.hpp"

namespace gcn {

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
  return Graph::from_edges(n, es);
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
  if (n >= 3) es.emplace_back(n - 1, 0);
  return Graph::from_edges(n, es);
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

// K_{1,leaves}: centre is vertex 0.
inline Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> es;
  for (int v = 1; v <= leaves; ++v) es.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, es);
}

// rows x cols grid, ids row-major.
inline Graph grid_graph(int rows, int cols) {
  std::vector<std::pair<int, int>> es;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) es.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) es.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph::from_edges(rows * cols, es);
}

// Random tree by uniform attachment: vertex v joins a uniformly random
// earlier vertex.
inline Graph random_tree(int n, uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<std::pair<int, int>> es;
  for (int v = 1; v < n; ++v)
    es.emplace_back(static_cast<int>(rng_below(rng, static_cast<uint32_t>(v))), v);
  return Graph::from_edges(n, es);
}

// Random stacked (Apollonian-style) planar triangulation: start from a
// triangle and repeatedly insert a new vertex into a uniformly random face.
// Falls back to a path for n < 3.
inline Graph random_planar(int n, uint32_t seed) {
  if (n < 3) return path_graph(n);
  std::mt19937 rng(seed);
  std::vector<std::pair<int, int>> es{{0, 1}, {0, 2}, {1, 2}};
  std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 1, 2}};  // both sides
  for (int v = 3; v < n; ++v) {
    size_t f = rng_below(rng, static_cast<uint32_t>(faces.size()));
    auto [a, b, c] = faces[f];
    es.emplace_back(v, a);
    es.emplace_back(v, b);
    es.emplace_back(v, c);
    faces[f] = {a, b, v};
    faces.push_back({a, c, v});
    faces.push_back({b, c, v});
  }
  return Graph::from_edges(n, es);
}

inline Graph gnp(int n, double p, uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng_chance(rng, p)) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  auto es = a.edges();
  for (auto [u, v] : b.edges())
    es.emplace_back(u + a.vertex_count(), v + a.vertex_count());
  return Graph::from_edges(a.vertex_count() + b.vertex_count(), es);
}

}  // namespace gcn
