#pragma once

// Shared test fixtures and brute-force checkers. The checkers here work from
// raw edge lists or adjacency matrices so they stay independent of the
// library code they are used to validate.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "brooks/color_system.hpp"
#include "brooks/graph.hpp"
#include "brooks/random.hpp"

namespace fixtures {

using brooks::Edge;
using brooks::Graph;
using brooks::Label;
using brooks::Vertex;

inline Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return Graph::from_edges(10, e);
}

// K3 x K2: triangles 0-1-2 and 3-4-5 with rungs i -- i+3.
inline Graph prism() {
  return Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

inline Graph k4_minus_edge() {
  return Graph::from_edges(4, std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// Dense adjacency matrix from the edge list.
inline std::vector<std::vector<char>> matrix(const Graph& g) {
  std::vector<std::vector<char>> adj(g.vertex_count(), std::vector<char>(g.vertex_count(), 0));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  return adj;
}

// Classical properness: no edge has equal colors at both ends.
inline bool naive_proper(const Graph& g, const std::vector<int>& color) {
  for (const Edge& e : g.edges())
    if (color[e.u] == color[e.v]) return false;
  return true;
}

// '+' edges need distinct labels, '-' edges need labels not summing to 0.
inline bool signed_proper(const brooks::SignedGraph& s, const std::vector<Label>& label) {
  for (std::size_t i = 0; i < s.graph.edges().size(); ++i) {
    const Edge& e = s.graph.edges()[i];
    if (s.signs[i] == brooks::Sign::Plus && label[e.u] == label[e.v]) return false;
    if (s.signs[i] == brooks::Sign::Minus && label[e.u] + label[e.v] == 0) return false;
  }
  return true;
}

// Subset enumeration over at most ~20 vertices.
inline bool brute_has_clique(const Graph& g, int size) {
  const int n = g.vertex_count();
  if (size <= 0) return true;
  if (size > n) return false;
  auto adj = matrix(g);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != size) continue;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !adj[a][b]) ok = false;
    if (ok) return true;
  }
  return false;
}

// Random graph on n vertices with maximum degree at most cap: shuffle all
// pairs and keep each one while both endpoints have room, up to `want` edges.
inline Graph capped_random_graph(Vertex n, Vertex cap, std::size_t want, brooks::Rng& rng) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  rng.shuffle(pairs.begin(), pairs.end());
  std::vector<Vertex> deg(n, 0);
  std::vector<Edge> keep;
  for (const Edge& e : pairs) {
    if (keep.size() >= want) break;
    if (deg[e.u] < cap && deg[e.v] < cap) {
      ++deg[e.u];
      ++deg[e.v];
      keep.push_back(e);
    }
  }
  return Graph::from_edges(n, keep);
}

// n lists of k distinct labels drawn from [lo, hi].
inline std::vector<std::vector<Label>> random_lists(Vertex n, int k, Label lo, Label hi, brooks::Rng& rng) {
  std::vector<Label> pool;
  for (Label x = lo; x <= hi; ++x) pool.push_back(x);
  std::vector<std::vector<Label>> lists(n);
  for (auto& l : lists) {
    rng.shuffle(pool.begin(), pool.end());
    l.assign(pool.begin(), pool.begin() + k);
  }
  return lists;
}

inline std::vector<int> as_ints(const brooks::Coloring& c) {
  return std::vector<int>(c.indices().begin(), c.indices().end());
}

}  // namespace fixtures
