#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "brooks/huge_vector.hpp"
#include "brooks/types.hpp"

namespace brooks {

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Vertices are the dense ids 0..n-1. Every vertex's neighbor range is sorted
/// ascending, and `incident_edges(v)[i]` is the id of the canonical edge
/// joining `v` and `neighbors(v)[i]`. Edge ids follow the lexicographic order
/// of the canonical (u < v) pairs.
class Graph {
 public:
  Graph() = default;

  /// Builds and validates. Throws SelfLoop, DuplicateEdge, VertexOutOfRange.
  static Graph from_edges(Vertex n, std::span<const Edge> edges);

  Vertex vertex_count() const { return static_cast<Vertex>(offsets_.size()) - 1; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::span<const EdgeId> incident_edges(Vertex v) const {
    return {incident_.data() + offsets_[v], incident_.data() + offsets_[v + 1]};
  }
  Vertex degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  /// Position of neighbors(v)[0] in the flat adjacency array; slot
  /// `arc_begin(v) + i` stands for the directed arc v -> neighbors(v)[i].
  std::size_t arc_begin(Vertex v) const { return static_cast<std::size_t>(offsets_[v]); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  /// Binary search over the sorted neighbor list of `u`.
  std::optional<EdgeId> edge_between(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return edge_between(u, v).has_value(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  HugeVector<Vertex> offsets_{0};
  HugeVector<Vertex> adjacency_;
  HugeVector<EdgeId> incident_;
  std::vector<Edge> edges_;
};

inline Graph build_graph(Vertex n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

/// 0 for the empty and the edgeless graph.
Vertex max_degree(const Graph& g);

struct ComponentPartition {
  std::vector<Vertex> component_of;
  std::vector<std::vector<Vertex>> components;  // each sorted ascending
};

/// Components are numbered in order of their smallest vertex.
ComponentPartition connected_components(const Graph& g);

/// First pair (x, y), x < y, of neighbors of `v` that are not adjacent, in
/// lexicographic order. Empty when N[v] induces a clique.
std::optional<std::pair<Vertex, Vertex>> find_nonadjacent_neighbors(const Graph& g, Vertex v);

}  // namespace brooks
