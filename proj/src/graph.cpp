#include "brooks/graph.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace brooks {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::InfeasibleDegreeSequence: return "InfeasibleDegreeSequence";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::TooManyEdges: return "TooManyEdges";
    case ErrorCode::RaggedLists: return "RaggedLists";
    case ErrorCode::DuplicateLabelInList: return "DuplicateLabelInList";
    case ErrorCode::InvalidMatching: return "InvalidMatching";
    case ErrorCode::NoFreeColor: return "NoFreeColor";
    case ErrorCode::AlreadyColored: return "AlreadyColored";
    case ErrorCode::PartialColoring: return "PartialColoring";
    case ErrorCode::ListSizeMismatch: return "ListSizeMismatch";
    case ErrorCode::DegreeExceedsK: return "DegreeExceedsK";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
  if (n < 0) {
    throw Error(ErrorCode::InvalidArgument, "negative vertex count");
  }
  Graph g;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") outside [0," + std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    }
    g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw Error(ErrorCode::DuplicateEdge, "duplicate edge (" + std::to_string(dup->u) + "," +
                                              std::to_string(dup->v) + ")");
  }

  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

  g.adjacency_.resize(2 * g.edges_.size());
  g.incident_.resize(2 * g.edges_.size());
  std::vector<Vertex> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Two passes over the sorted edge list keep each neighbor range sorted:
  // first the neighbors smaller than the owner, then the larger ones.
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edges_[id];
    g.adjacency_[cursor[e.v]] = e.u;
    g.incident_[cursor[e.v]++] = id;
  }
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edges_[id];
    g.adjacency_[cursor[e.u]] = e.v;
    g.incident_[cursor[e.u]++] = id;
  }

#ifndef NDEBUG
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    assert(std::is_sorted(nb.begin(), nb.end()));
    degree_sum += nb.size();
  }
  assert(degree_sum == 2 * g.edges_.size());
#endif
  return g;
}

std::optional<EdgeId> Graph::edge_between(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return incident_edges(u)[it - nb.begin()];
}

Vertex max_degree(const Graph& g) {
  Vertex best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

ComponentPartition connected_components(const Graph& g) {
  const Vertex n = g.vertex_count();
  ComponentPartition part;
  part.component_of.assign(n, -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (part.component_of[s] != -1) continue;
    const auto id = static_cast<Vertex>(part.components.size());
    auto& members = part.components.emplace_back();
    part.component_of[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (part.component_of[w] == -1) {
          part.component_of[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
  }
  return part;
}

std::optional<std::pair<Vertex, Vertex>> find_nonadjacent_neighbors(const Graph& g, Vertex v) {
  auto nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i) {
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      if (!g.adjacent(nb[i], nb[j])) return std::pair{nb[i], nb[j]};
    }
  }
  return std::nullopt;
}

}  // namespace brooks
