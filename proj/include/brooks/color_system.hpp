#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "brooks/graph.hpp"

namespace brooks {

using IndexPair = std::pair<ColorIndex, ColorIndex>;

/// Correspondence-coloring instance: every vertex carries an ordered list of
/// k distinct labels, and every edge carries a partial matching between the
/// two endpoint lists. A matched pair of indices may not be used together.
///
/// Colors are always addressed by index into the owning vertex's list. Plain,
/// list and signed coloring are constructors over this one representation.
///
/// The system keeps a pointer to its graph; the graph must outlive it.
class ColorSystem {
 public:
  /// Largest supported list size; matchings are stored as 16-bit indices.
  static constexpr ColorIndex kMaxK = 32767;

  /// `labels` holds n lists of k labels back to back. `matchings[e]` lists
  /// (index at edge(e).u, index at edge(e).v) pairs for canonical edge e.
  /// Throws ListSizeMismatch, DuplicateLabelInList, InvalidMatching.
  static ColorSystem from_matchings(const Graph& g, ColorIndex k, std::vector<Label> labels,
                                    const std::vector<std::vector<IndexPair>>& matchings);
  static ColorSystem from_matchings(Graph&&, ColorIndex, std::vector<Label>,
                                    const std::vector<std::vector<IndexPair>>&) = delete;

  const Graph& graph() const { return *graph_; }
  ColorIndex k() const { return k_; }

  std::span<const Label> list(Vertex v) const {
    return {labels_.data() + static_cast<std::size_t>(v) * k_, static_cast<std::size_t>(k_)};
  }
  Label label(Vertex v, ColorIndex i) const { return labels_[static_cast<std::size_t>(v) * k_ + i]; }
  std::optional<ColorIndex> index_of(Vertex v, Label label) const;

  /// Index on the far side of edge `e` matched to index `i` at endpoint
  /// `from`, or kNoColor when `i` is unmatched.
  ColorIndex across(EdgeId e, Vertex from, ColorIndex i) const {
    const bool from_low = from == graph_->edge(e).u;
    return into_[arc_of_edge_[2 * static_cast<std::size_t>(e) + (from_low ? 1 : 0)] * k_ + i];
  }

  /// Index at v matched to index `i` held by neighbors(v)[slot], or
  /// kNoColor. Reads v's own arc block, so scanning every neighbor of v
  /// walks memory sequentially.
  ColorIndex from_neighbor(Vertex v, std::size_t slot, ColorIndex i) const {
    return into_[(graph_->arc_begin(v) + slot) * k_ + i];
  }

  /// Cache hint for an upcoming from_neighbor scan of v.
  void prefetch_arcs(Vertex v) const {
    __builtin_prefetch(into_.data() + graph_->arc_begin(v) * k_);
  }

  /// Matched pairs of canonical edge e, ordered by the index at edge(e).u.
  std::vector<IndexPair> matching(EdgeId e) const;

 private:
  const Graph* graph_ = nullptr;
  ColorIndex k_ = 0;
  std::vector<Label> labels_;
  // Per directed arc v -> w, k slots: index at w -> matched index at v.
  HugeVector<std::int16_t> into_;
  // Per canonical edge (u, v): the arc slot of u -> v, then of v -> u.
  std::vector<std::size_t> arc_of_edge_;
};

/// Partial assignment vertex -> color index. A vertex is assigned at most once.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(Vertex n) : index_(n, kNoColor) {}
  static Coloring from_indices(std::vector<ColorIndex> indices);

  Vertex size() const { return static_cast<Vertex>(index_.size()); }
  bool is_colored(Vertex v) const { return index_[v] != kNoColor; }
  ColorIndex operator[](Vertex v) const { return index_[v]; }
  std::span<const ColorIndex> indices() const { return index_; }
  bool complete() const;

  /// Throws AlreadyColored if `v` already holds a color.
  void assign(Vertex v, ColorIndex i);

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  HugeVector<ColorIndex> index_;
};

enum class Sign : char { Plus = '+', Minus = '-' };

struct SignedGraph {
  Graph graph;
  std::vector<Sign> signs;  // one per canonical edge id
};

/// Every list is [0, k); every matching is the identity.
ColorSystem plain_system(const Graph& g, ColorIndex k);
ColorSystem plain_system(Graph&&, ColorIndex) = delete;

/// Equal labels across an edge are matched. Throws RaggedLists,
/// DuplicateLabelInList, ListSizeMismatch (list count != n).
ColorSystem list_system(const Graph& g, const std::vector<std::vector<Label>>& lists);
ColorSystem list_system(Graph&&, const std::vector<std::vector<Label>>&) = delete;

/// '+' edges match equal labels, '-' edges match a with -a.
/// The result refers to `s.graph`.
ColorSystem signed_system(const SignedGraph& s, const std::vector<std::vector<Label>>& lists);
ColorSystem signed_system(SignedGraph&&, const std::vector<std::vector<Label>>&) = delete;

/// Indices of L(v) hit by the matchings from colored neighbors, ascending.
std::vector<ColorIndex> blocked_indices(const ColorSystem& sys, Vertex v, const Coloring& c);

/// Smallest index of L(v) not blocked. Throws NoFreeColor.
ColorIndex first_free_index(const ColorSystem& sys, Vertex v, const Coloring& c);

struct Verdict {
  bool ok = true;
  std::optional<Edge> witness;  // a violating edge when !ok
};

/// Whether no edge carries a matched pair of assigned indices. Reports the
/// smallest violating canonical edge. Throws PartialColoring.
Verdict respects(const ColorSystem& sys, const Coloring& c);

}  // namespace brooks
