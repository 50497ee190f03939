#include "brooks/color_system.hpp"

#include <algorithm>
#include <string>

namespace brooks {

namespace {

std::string edge_name(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

void check_lists(const Graph& g, const std::vector<std::vector<Label>>& lists) {
  if (lists.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw Error(ErrorCode::ListSizeMismatch, std::to_string(lists.size()) + " lists for " +
                                                 std::to_string(g.vertex_count()) + " vertices");
  }
  for (std::size_t v = 1; v < lists.size(); ++v) {
    if (lists[v].size() != lists[0].size()) {
      throw Error(ErrorCode::RaggedLists, "list of vertex " + std::to_string(v) + " has " +
                                              std::to_string(lists[v].size()) + " labels, expected " +
                                              std::to_string(lists[0].size()));
    }
  }
}

std::vector<Label> flatten(const std::vector<std::vector<Label>>& lists) {
  std::vector<Label> out;
  for (const auto& l : lists) out.insert(out.end(), l.begin(), l.end());
  return out;
}

// (label, index) pairs of each list sorted by label.
std::vector<std::vector<std::pair<Label, ColorIndex>>> sorted_lists(
    const std::vector<std::vector<Label>>& lists, bool negate) {
  std::vector<std::vector<std::pair<Label, ColorIndex>>> out(lists.size());
  for (std::size_t v = 0; v < lists.size(); ++v) {
    for (std::size_t i = 0; i < lists[v].size(); ++i) {
      out[v].emplace_back(negate ? -lists[v][i] : lists[v][i], static_cast<ColorIndex>(i));
    }
    std::sort(out[v].begin(), out[v].end());
  }
  return out;
}

// Pairs of indices whose keys coincide; both inputs sorted by key.
std::vector<IndexPair> merge_equal(const std::vector<std::pair<Label, ColorIndex>>& a,
                                   const std::vector<std::pair<Label, ColorIndex>>& b) {
  std::vector<IndexPair> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      ++i;
    } else if (b[j].first < a[i].first) {
      ++j;
    } else {
      out.emplace_back(a[i++].second, b[j++].second);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ColorSystem ColorSystem::from_matchings(const Graph& g, ColorIndex k, std::vector<Label> labels,
                                        const std::vector<std::vector<IndexPair>>& matchings) {
  if (k < 0 || k > kMaxK) throw Error(ErrorCode::InvalidArgument, "list size outside [0, 32767]");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const auto m = static_cast<std::size_t>(g.edge_count());
  if (labels.size() != n * k) {
    throw Error(ErrorCode::ListSizeMismatch, "expected " + std::to_string(n * k) + " labels, got " +
                                                 std::to_string(labels.size()));
  }
  if (matchings.size() != m) {
    throw Error(ErrorCode::InvalidMatching, "expected " + std::to_string(m) + " edge matchings, got " +
                                                std::to_string(matchings.size()));
  }

  ColorSystem sys;
  sys.graph_ = &g;
  sys.k_ = k;
  sys.labels_ = std::move(labels);

  std::vector<Label> scratch;
  for (std::size_t v = 0; v < n; ++v) {
    auto l = sys.list(static_cast<Vertex>(v));
    scratch.assign(l.begin(), l.end());
    std::sort(scratch.begin(), scratch.end());
    auto dup = std::adjacent_find(scratch.begin(), scratch.end());
    if (dup != scratch.end()) {
      throw Error(ErrorCode::DuplicateLabelInList,
                  "label " + std::to_string(*dup) + " repeated in list of vertex " + std::to_string(v));
    }
  }

  sys.arc_of_edge_.resize(2 * m);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident_edges(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      const bool low = g.edge(inc[i]).u == v;
      sys.arc_of_edge_[2 * static_cast<std::size_t>(inc[i]) + (low ? 0 : 1)] = g.arc_begin(v) + i;
    }
  }

  const auto uk = static_cast<std::size_t>(k);
  sys.into_.assign(2 * m * uk, kNoColor);
  for (std::size_t e = 0; e < m; ++e) {
    const Edge& ed = g.edge(static_cast<EdgeId>(e));
    const std::size_t at_u = sys.arc_of_edge_[2 * e] * uk;      // index at v -> index at u
    const std::size_t at_v = sys.arc_of_edge_[2 * e + 1] * uk;  // index at u -> index at v
    for (auto [a, b] : matchings[e]) {
      if (a < 0 || a >= k || b < 0 || b >= k) {
        throw Error(ErrorCode::InvalidMatching, "index out of range on edge " + edge_name(ed));
      }
      std::int16_t& to_v = sys.into_[at_v + a];
      std::int16_t& to_u = sys.into_[at_u + b];
      if (to_v != kNoColor || to_u != kNoColor) {
        throw Error(ErrorCode::InvalidMatching, "matching on edge " + edge_name(ed) + " is not injective");
      }
      to_v = static_cast<std::int16_t>(b);
      to_u = static_cast<std::int16_t>(a);
    }
  }
  return sys;
}

std::optional<ColorIndex> ColorSystem::index_of(Vertex v, Label label) const {
  auto l = list(v);
  auto it = std::find(l.begin(), l.end(), label);
  if (it == l.end()) return std::nullopt;
  return static_cast<ColorIndex>(it - l.begin());
}

std::vector<IndexPair> ColorSystem::matching(EdgeId e) const {
  std::vector<IndexPair> out;
  for (ColorIndex a = 0; a < k_; ++a) {
    const ColorIndex b = across(e, graph_->edge(e).u, a);
    if (b != kNoColor) out.emplace_back(a, b);
  }
  return out;
}

Coloring Coloring::from_indices(std::vector<ColorIndex> indices) {
  Coloring c;
  c.index_.assign(indices.begin(), indices.end());
  return c;
}

bool Coloring::complete() const {
  return std::none_of(index_.begin(), index_.end(), [](ColorIndex i) { return i == kNoColor; });
}

void Coloring::assign(Vertex v, ColorIndex i) {
  if (index_[v] != kNoColor) {
    throw Error(ErrorCode::AlreadyColored, "vertex " + std::to_string(v) + " is already colored");
  }
  index_[v] = i;
}

ColorSystem plain_system(const Graph& g, ColorIndex k) {
  if (k < 0 || k > ColorSystem::kMaxK) throw Error(ErrorCode::InvalidArgument, "list size outside [0, 32767]");
  std::vector<Label> labels;
  labels.reserve(static_cast<std::size_t>(g.vertex_count()) * k);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (ColorIndex i = 0; i < k; ++i) labels.push_back(i);
  std::vector<IndexPair> identity;
  for (ColorIndex i = 0; i < k; ++i) identity.emplace_back(i, i);
  std::vector<std::vector<IndexPair>> matchings(g.edge_count(), identity);
  return ColorSystem::from_matchings(g, k, std::move(labels), matchings);
}

ColorSystem list_system(const Graph& g, const std::vector<std::vector<Label>>& lists) {
  check_lists(g, lists);
  const auto k = static_cast<ColorIndex>(lists.empty() ? 0 : lists[0].size());
  const auto sorted = sorted_lists(lists, false);
  std::vector<std::vector<IndexPair>> matchings(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    matchings[e] = merge_equal(sorted[g.edge(e).u], sorted[g.edge(e).v]);
  }
  return ColorSystem::from_matchings(g, k, flatten(lists), matchings);
}

ColorSystem signed_system(const SignedGraph& s, const std::vector<std::vector<Label>>& lists) {
  const Graph& g = s.graph;
  if (s.signs.size() != static_cast<std::size_t>(g.edge_count())) {
    throw Error(ErrorCode::InvalidArgument, "signed graph needs one sign per edge");
  }
  check_lists(g, lists);
  const auto k = static_cast<ColorIndex>(lists.empty() ? 0 : lists[0].size());
  const auto sorted = sorted_lists(lists, false);
  const auto negated = sorted_lists(lists, true);
  std::vector<std::vector<IndexPair>> matchings(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    matchings[e] = s.signs[e] == Sign::Plus ? merge_equal(sorted[ed.u], sorted[ed.v])
                                            : merge_equal(sorted[ed.u], negated[ed.v]);
  }
  return ColorSystem::from_matchings(g, k, flatten(lists), matchings);
}

std::vector<ColorIndex> blocked_indices(const ColorSystem& sys, Vertex v, const Coloring& c) {
  const Graph& g = sys.graph();
  std::vector<ColorIndex> out;
  auto nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i) {
    if (!c.is_colored(nb[i])) continue;
    const ColorIndex hit = sys.from_neighbor(v, i, c[nb[i]]);
    if (hit != kNoColor) out.push_back(hit);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ColorIndex first_free_index(const ColorSystem& sys, Vertex v, const Coloring& c) {
  const auto blocked = blocked_indices(sys, v, c);
  ColorIndex i = 0;
  for (ColorIndex b : blocked) {
    if (b != i) break;
    ++i;
  }
  if (i >= sys.k()) {
    throw Error(ErrorCode::NoFreeColor,
                "all " + std::to_string(sys.k()) + " colors of vertex " + std::to_string(v) + " are blocked");
  }
  return i;
}

Verdict respects(const ColorSystem& sys, const Coloring& c) {
  const Graph& g = sys.graph();
  if (c.size() != g.vertex_count() || !c.complete()) {
    throw Error(ErrorCode::PartialColoring, "coloring does not assign every vertex");
  }
  for (Vertex v = 0; v < c.size(); ++v) {
    if (c[v] >= sys.k()) {
      throw Error(ErrorCode::InvalidArgument, "color index of vertex " + std::to_string(v) + " out of range");
    }
  }
  // Arcs u -> w with u < w, scanned by u then w, are the canonical edges in id order.
  for (Vertex u = 0; u < c.size(); ++u) {
    auto nb = g.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] > u && sys.from_neighbor(u, i, c[nb[i]]) == c[u]) return {false, Edge{u, nb[i]}};
    }
  }
  return {};
}

}  // namespace brooks
